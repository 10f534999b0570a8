#include "addsys/systems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace addsys {

AdditiveSystem::AdditiveSystem(std::vector<Member> members)
    : members_(std::move(members)) {
    if (members_.empty()) throw Error("additive system needs at least one member");
    std::set<std::string> labels;
    for (const auto& m : members_) {
        if (!labels.insert(m.label).second) throw DuplicateLabel(m.label);
        if (!m.set.has_two_elements()) {
            throw Error("member " + m.label + " must have at least 2 elements");
        }
        if (m.set.is_tail() && members_.size() > 1) {
            throw Error("member " + m.label +
                        " denotes N0, allowed only in the singleton system");
        }
    }
}

bool AdditiveSystem::has_member(const std::string& label) const {
    for (const auto& m : members_) {
        if (m.label == label) return true;
    }
    return false;
}

const Member& AdditiveSystem::member(const std::string& label) const {
    for (const auto& m : members_) {
        if (m.label == label) return m;
    }
    throw Error("no member labeled " + label);
}

AdditiveSystem singleton_system(const std::string& label) {
    return AdditiveSystem({{label, StructuredSet::tail()}});
}

AdditiveSystem without_member(const AdditiveSystem& sys, const std::string& label) {
    if (!sys.has_member(label)) throw Error("no member labeled " + label);
    std::vector<Member> rest;
    for (const auto& m : sys.members()) {
        if (m.label != label) rest.push_back(m);
    }
    return AdditiveSystem(std::move(rest));
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    if (valid()) {
        os << "Valid up to " << bound.n_max;
    } else if (const auto* m = std::get_if<MissingRepresentation>(&verdict)) {
        os << "MissingRepresentation(" << m->n << ")";
    } else if (const auto* d = std::get_if<DuplicateRepresentation>(&verdict)) {
        os << "DuplicateRepresentation(" << d->n << ")";
    } else if (const auto* o = std::get_if<OverlapViolation>(&verdict)) {
        os << "OverlapViolation(" << o->i << ", " << o->j << ", " << o->n << ")";
    }
    return os.str();
}

std::vector<Representation> representations_of(const AdditiveSystem& sys, const Int& n) {
    if (n < 0) return {};
    const auto& ms = sys.members();
    std::vector<std::vector<Int>> elems;
    elems.reserve(ms.size());
    for (const auto& m : ms) elems.push_back(m.set.enumerate(Bound(n + 1)));

    std::vector<Representation> out;
    Representation cur;
    std::function<void(std::size_t, const Int&)> dfs = [&](std::size_t idx,
                                                           const Int& rem) {
        if (idx == ms.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (const Int& e : elems[idx]) {
            if (e > rem) break;
            if (e > 0) cur.terms.emplace_back(ms[idx].label, e);
            dfs(idx + 1, rem - e);
            if (e > 0) cur.terms.pop_back();
        }
    };
    dfs(0, n);
    return out;
}

VerificationReport verify(const AdditiveSystem& sys, const Bound& b) {
    const auto W = b.window();
    const auto& ms = sys.members();

    std::vector<std::vector<Int>> elems;
    elems.reserve(ms.size());
    for (const auto& m : ms) elems.push_back(m.set.enumerate(b));

    std::vector<unsigned> counts(W, 0);
    std::vector<Representation> first(W);
    std::map<unsigned long long, std::pair<Representation, Representation>> dups;

    Representation cur;
    std::function<void(std::size_t, const Int&)> dfs = [&](std::size_t idx,
                                                           const Int& sum) {
        if (idx == ms.size()) {
            auto k = sum.convert_to<unsigned long long>();
            if (++counts[k] == 1) {
                first[k] = cur;
            } else if (counts[k] == 2) {
                dups.emplace(k, std::make_pair(first[k], cur));
            }
            return;
        }
        for (const Int& e : elems[idx]) {
            if (sum + e >= b.n_max) break;
            if (e > 0) cur.terms.emplace_back(ms[idx].label, e);
            dfs(idx + 1, sum + e);
            if (e > 0) cur.terms.pop_back();
        }
    };
    dfs(0, 0);

    for (unsigned long long k = 0; k < W; ++k) {
        if (counts[k] == 1) continue;
        if (counts[k] == 0) {
            return {b, MissingRepresentation{Int(k)}, Int(k)};
        }
        const auto& [r1, r2] = dups.at(k);
        // Two single-term representations of the same n mean two members
        // intersect beyond {0}.
        if (r1.terms.size() == 1 && r2.terms.size() == 1) {
            return {b, OverlapViolation{r1.terms[0].first, r2.terms[0].first, Int(k)},
                    Int(k)};
        }
        return {b, DuplicateRepresentation{Int(k), r1, r2}, Int(k)};
    }
    return {b, Valid{}, Int(W)};
}

VerificationReport subfamily_rigidity_check(const AdditiveSystem& sys,
                                            const std::string& drop, const Bound& b) {
    const Member& m = sys.member(drop);
    Int lp = m.set.least_positive();
    if (lp >= b.n_max) {
        throw BoundTooSmall("bound " + b.n_max.str() +
                            " does not exceed least positive element " + lp.str() +
                            " of dropped member " + drop);
    }
    if (sys.size() == 1) {
        throw Error("cannot drop the only member of a system");
    }
    return verify(without_member(sys, drop), b);
}

}  // namespace addsys
