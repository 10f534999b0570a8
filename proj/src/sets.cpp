#include "addsys/sets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace addsys {

StructuredSet StructuredSet::finite(std::vector<Int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty() || elems.front() != 0) {
        throw NonZeroBase("finite set must contain 0");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Finite;
    node->elems = std::move(elems);
    return StructuredSet(std::move(node));
}

StructuredSet StructuredSet::interval(const Int& g) {
    if (g < 1) throw Error("interval upper bound must be >= 1");
    if (g == 1) return finite({0});
    auto node = std::make_shared<Node>();
    node->kind = Kind::Interval;
    node->g = g;
    return StructuredSet(std::move(node));
}

StructuredSet StructuredSet::tail() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Tail;
    return StructuredSet(std::move(node));
}

StructuredSet StructuredSet::dilated(const Int& scale, const StructuredSet& inner) {
    if (scale < 1) throw Error("dilation scale must be >= 1");
    if (scale == 1) return inner;
    if (inner.is_singleton_zero()) return inner;
    if (inner.kind() == Kind::Dilated) {
        return dilated(scale * inner.scale(), inner.inner());
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Dilated;
    node->g = scale;
    node->children.push_back(inner);
    return StructuredSet(std::move(node));
}

const std::vector<Int>& StructuredSet::elements() const {
    if (kind() != Kind::Finite) throw Error("elements(): not a finite set");
    return node_->elems;
}

const Int& StructuredSet::upper() const {
    if (kind() != Kind::Interval) throw Error("upper(): not an interval");
    return node_->g;
}

const Int& StructuredSet::scale() const {
    if (kind() != Kind::Dilated) throw Error("scale(): not a dilation");
    return node_->g;
}

const StructuredSet& StructuredSet::inner() const {
    if (kind() != Kind::Dilated) throw Error("inner(): not a dilation");
    return node_->children.front();
}

const std::vector<StructuredSet>& StructuredSet::parts() const {
    if (kind() != Kind::DirectSum) throw Error("parts(): not a direct sum");
    return node_->children;
}

bool StructuredSet::is_singleton_zero() const {
    return kind() == Kind::Finite && node_->elems.size() == 1;
}

namespace {

// Does some choice of one element per part (from index idx on) sum to rem?
// The last part is answered by exact membership, so a single infinite part
// costs nothing no matter how large rem is.
bool sum_reaches(const std::vector<StructuredSet>& parts, std::size_t idx,
                 const Int& rem) {
    if (rem < 0) return false;
    if (idx == parts.size()) return rem == 0;
    if (idx + 1 == parts.size()) return parts[idx].contains(rem);
    for (const Int& e : parts[idx].enumerate(Bound(rem + 1))) {
        if (sum_reaches(parts, idx + 1, rem - e)) return true;
    }
    return false;
}

}  // namespace

bool StructuredSet::contains(const Int& n) const {
    if (n < 0) return false;
    switch (kind()) {
        case Kind::Finite:
            return std::binary_search(node_->elems.begin(), node_->elems.end(), n);
        case Kind::Interval:
            return n < node_->g;
        case Kind::Tail:
            return true;
        case Kind::Dilated:
            return n % node_->g == 0 && inner().contains(n / node_->g);
        case Kind::DirectSum: {
            // Enumerated parts go first, so an infinite part (if any) lands
            // in the membership-only last slot.
            std::vector<StructuredSet> ordered = node_->children;
            std::stable_partition(ordered.begin(), ordered.end(),
                                  [](const StructuredSet& p) { return p.is_finite(); });
            return sum_reaches(ordered, 0, n);
        }
    }
    return false;
}

std::vector<Int> StructuredSet::enumerate(const Bound& b) const {
    switch (kind()) {
        case Kind::Finite: {
            std::vector<Int> out;
            for (const Int& e : node_->elems) {
                if (e >= b.n_max) break;
                out.push_back(e);
            }
            return out;
        }
        case Kind::Interval: {
            std::vector<Int> out;
            Int hi = std::min(node_->g, b.n_max);
            for (Int i = 0; i < hi; ++i) out.push_back(i);
            return out;
        }
        case Kind::Tail: {
            std::vector<Int> out;
            for (Int i = 0; i < b.n_max; ++i) out.push_back(i);
            return out;
        }
        case Kind::Dilated: {
            std::vector<Int> out;
            for (const Int& e : inner().enumerate(Bound(ceil_div(b.n_max, node_->g)))) {
                out.push_back(e * node_->g);
            }
            return out;
        }
        case Kind::DirectSum: {
            std::set<Int> acc;
            std::function<void(std::size_t, const Int&)> dfs =
                [&](std::size_t idx, const Int& sum) {
                    if (idx == node_->children.size()) {
                        acc.insert(sum);
                        return;
                    }
                    for (const Int& e :
                         node_->children[idx].enumerate(Bound(b.n_max - sum))) {
                        dfs(idx + 1, sum + e);
                    }
                };
            dfs(0, 0);
            return {acc.begin(), acc.end()};
        }
    }
    return {};
}

bool StructuredSet::is_finite() const {
    switch (kind()) {
        case Kind::Finite:
        case Kind::Interval:
            return true;
        case Kind::Tail:
            return false;
        case Kind::Dilated:
            return inner().is_finite();
        case Kind::DirectSum:
            for (const auto& p : node_->children) {
                if (!p.is_finite()) return false;
            }
            return true;
    }
    return true;
}

bool StructuredSet::has_two_elements() const {
    switch (kind()) {
        case Kind::Finite:
            return node_->elems.size() >= 2;
        case Kind::Interval:
        case Kind::Tail:
            return true;  // interval(1) normalizes to {0}
        case Kind::Dilated:
            return inner().has_two_elements();
        case Kind::DirectSum:
            return true;  // normalized: >= 2 non-{0} parts
    }
    return false;
}

Int StructuredSet::least_positive() const {
    switch (kind()) {
        case Kind::Finite:
            if (node_->elems.size() < 2) throw Error("least_positive(): set is {0}");
            return node_->elems[1];
        case Kind::Interval:
        case Kind::Tail:
            return 1;
        case Kind::Dilated:
            return node_->g * inner().least_positive();
        case Kind::DirectSum: {
            Int best = node_->children.front().least_positive();
            for (std::size_t i = 1; i < node_->children.size(); ++i) {
                best = std::min(best, node_->children[i].least_positive());
            }
            return best;
        }
    }
    throw Error("least_positive(): unreachable");
}

Int StructuredSet::max_element() const {
    switch (kind()) {
        case Kind::Finite:
            return node_->elems.back();
        case Kind::Interval:
            return node_->g - 1;
        case Kind::Tail:
            throw Error("max_element(): infinite set");
        case Kind::Dilated:
            return node_->g * inner().max_element();
        case Kind::DirectSum: {
            Int sum = 0;
            for (const auto& p : node_->children) sum += p.max_element();
            return sum;
        }
    }
    throw Error("max_element(): unreachable");
}

std::string StructuredSet::to_string() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Finite: {
            os << "{";
            for (std::size_t i = 0; i < node_->elems.size(); ++i) {
                if (i) os << ",";
                os << node_->elems[i];
            }
            os << "}";
            break;
        }
        case Kind::Interval:
            os << "[0," << node_->g << ")";
            break;
        case Kind::Tail:
            os << "N0";
            break;
        case Kind::Dilated:
            if (inner().kind() == Kind::DirectSum) {
                os << node_->g << " * (" << inner().to_string() << ")";
            } else {
                os << node_->g << " * " << inner().to_string();
            }
            break;
        case Kind::DirectSum:
            for (std::size_t i = 0; i < node_->children.size(); ++i) {
                if (i) os << " + ";
                os << node_->children[i].to_string();
            }
            break;
    }
    return os.str();
}

bool operator==(const StructuredSet& a, const StructuredSet& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case StructuredSet::Kind::Finite:
            return a.node_->elems == b.node_->elems;
        case StructuredSet::Kind::Interval:
            return a.node_->g == b.node_->g;
        case StructuredSet::Kind::Tail:
            return true;
        case StructuredSet::Kind::Dilated:
            return a.node_->g == b.node_->g && a.inner() == b.inner();
        case StructuredSet::Kind::DirectSum: {
            if (a.node_->children.size() != b.node_->children.size()) return false;
            for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
                if (!(a.node_->children[i] == b.node_->children[i])) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

void flatten_into(std::vector<StructuredSet>& out, const StructuredSet& s) {
    if (s.kind() == StructuredSet::Kind::DirectSum) {
        for (const auto& p : s.parts()) flatten_into(out, p);
    } else if (!s.is_singleton_zero()) {
        out.push_back(s);
    }
}

}  // namespace

StructuredSet StructuredSet::direct_sum_unchecked(std::vector<StructuredSet> parts) {
    std::vector<StructuredSet> flat;
    for (const auto& p : parts) flatten_into(flat, p);
    if (flat.empty()) return finite({0});
    if (flat.size() == 1) return flat.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::DirectSum;
    node->children = std::move(flat);
    return StructuredSet(std::move(node));
}

StructuredSet direct_sum(std::vector<StructuredSet> parts, const Bound& b) {
    if (parts.empty()) throw Error("direct_sum: need at least one part");
    StructuredSet result = StructuredSet::direct_sum_unchecked(std::move(parts));
    if (result.kind() != StructuredSet::Kind::DirectSum) return result;

    // Exhaustive uniqueness check over all element combinations below the bound.
    const auto& ps = result.parts();
    std::vector<std::vector<Int>> elems;
    elems.reserve(ps.size());
    for (const auto& p : ps) elems.push_back(p.enumerate(b));

    std::map<Int, std::vector<Int>> seen;  // sum -> chosen elements per part
    std::vector<Int> choice(ps.size(), 0);
    std::function<void(std::size_t, const Int&)> dfs = [&](std::size_t idx,
                                                           const Int& sum) {
        if (idx == ps.size()) {
            auto [it, inserted] = seen.emplace(sum, choice);
            if (!inserted) {
                throw DuplicateRepresentationError(sum, it->second, choice);
            }
            return;
        }
        for (const Int& e : elems[idx]) {
            if (sum + e >= b.n_max) break;
            choice[idx] = e;
            dfs(idx + 1, sum + e);
        }
        choice[idx] = 0;
    };
    dfs(0, 0);
    return result;
}

bool sets_equal(const StructuredSet& s1, const StructuredSet& s2, const Bound& b) {
    return s1.enumerate(b) == s2.enumerate(b);
}

}  // namespace addsys
