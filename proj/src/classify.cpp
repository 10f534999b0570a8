#include "addsys/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace addsys {

Int GeneratorSchedule::radix_at(std::size_t i) const {
    if (i == 0) throw Error("radix positions are 1-based");
    if (i <= prefix.size()) return prefix[i - 1];
    std::size_t k = i - prefix.size() - 1;
    if (const auto* c = std::get_if<ConstantTail>(&tail)) return c->g;
    if (const auto* p = std::get_if<PeriodicTail>(&tail)) {
        return p->pattern[k % p->pattern.size()];
    }
    throw InsufficientSchedule("schedule has only " + std::to_string(prefix.size()) +
                               " entries, position " + std::to_string(i) + " requested");
}

Int GeneratorSchedule::partial_product(std::size_t i) const {
    Int G = 1;
    for (std::size_t j = 1; j <= i; ++j) G *= radix_at(j);
    return G;
}

void GeneratorSchedule::validate() const {
    for (const Int& g : prefix) {
        if (g < 2) throw InvalidRadix(g);
    }
    if (const auto* c = std::get_if<ConstantTail>(&tail)) {
        if (c->g < 2) throw InvalidRadix(c->g);
    } else if (const auto* p = std::get_if<PeriodicTail>(&tail)) {
        if (p->pattern.empty()) throw Error("periodic tail needs a nonempty pattern");
        for (const Int& g : p->pattern) {
            if (g < 2) throw InvalidRadix(g);
        }
    }
}

BritishNumberSystem::BritishNumberSystem(GeneratorSchedule s) : schedule(std::move(s)) {
    schedule.validate();
    if (!schedule.infinite()) {
        throw Error("a British number system needs an infinite tail rule");
    }
}

AdditiveSystem build_bns(const GeneratorSchedule& schedule, std::size_t r) {
    schedule.validate();
    if (!schedule.infinite() && r > schedule.prefix.size()) {
        throw InsufficientSchedule("schedule prefix shorter than requested truncation");
    }
    std::vector<Member> members;
    Int G = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        Int g = schedule.radix_at(i);
        members.push_back({std::to_string(i),
                           StructuredSet::dilated(G, StructuredSet::interval(g))});
        G *= g;
    }
    members.push_back({"rest", StructuredSet::dilated(G, StructuredSet::tail())});
    return AdditiveSystem(std::move(members));
}

namespace {

// Least period of the infinite repetition of pattern; divides pattern.size().
std::vector<Int> least_period(const std::vector<Int>& pattern) {
    const std::size_t L = pattern.size();
    for (std::size_t d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i < L && ok; ++i) ok = pattern[i] == pattern[i % d];
        if (ok) return {pattern.begin(), pattern.begin() + static_cast<long>(d)};
    }
    return pattern;
}

std::vector<Int> tail_pattern(const GeneratorSchedule& s) {
    if (const auto* c = std::get_if<GeneratorSchedule::ConstantTail>(&s.tail)) {
        return {c->g};
    }
    if (const auto* p = std::get_if<GeneratorSchedule::PeriodicTail>(&s.tail)) {
        return least_period(p->pattern);
    }
    throw Error("schedule has no tail rule");
}

}  // namespace

bool bns_equal(const BritishNumberSystem& x, const BritishNumberSystem& y) {
    auto px = tail_pattern(x.schedule);
    auto py = tail_pattern(y.schedule);
    std::size_t preperiod = std::max(x.schedule.prefix.size(), y.schedule.prefix.size());
    std::size_t period = std::lcm(px.size(), py.size());
    // Eventually periodic sequences agreeing this far agree everywhere.
    for (std::size_t i = 1; i <= preperiod + 2 * period; ++i) {
        if (x.schedule.radix_at(i) != y.schedule.radix_at(i)) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_indecomposable_system(const BritishNumberSystem& bns) {
    for (const Int& g : bns.schedule.prefix) {
        if (!is_prime(g)) return false;
    }
    for (const Int& g : tail_pattern(bns.schedule)) {
        if (!is_prime(g)) return false;
    }
    return true;
}

namespace {

// Every element a multiple of g?
bool all_divisible(const StructuredSet& s, const Int& g) {
    if (g == 1) return true;
    switch (s.kind()) {
        case StructuredSet::Kind::Finite:
            for (const Int& e : s.elements()) {
                if (e % g != 0) return false;
            }
            return true;
        case StructuredSet::Kind::Interval:
        case StructuredSet::Kind::Tail:
            return false;
        case StructuredSet::Kind::Dilated: {
            const Int& sc = s.scale();
            if (sc % g == 0) return true;
            if (g % sc == 0) return all_divisible(s.inner(), g / sc);
            return false;
        }
        case StructuredSet::Kind::DirectSum:
            for (const auto& p : s.parts()) {
                if (!all_divisible(p, g)) return false;
            }
            return true;
    }
    return false;
}

}  // namespace

std::optional<StructuredSet> quotient_symbolic(const StructuredSet& s, const Int& g) {
    if (g == 1) return s;
    switch (s.kind()) {
        case StructuredSet::Kind::Finite: {
            std::vector<Int> out;
            for (const Int& e : s.elements()) {
                if (e % g == 0) out.push_back(e / g);
            }
            return StructuredSet::finite(std::move(out));
        }
        case StructuredSet::Kind::Interval:
            return StructuredSet::interval(ceil_div(s.upper(), g));
        case StructuredSet::Kind::Tail:
            return StructuredSet::tail();
        case StructuredSet::Kind::Dilated: {
            const Int& sc = s.scale();
            if (sc % g == 0) return StructuredSet::dilated(sc / g, s.inner());
            if (g % sc == 0) return quotient_symbolic(s.inner(), g / sc);
            return std::nullopt;
        }
        case StructuredSet::Kind::DirectSum: {
            // Sound when the non-divisible parts cannot sum to a multiple of
            // g other than 0: their combined maximum stays below g.
            std::vector<StructuredSet> quotients;
            Int loose_max = 0;
            for (const auto& p : s.parts()) {
                if (all_divisible(p, g)) {
                    auto q = quotient_symbolic(p, g);
                    if (!q) return std::nullopt;
                    quotients.push_back(*q);
                } else if (p.is_finite()) {
                    loose_max += p.max_element();
                } else {
                    return std::nullopt;
                }
            }
            if (loose_max >= g) return std::nullopt;
            // Uniqueness carries over from the verified sum by exact scaling.
            return StructuredSet::direct_sum_unchecked(std::move(quotients));
        }
    }
    return std::nullopt;
}

namespace {

StructuredSet quotient_of(const StructuredSet& s, const Int& g, const Bound& b) {
    if (auto q = quotient_symbolic(s, g)) return *q;
    // Enumeration fallback: elements k with kg below the bound.
    Int q_max = b.n_max / g;
    std::vector<Int> out;
    for (const Int& e : s.enumerate(b)) {
        if (e % g == 0 && e / g < q_max) out.push_back(e / g);
    }
    return StructuredSet::finite(std::move(out));
}

}  // namespace

ExtractionStep debruijn_step(const AdditiveSystem& sys, const Bound& b) {
    if (sys.size() == 1) throw SingletonSystem();

    const Member* pivot = nullptr;
    for (const auto& m : sys.members()) {
        if (m.set.contains(1)) {
            pivot = &m;
            break;
        }
    }
    if (!pivot) throw Error("no member contains 1; system is not additive");

    // Least positive integer absent from the pivot set.
    Int g;
    if (pivot->set.kind() == StructuredSet::Kind::Interval) {
        g = pivot->set.upper();
    } else {
        Int n = 1;
        while (n < b.n_max && pivot->set.contains(n)) ++n;
        if (n >= b.n_max) {
            throw BoundTooSmall("least absent element of pivot " + pivot->label +
                                " not determinable below " + b.n_max.str());
        }
        g = n;
    }

    Int qn = b.n_max / g;
    if (qn < 1) throw BoundTooSmall("bound below extracted radix " + g.str());
    Bound qb{qn};

    std::vector<Member> qmembers;
    StructuredSet pivot_quotient = StructuredSet::finite({0});
    for (const auto& m : sys.members()) {
        StructuredSet q = quotient_of(m.set, g, b);
        if (m.label == pivot->label) {
            pivot_quotient = q;
            continue;  // inserted below depending on the case
        }
        if (!q.has_two_elements()) {
            throw BoundTooSmall("quotient of member " + m.label +
                                " truncates to {0} at this bound");
        }
        qmembers.push_back({m.label, std::move(q)});
    }

    ExtractionStep step{pivot->label, g, singleton_system(), ExtractionStep::Case::Dilation};
    if (pivot_quotient.is_singleton_zero()) {
        step.kind = ExtractionStep::Case::Dilation;
        if (qmembers.empty()) {
            throw Error("dilation case left no members; input was a single interval");
        }
    } else {
        step.kind = ExtractionStep::Case::Contraction;
        // keep member order
        std::vector<Member> ordered;
        for (const auto& m : sys.members()) {
            if (m.label == pivot->label) {
                ordered.push_back({m.label, pivot_quotient});
            } else {
                for (auto& qm : qmembers) {
                    if (qm.label == m.label) ordered.push_back(qm);
                }
            }
        }
        qmembers = std::move(ordered);
    }
    step.quotient = AdditiveSystem(std::move(qmembers));

    VerificationReport report = verify(step.quotient, qb);
    if (!report.valid()) {
        throw Error("quotient system fails verification at " + qn.str() + ": " +
                    report.to_string() + " (input not additive at this bound?)");
    }
    return step;
}

ClassificationResult classify(const AdditiveSystem& sys, std::size_t max_depth,
                              const Bound& b) {
    std::vector<Int> radices;
    AdditiveSystem cur = sys;
    Bound curb = b;
    bool terminated = false;
    while (true) {
        if (cur.size() == 1) {
            terminated = true;
            break;
        }
        if (radices.size() >= max_depth) break;
        ExtractionStep step = [&]() -> ExtractionStep {
            return debruijn_step(cur, curb);
        }();
        radices.push_back(step.g);
        Int next = curb.n_max / step.g;
        cur = std::move(step.quotient);
        if (next < 2) {
            // no room for another extraction
            terminated = cur.size() == 1;
            curb = Bound(1);
            break;
        }
        curb = Bound(next);
    }

    const std::size_t depth = radices.size();
    GeneratorSchedule schedule{radices, GeneratorSchedule::ConstantTail{2}};

    // Position n belongs to the member containing G_{n-1}.
    PartitionSpec spec;
    std::map<std::string, std::set<std::size_t>> assigned;
    Int G = 1;
    for (std::size_t n = 1; n <= depth; ++n) {
        for (const auto& m : sys.members()) {
            if (m.set.contains(G)) {
                assigned[m.label].insert(n);
                break;
            }
        }
        G *= radices[n - 1];
    }
    // Residual class: the member holding the tail G_depth * N0.
    std::optional<std::string> rest;
    for (const auto& m : sys.members()) {
        if (m.set.contains(G)) {
            rest = m.label;
            break;
        }
    }
    for (const auto& m : sys.members()) {
        auto it = assigned.find(m.label);
        bool is_rest = rest && *rest == m.label;
        if (it == assigned.end() && !is_rest) continue;
        PartitionSpec::Class cls{m.label, {}};
        if (it != assigned.end()) cls.positions = it->second;
        spec.classes.push_back(std::move(cls));
    }
    spec.rest_label = rest;

    return ClassificationResult{BritishNumberSystem(schedule), std::move(spec), depth,
                                terminated};
}

AdditiveSystem expand(const ClassificationResult& result, const Bound& b) {
    const GeneratorSchedule& s = result.bns.schedule;
    Int G_rest = s.partial_product(result.depth);
    std::vector<Member> members;
    for (const auto& cls : result.partition.classes) {
        std::vector<StructuredSet> parts;
        for (std::size_t n : cls.positions) {
            Int G = s.partial_product(n - 1);
            if (G >= b.n_max) continue;
            parts.push_back(StructuredSet::dilated(G, StructuredSet::interval(s.radix_at(n))));
        }
        if (result.partition.rest_label && *result.partition.rest_label == cls.label) {
            parts.push_back(StructuredSet::dilated(G_rest, StructuredSet::tail()));
        }
        members.push_back({cls.label, direct_sum(std::move(parts), b)});
    }
    return AdditiveSystem(std::move(members));
}

namespace {

// Greedy complement: given C and a candidate A, the cofactor B with
// A (+) B = C is forced element by element, least uncovered first.
std::optional<std::vector<Int>> forced_cofactor(const std::vector<Int>& c,
                                                const std::vector<Int>& a) {
    std::set<Int> target(c.begin(), c.end());
    std::set<Int> covered(a.begin(), a.end());
    std::vector<Int> b{0};
    while (covered != target) {
        // least element of C not yet covered
        Int m = -1;
        for (const Int& e : c) {
            if (!covered.count(e)) {
                m = e;
                break;
            }
        }
        if (m < 0) return std::nullopt;  // covered spills outside C
        for (const Int& e : a) {
            Int s = e + m;
            if (covered.count(s) || !target.count(s)) return std::nullopt;
            covered.insert(s);
        }
        b.push_back(m);
    }
    if (b.size() < 2) return std::nullopt;
    return b;
}

}  // namespace

std::optional<std::pair<StructuredSet, StructuredSet>> is_decomposable_set(
    const StructuredSet& s, const Bound& b) {
    // G*[0,g) splits exactly when g is composite.
    if (s.kind() == StructuredSet::Kind::Interval ||
        (s.kind() == StructuredSet::Kind::Dilated &&
         s.inner().kind() == StructuredSet::Kind::Interval)) {
        Int G = s.kind() == StructuredSet::Kind::Dilated ? s.scale() : Int(1);
        Int g = s.kind() == StructuredSet::Kind::Dilated ? s.inner().upper() : s.upper();
        for (Int u = 2; u * u <= g; ++u) {
            if (g % u == 0) {
                return std::make_pair(
                    StructuredSet::dilated(G, StructuredSet::interval(u)),
                    StructuredSet::dilated(G * u, StructuredSet::interval(g / u)));
            }
        }
        return std::nullopt;
    }
    if (!s.is_finite()) {
        throw Unsupported("decomposability is decided only for finite sets and G*[0,g)");
    }

    std::vector<Int> c = s.enumerate(Bound(s.max_element() + 1));
    (void)b;
    const std::size_t n = c.size();
    if (n < 4) return std::nullopt;  // |B| >= 2 and |C| >= 2 force |A| >= 4
    if (n > 30) throw Unsupported("finite set too large for exhaustive decomposition");

    // Exhaustive over subsets A containing 0; the cofactor is forced.
    for (std::uint64_t mask = 1; mask < (1ULL << n); mask += 2) {  // bit 0: element 0
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size < 2 || size > n / 2 || n % size != 0) continue;
        std::vector<Int> a;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) a.push_back(c[i]);
        }
        if (auto bset = forced_cofactor(c, a)) {
            return std::make_pair(StructuredSet::finite(std::move(a)),
                                  StructuredSet::finite(std::move(*bset)));
        }
    }
    return std::nullopt;
}

}  // namespace addsys
