#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "addsys/systems.hpp"
#include "addsys/transforms.hpp"

namespace addsys {

// Finite prefix of radices g_i >= 2 plus an optional infinite tail rule.
struct GeneratorSchedule {
    struct NoTail {};
    struct ConstantTail {
        Int g;
    };
    struct PeriodicTail {
        std::vector<Int> pattern;
    };

    std::vector<Int> prefix;
    std::variant<NoTail, ConstantTail, PeriodicTail> tail;

    bool infinite() const { return !std::holds_alternative<NoTail>(tail); }
    // g_i, 1-based; throws InsufficientSchedule past a finite schedule.
    Int radix_at(std::size_t i) const;
    // G_i = g_1 * ... * g_i, with G_0 = 1.
    Int partial_product(std::size_t i) const;
    // Entry validation (everything >= 2, periodic pattern nonempty).
    void validate() const;
};

// The additive system (G_{i-1} * [0, g_i))_{i in N}; schedules are in
// one-to-one correspondence with these systems, so equality is exact
// entrywise schedule comparison.
struct BritishNumberSystem {
    GeneratorSchedule schedule;

    explicit BritishNumberSystem(GeneratorSchedule s);
};

// Truncation to r leading members plus the closing set G_r * N0; members are
// labeled "1".."r" and "rest". Verifies Valid at any bound.
AdditiveSystem build_bns(const GeneratorSchedule& schedule, std::size_t r);

// Exact equality by schedule comparison; periodic tails are compared after
// normalization to their least period.
bool bns_equal(const BritishNumberSystem& x, const BritishNumberSystem& y);

// True iff every realizable radix is prime.
bool is_indecomposable_system(const BritishNumberSystem& bns);

// One de Bruijn extraction: the member containing 1 yields the least absent
// positive integer g and quotient sets B_i = {k : kg in A_i}.
struct ExtractionStep {
    enum class Case { Dilation, Contraction };

    std::string pivot_label;
    Int g;
    AdditiveSystem quotient;  // pivot dropped in the dilation case
    Case kind;
};

ExtractionStep debruijn_step(const AdditiveSystem& sys, const Bound& b);

// Finitely many assigned position classes plus at most one residual "rest"
// class holding all remaining positions.
struct PartitionSpec {
    struct Class {
        std::string label;
        std::set<std::size_t> positions;  // 1-based radix positions
    };
    std::vector<Class> classes;
    std::optional<std::string> rest_label;
};

struct ClassificationResult {
    BritishNumberSystem bns;
    PartitionSpec partition;
    std::size_t depth = 0;
    bool terminated = false;  // reached the singleton system (N0)
};

// Iterate extraction steps, collecting radices and assigning position n to
// the member containing G_{n-1}. On termination the remaining positions use
// the default tail rule (constant 2) and form the "rest" class.
ClassificationResult classify(const AdditiveSystem& sys, std::size_t max_depth,
                              const Bound& b);

// Rebuild a system from a classification certificate: each class becomes the
// direct sum of its G_{n-1}*[0,g_n) parts below the bound, the residual class
// additionally carrying the symbolic tail.
AdditiveSystem expand(const ClassificationResult& result, const Bound& b);

// Direct-sum split of a single set into two factors of size >= 2, or nullopt
// after exhaustion. Supports finite sets and G*[0,g) forms (decomposable iff
// g is composite); anything else throws Unsupported.
std::optional<std::pair<StructuredSet, StructuredSet>> is_decomposable_set(
    const StructuredSet& s, const Bound& b);

// Deterministic trial division; radices are desk-scale.
bool is_prime(const Int& n);

// Exact quotient {k : k*g in s} when the structure permits, else nullopt.
std::optional<StructuredSet> quotient_symbolic(const StructuredSet& s, const Int& g);

}  // namespace addsys
