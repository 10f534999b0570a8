#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addsys/bigint.hpp"
#include "addsys/errors.hpp"

namespace addsys {

// The window [0, n_max) on which infinite-set statements are checked
// exhaustively. All bounded verdicts carry their bound.
struct Bound {
    Int n_max;

    explicit Bound(Int n) : n_max(std::move(n)) {
        if (n_max < 1) throw Error("bound must be >= 1");
    }

    unsigned long long window() const { return to_index(n_max); }
};

// Closed symbolic algebra of sets of nonnegative integers, each containing 0.
// Values are immutable and normalized on construction:
//   dilated(1, X) == X
//   dilated(g, dilated(h, X)) == dilated(g*h, X)
//   dilated(g, {0}) == {0}, interval(1) == {0}
//   a direct sum never nests direct sums and drops {0} parts.
class StructuredSet {
public:
    enum class Kind { Finite, Interval, Tail, Dilated, DirectSum };

    // elems must be nonnegative and contain 0; sorted/deduplicated here.
    static StructuredSet finite(std::vector<Int> elems);
    // [0, g), g >= 1.
    static StructuredSet interval(const Int& g);
    // N0.
    static StructuredSet tail();
    // scale * inner, scale >= 1.
    static StructuredSet dilated(const Int& scale, const StructuredSet& inner);

    Kind kind() const { return node_->kind; }
    const std::vector<Int>& elements() const;        // Finite
    const Int& upper() const;                        // Interval
    const Int& scale() const;                        // Dilated
    const StructuredSet& inner() const;              // Dilated
    const std::vector<StructuredSet>& parts() const; // DirectSum

    // Exact membership in the denoted set; no bound involved.
    bool contains(const Int& n) const;

    // Elements of the denoted set in [0, b.n_max), ascending, no duplicates.
    std::vector<Int> enumerate(const Bound& b) const;

    bool is_finite() const;
    bool is_tail() const { return kind() == Kind::Tail; }
    bool is_singleton_zero() const;
    // |denoted set| >= 2, decided symbolically.
    bool has_two_elements() const;
    // Least positive element; throws Error on {0}.
    Int least_positive() const;
    // Least upper bound on elements when finite.
    Int max_element() const;

    // DSL expression syntax, reparseable.
    std::string to_string() const;

    // Structural equality of normal forms.
    friend bool operator==(const StructuredSet& a, const StructuredSet& b);
    friend bool operator!=(const StructuredSet& a, const StructuredSet& b) {
        return !(a == b);
    }

    // Internal constructor for direct sums whose uniqueness is already known
    // (e.g. obtained from a verified sum by exact scaling). Still normalizes.
    static StructuredSet direct_sum_unchecked(std::vector<StructuredSet> parts);

private:
    struct Node {
        Kind kind;
        std::vector<Int> elems;             // Finite
        Int g;                              // Interval upper / Dilated scale
        std::vector<StructuredSet> children;// Dilated: [inner]; DirectSum: parts
    };

    explicit StructuredSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Direct sum of parts with eager uniqueness verification over [0, b.n_max):
// throws DuplicateRepresentationError{n, rep1, rep2} if some n below the
// bound has two distinct representations.
StructuredSet direct_sum(std::vector<StructuredSet> parts, const Bound& b);

// Bounded extensional equality: enumerate(s1,b) == enumerate(s2,b).
// Necessary but not sufficient for equality of the denoted infinite sets.
bool sets_equal(const StructuredSet& s1, const StructuredSet& s2, const Bound& b);

}  // namespace addsys
