#pragma once

#include <string>
#include <vector>

#include "addsys/bigint.hpp"
#include "addsys/errors.hpp"

namespace addsys {

// The decomposition questions on a finite target set C containing 0.
// "Small" in the slack modes means symmetric-difference cardinality at most
// the user-supplied slack.
enum class SearchMode {
    DirectSum,      // A (+) B = C, unique representation
    Sumset,         // A + B = C
    Square,         // A + A = C
    SubsetSlack,    // A + B subset of C, |C \ (A+B)| <= slack
    SupersetSlack,  // A + B superset of C, |(A+B) \ C| <= slack
};

struct SearchProblem {
    std::vector<Int> target;  // finite, contains 0
    SearchMode mode = SearchMode::DirectSum;
    std::size_t slack = 0;
};

struct SearchLimits {
    unsigned long long max_nodes = 50'000'000;
};

// Candidate pair; for Square mode b mirrors a.
struct Witness {
    std::vector<Int> a, b;

    bool operator==(const Witness&) const = default;
};

struct SearchOutcome {
    std::vector<Witness> witnesses;  // canonical order, a <= b lexicographically
    bool exhausted = false;
    unsigned long long nodes_explored = 0;
};

// Enumerate all witnesses with |A|,|B| >= 2 over subsets of [0, max(C)]
// containing 0. exhausted=false means the node budget ran out and the
// results are partial.
SearchOutcome search(const SearchProblem& p, const SearchLimits& limits = {});

// Recomputes the mode's defining equation from scratch, independently of the
// search internals.
bool validate_witness(const SearchProblem& p, const Witness& w);

SearchMode parse_mode(const std::string& name);
std::string mode_name(SearchMode m);

}  // namespace addsys
