#pragma once

#include <string>
#include <variant>
#include <vector>

#include "addsys/sets.hpp"

namespace addsys {

struct Member {
    std::string label;
    StructuredSet set;
};

// Indexed family of sets claimed to direct-sum to N0. Construction checks
// what is symbolically decidable: unique labels, every member has at least
// two elements, and a member denoting N0 itself appears only in the
// singleton system. Whether the family actually is an additive system is
// the verifier's job.
class AdditiveSystem {
public:
    explicit AdditiveSystem(std::vector<Member> members);

    const std::vector<Member>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool has_member(const std::string& label) const;
    const Member& member(const std::string& label) const;

private:
    std::vector<Member> members_;
};

// The singleton system (N0).
AdditiveSystem singleton_system(const std::string& label = "rest");

// Copy of sys without the named member.
AdditiveSystem without_member(const AdditiveSystem& sys, const std::string& label);

// The finitely many nonzero summands of one representation of n.
struct Representation {
    std::vector<std::pair<std::string, Int>> terms;

    Int total() const {
        Int s = 0;
        for (const auto& [label, e] : terms) s += e;
        return s;
    }
    bool operator==(const Representation&) const = default;
};

struct Valid {};
struct MissingRepresentation {
    Int n;
};
struct DuplicateRepresentation {
    Int n;
    Representation rep1, rep2;
};
struct OverlapViolation {
    std::string i, j;
    Int n;
};

using Verdict = std::variant<Valid, MissingRepresentation, DuplicateRepresentation,
                             OverlapViolation>;

struct VerificationReport {
    Bound bound;
    Verdict verdict;
    Int checked;  // count of integers examined

    bool valid() const { return std::holds_alternative<Valid>(verdict); }
    std::string to_string() const;
};

// All distinct representations of n, one element per member set, nonzero
// terms only. Exhaustive; empty means unrepresentable.
std::vector<Representation> representations_of(const AdditiveSystem& sys, const Int& n);

// Valid iff every n in [0, b.n_max) has exactly one representation;
// otherwise reports the least offending n with evidence.
VerificationReport verify(const AdditiveSystem& sys, const Bound& b);

// Drop one member from a Valid system and re-verify. Coverage always breaks
// at the dropped set's least positive element; throws BoundTooSmall if the
// bound does not reach it.
VerificationReport subfamily_rigidity_check(const AdditiveSystem& sys,
                                            const std::string& drop, const Bound& b);

}  // namespace addsys
