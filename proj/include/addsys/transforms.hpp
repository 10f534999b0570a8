#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "addsys/systems.hpp"

namespace addsys {

// Disjoint nonempty classes covering an index set; the witness object for
// every contraction.
struct IndexPartition {
    struct Class {
        std::string label;
        std::set<std::string> members;
    };
    std::vector<Class> classes;

    std::set<std::string> all_members() const;
};

// Bookkeeping for a dilation by radices (g_1..g_r): partial products
// G_0=1, G_i = G_{i-1} * g_i, and the fresh integer labels "1".."r" whose
// sets denote G_{i-1} * [0, g_i).
struct DilationRecord {
    std::vector<Int> radices;
    std::vector<Int> partial_products;  // G_0..G_r
    std::vector<std::string> introduced_labels;
};

// Labels introduced by dilation are decimal integers; original labels are
// kept apart (the paper's I with I cap N empty).
bool is_integer_label(const std::string& label);

// Dilation by a single integer g >= 2: adjoin [0,g), scale every member by
// g. Existing integer labels shift up by one so the fresh set is labeled "1".
std::pair<AdditiveSystem, DilationRecord> dilate(const AdditiveSystem& sys, const Int& g);

// Dilation by a finite family (g_1..g_r): members G_{i-1}*[0,g_i) labeled
// "1".."r" plus G_r*A_i for the originals. Empty family returns sys unchanged.
std::pair<AdditiveSystem, DilationRecord> dilate_family(const AdditiveSystem& sys,
                                                        const std::vector<Int>& radices);

// Replace each partition class by the direct sum of its member sets
// (verified at b). Throws NotAPartition if p does not partition sys's labels;
// DuplicateRepresentationError propagates when a class fails to direct-sum.
AdditiveSystem contract(const AdditiveSystem& sys, const IndexPartition& p,
                        const Bound& b);

// Composition of contractions: p_inner partitions K into classes labeled by
// J, p_outer partitions J; the result partitions K with class i the union of
// inner classes over i's members.
IndexPartition compose_contractions(const IndexPartition& p_outer,
                                    const IndexPartition& p_inner);

// "A is a contraction of Base dilated by radices", as a checkable certificate.
struct ContractionDilationWitness {
    std::vector<Int> radices;
    IndexPartition partition;
};

// Dilate base by the witness radices, then contract; reproduces the claimed
// system when the witness is genuine.
AdditiveSystem apply_witness(const AdditiveSystem& base,
                             const ContractionDilationWitness& w, const Bound& b);

// One-step witness for "A is a contraction of C dilated by (outer.radices ++
// inner.radices)", given outer: A from B, inner: B from C. Inner positions
// shift by outer's radix count; inner base labels pass through.
ContractionDilationWitness compose_contraction_dilation(
    const ContractionDilationWitness& outer, const ContractionDilationWitness& inner);

}  // namespace addsys
