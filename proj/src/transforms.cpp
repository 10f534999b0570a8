#include "addsys/transforms.hpp"

#include <algorithm>
#include <cctype>

namespace addsys {

std::set<std::string> IndexPartition::all_members() const {
    std::set<std::string> out;
    for (const auto& c : classes) {
        for (const auto& m : c.members) {
            if (!out.insert(m).second) {
                throw NotAPartition("label " + m + " appears in two classes");
            }
        }
    }
    return out;
}

bool is_integer_label(const std::string& label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

namespace {

std::string shift_label(const std::string& label, std::size_t by) {
    if (!is_integer_label(label)) return label;
    return (Int(label) + by).str();
}

}  // namespace

std::pair<AdditiveSystem, DilationRecord> dilate_family(const AdditiveSystem& sys,
                                                        const std::vector<Int>& radices) {
    for (const Int& g : radices) {
        if (g < 2) throw InvalidRadix(g);
    }
    DilationRecord rec;
    rec.radices = radices;
    rec.partial_products.push_back(1);
    for (const Int& g : radices) {
        rec.partial_products.push_back(rec.partial_products.back() * g);
    }
    const std::size_t r = radices.size();
    if (r == 0) return {sys, rec};

    std::vector<Member> members;
    for (std::size_t i = 1; i <= r; ++i) {
        std::string label = std::to_string(i);
        rec.introduced_labels.push_back(label);
        members.push_back({std::move(label),
                           StructuredSet::dilated(rec.partial_products[i - 1],
                                                  StructuredSet::interval(radices[i - 1]))});
    }
    const Int& Gr = rec.partial_products.back();
    for (const auto& m : sys.members()) {
        members.push_back({shift_label(m.label, r), StructuredSet::dilated(Gr, m.set)});
    }
    return {AdditiveSystem(std::move(members)), std::move(rec)};
}

std::pair<AdditiveSystem, DilationRecord> dilate(const AdditiveSystem& sys, const Int& g) {
    return dilate_family(sys, {g});
}

AdditiveSystem contract(const AdditiveSystem& sys, const IndexPartition& p,
                        const Bound& b) {
    std::set<std::string> covered = p.all_members();  // throws on overlap
    std::set<std::string> expected;
    for (const auto& m : sys.members()) expected.insert(m.label);
    if (covered != expected) {
        throw NotAPartition("partition classes do not cover the system's labels");
    }
    std::vector<Member> members;
    for (const auto& c : p.classes) {
        if (c.members.empty()) throw NotAPartition("empty class " + c.label);
        std::vector<StructuredSet> parts;
        for (const auto& label : c.members) parts.push_back(sys.member(label).set);
        members.push_back({c.label, direct_sum(std::move(parts), b)});
    }
    return AdditiveSystem(std::move(members));
}

IndexPartition compose_contractions(const IndexPartition& p_outer,
                                    const IndexPartition& p_inner) {
    std::set<std::string> inner_labels;
    for (const auto& c : p_inner.classes) inner_labels.insert(c.label);
    if (p_outer.all_members() != inner_labels) {
        throw LabelMismatch("outer partition must partition the inner class labels");
    }
    IndexPartition out;
    for (const auto& oc : p_outer.classes) {
        IndexPartition::Class cls{oc.label, {}};
        for (const auto& j : oc.members) {
            for (const auto& ic : p_inner.classes) {
                if (ic.label == j) {
                    cls.members.insert(ic.members.begin(), ic.members.end());
                }
            }
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

AdditiveSystem apply_witness(const AdditiveSystem& base,
                             const ContractionDilationWitness& w, const Bound& b) {
    auto [dilated_sys, rec] = dilate_family(base, w.radices);
    return contract(dilated_sys, w.partition, b);
}

namespace {

// Is the label a decimal integer in [1, r]?
std::optional<std::size_t> position_of(const std::string& label, std::size_t r) {
    if (!is_integer_label(label)) return std::nullopt;
    Int v(label);
    if (v < 1 || v > r) return std::nullopt;
    return v.convert_to<std::size_t>();
}

}  // namespace

ContractionDilationWitness compose_contraction_dilation(
    const ContractionDilationWitness& outer, const ContractionDilationWitness& inner) {
    const std::size_t r = outer.radices.size();
    const std::size_t s = inner.radices.size();

    std::set<std::string> inner_class_labels;
    for (const auto& c : inner.partition.classes) {
        if (is_integer_label(c.label)) {
            throw LabelMismatch("inner class label " + c.label +
                                " collides with dilation positions");
        }
        inner_class_labels.insert(c.label);
    }

    ContractionDilationWitness out;
    out.radices = outer.radices;
    out.radices.insert(out.radices.end(), inner.radices.begin(), inner.radices.end());

    std::set<std::string> consumed;
    for (const auto& oc : outer.partition.classes) {
        IndexPartition::Class cls{oc.label, {}};
        for (const auto& j : oc.members) {
            if (auto pos = position_of(j, r)) {
                // first union: outer dilation positions pass through
                cls.members.insert(j);
                continue;
            }
            if (is_integer_label(j)) {
                throw LabelMismatch("outer member label " + j +
                                    " outside dilation positions [1," +
                                    std::to_string(r) + "]");
            }
            // j names an inner class
            if (!inner_class_labels.count(j)) {
                throw LabelMismatch("outer partition refers to unknown inner class " + j);
            }
            consumed.insert(j);
            for (const auto& ic : inner.partition.classes) {
                if (ic.label != j) continue;
                for (const auto& k : ic.members) {
                    if (auto pos = position_of(k, s)) {
                        // second union: inner positions shift by r
                        cls.members.insert(std::to_string(r + *pos));
                    } else if (is_integer_label(k)) {
                        throw LabelMismatch("inner member label " + k +
                                            " outside dilation positions [1," +
                                            std::to_string(s) + "]");
                    } else {
                        // third union: base labels pass through
                        cls.members.insert(k);
                    }
                }
            }
        }
        out.partition.classes.push_back(std::move(cls));
    }
    if (consumed != inner_class_labels) {
        throw LabelMismatch("outer partition does not cover every inner class");
    }
    return out;
}

}  // namespace addsys
