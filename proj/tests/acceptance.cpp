// Acceptance gate: ten independent end-to-end checks, one verdict line each.
// Exits nonzero if any check fails.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "addsys/classify.hpp"
#include "addsys/codec.hpp"
#include "addsys/dsl.hpp"
#include "addsys/json_io.hpp"
#include "addsys/sumset_lab.hpp"
#include "addsys/systems.hpp"
#include "addsys/transforms.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace addsys;

namespace {

struct Check {
    std::string name;
    std::function<void()> body;  // throws on failure
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

// ---- fixtures ----------------------------------------------------------

AdditiveSystem example1(Int g) {  // [0,g) and g*N0
    return AdditiveSystem{{{"low", StructuredSet::interval(g)},
                           {"high", StructuredSet::dilated(g, StructuredSet::tail())}}};
}

AdditiveSystem adic_truncation(Int g, int k) {  // G^(i-1)*[0,g), i<=k, plus G^k*N0
    std::vector<Member> members;
    Int G = 1;
    for (int i = 1; i <= k; ++i) {
        members.push_back({std::to_string(i),
                           StructuredSet::dilated(G, StructuredSet::interval(g))});
        G *= g;
    }
    members.push_back({"rest", StructuredSet::dilated(G, StructuredSet::tail())});
    return AdditiveSystem{std::move(members)};
}

AdditiveSystem monetary() {
    return AdditiveSystem{
        {{"pence", StructuredSet::interval(12)},
         {"shillings", StructuredSet::dilated(12, StructuredSet::interval(20))},
         {"pounds", StructuredSet::dilated(240, StructuredSet::tail())}}};
}

AdditiveSystem contraction_fixture() {  // {0,1,4,5}, {0,2}, 8*N0
    return AdditiveSystem{
        {{"a", StructuredSet::finite({Int(0), Int(1), Int(4), Int(5)})},
         {"b", StructuredSet::finite({Int(0), Int(2)})},
         {"c", StructuredSet::dilated(8, StructuredSet::tail())}}};
}

std::vector<AdditiveSystem> corpus() {
    return {example1(2), example1(10), adic_truncation(2, 10), adic_truncation(10, 3),
            monetary(), contraction_fixture()};
}

bool systems_equal_bounded(const AdditiveSystem& a, const AdditiveSystem& b,
                           const Bound& bound) {
    if (a.size() != b.size()) return false;
    for (const auto& m : a.members()) {
        if (!b.has_member(m.label)) return false;
        if (!sets_equal(m.set, b.member(m.label).set, bound)) return false;
    }
    return true;
}

// ---- the ten checks ----------------------------------------------------

void check_monetary_exactness() {
    MixedRadixDigits d = encode(835, {12, 20});
    require(d.digits == std::vector<Int>{7, 9}, "digits of 835 must be (7,9)");
    require(d.overflow == 3, "overflow of 835 must be 3");
    require(decode(d, {12, 20}) == 835, "decode must invert encode");
    require(Int(7) + Int(108) + Int(720) == 835, "7 + 108 + 720 = 835");
    require(format_digits(d) == "7,9+3", "text form must be 7,9+3");
}

void check_bijectivity() {
    std::vector<std::vector<Int>> corpus_radices = {
        std::vector<Int>(13, 2), {12, 20}, {3, 5, 7}, {10, 10}};
    for (const auto& radices : corpus_radices) {
        Int G = 1;
        for (const Int& g : radices) G *= g;
        require(G <= 10000, "corpus radix product must stay desk-scale");
        std::set<std::vector<Int>> tuples;
        for (Int n = 0; n < G; ++n) {
            MixedRadixDigits d = encode(n, radices);
            require(d.overflow == 0, "no overflow below the radix product");
            for (std::size_t i = 0; i < radices.size(); ++i) {
                require(d.digits[i] >= 0 && d.digits[i] < radices[i],
                        "digit within its radix");
            }
            require(decode(d, radices) == n, "decode inverts encode");
            tuples.insert(d.digits);
        }
        require(Int(tuples.size()) == G, "digit map must be injective onto [0,G)");
    }
}

void check_verifier_soundness() {
    for (const AdditiveSystem& sys :
         {example1(2), example1(10), adic_truncation(2, 10), adic_truncation(10, 3),
          monetary()}) {
        require(verify(sys, Bound(10000)).valid(), "system must verify at 10000");
        for (const auto& m : sys.members()) {
            VerificationReport r = subfamily_rigidity_check(sys, m.label, Bound(10000));
            auto* miss = std::get_if<MissingRepresentation>(&r.verdict);
            require(miss != nullptr, "deletion must break coverage");
            require(miss->n == m.set.least_positive(),
                    "gap must be the deleted member's least positive element");
        }
    }
}

void check_dilation_associativity() {
    std::mt19937 rng(8191);
    std::uniform_int_distribution<int> radix(2, 9), len(2, 3), pick(0, 2);
    std::vector<AdditiveSystem> bases = {monetary(), example1(2),
                                         adic_truncation(2, 4)};
    for (int trial = 0; trial < 50; ++trial) {
        const AdditiveSystem& base = bases[pick(rng)];
        std::vector<Int> radices;
        for (int i = len(rng); i > 0; --i) radices.emplace_back(radix(rng));

        // Iterated single dilations, innermost radix first.
        AdditiveSystem iterated = base;
        for (auto it = radices.rbegin(); it != radices.rend(); ++it) {
            iterated = dilate(iterated, *it).first;
        }
        AdditiveSystem family = dilate_family(base, radices).first;
        require(systems_equal_bounded(iterated, family, Bound(1000)),
                "iterated and family dilation must agree member-by-member");
    }
}

void check_composition() {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> radix(2, 4), rs(1, 2), coin(0, 1);
    std::vector<AdditiveSystem> bases = {singleton_system(), example1(2), monetary()};
    std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);

    auto random_witness = [&](const AdditiveSystem& target,
                              const std::string& stem) -> ContractionDilationWitness {
        std::vector<Int> radices;
        for (int i = rs(rng); i > 0; --i) radices.emplace_back(radix(rng));
        AdditiveSystem dilated = dilate_family(target, radices).first;
        IndexPartition p{{{stem + "1", {}}, {stem + "2", {}}}};
        for (const auto& m : dilated.members()) {
            p.classes[coin(rng)].members.insert(m.label);
        }
        std::erase_if(p.classes, [](const auto& c) { return c.members.empty(); });
        return {radices, p};
    };

    for (int trial = 0; trial < 25; ++trial) {
        const AdditiveSystem& c_sys = bases[pick(rng)];
        ContractionDilationWitness inner = random_witness(c_sys, "u");
        AdditiveSystem b_sys = apply_witness(c_sys, inner, Bound(1000));
        ContractionDilationWitness outer = random_witness(b_sys, "v");
        AdditiveSystem two_step = apply_witness(b_sys, outer, Bound(1000));

        ContractionDilationWitness composed = compose_contraction_dilation(outer, inner);
        AdditiveSystem one_step = apply_witness(c_sys, composed, Bound(1000));
        require(systems_equal_bounded(two_step, one_step, Bound(1000)),
                "composed witness must reproduce the two-step construction");
    }

    // One deliberate instance where a composed class draws on all three
    // sources: a kept outer index, a shifted inner index, and a base label.
    ContractionDilationWitness inner{{2, 3},
                                     IndexPartition{{{"u1", {"1", "rest"}},
                                                     {"u2", {"2"}}}}};
    AdditiveSystem b_sys = apply_witness(singleton_system(), inner, Bound(1000));
    ContractionDilationWitness outer{{2, 2},
                                     IndexPartition{{{"v1", {"1", "u1"}},
                                                     {"v2", {"2", "u2"}}}}};
    ContractionDilationWitness composed = compose_contraction_dilation(outer, inner);
    std::size_t r = outer.radices.size();
    bool kept = false, shifted = false, base = false;
    for (const auto& cls : composed.partition.classes) {
        bool k = false, s = false, b = false;
        for (const std::string& m : cls.members) {
            if (is_integer_label(m)) {
                (std::stoull(m) <= r ? k : s) = true;
            } else {
                b = true;
            }
        }
        if (k && s && b) kept = shifted = base = true;
    }
    require(kept && shifted && base,
            "some composed class must combine kept, shifted, and base labels");
    AdditiveSystem two_step = apply_witness(b_sys, outer, Bound(1000));
    AdditiveSystem one_step =
        apply_witness(singleton_system(), composed, Bound(1000));
    require(systems_equal_bounded(two_step, one_step, Bound(1000)),
            "the three-source instance must also reproduce the two-step result");
}

void check_extraction_reconstruction() {
    bool saw_dilation = false, saw_contraction = false;
    for (const AdditiveSystem& sys : corpus()) {
        ExtractionStep step = debruijn_step(sys, Bound(10000));
        saw_dilation = saw_dilation || step.kind == ExtractionStep::Case::Dilation;
        saw_contraction =
            saw_contraction || step.kind == ExtractionStep::Case::Contraction;

        Int limit = (Int(10000) / step.g) * step.g;
        std::vector<Member> rebuilt;
        rebuilt.push_back({"__low", StructuredSet::interval(step.g)});
        for (const auto& m : step.quotient.members()) {
            StructuredSet scaled = StructuredSet::dilated(step.g, m.set);
            if (m.label == step.pivot_label) {
                rebuilt[0].set = direct_sum({rebuilt[0].set, scaled}, Bound(limit));
            } else {
                rebuilt.push_back({m.label, scaled});
            }
        }
        AdditiveSystem back{std::move(rebuilt)};
        require(verify(back, Bound(limit)).valid(),
                "rebuilt system must verify at the scaled bound");
        require(sets_equal(back.member("__low").set, sys.member(step.pivot_label).set,
                           Bound(limit)),
                "rebuilt pivot class must equal the original pivot set");
        // Remaining members must match the original sets on the window.
        for (const auto& m : sys.members()) {
            if (m.label == step.pivot_label) continue;
            require(sets_equal(m.set, back.member(m.label).set, Bound(limit)),
                    "non-pivot members must be reproduced");
        }
    }
    require(saw_dilation && saw_contraction,
            "the corpus must exercise both extraction cases");
}

void check_classification_round_trip() {
    for (const AdditiveSystem& sys : corpus()) {
        ClassificationResult r = classify(sys, 32, Bound(10000));
        require(r.terminated, "corpus systems must classify to termination");
        AdditiveSystem back = expand(r, Bound(10000));
        require(systems_equal_bounded(sys, back, Bound(10000)),
                "expand(classify(sys)) must equal sys at the bound");
    }

    // Prefix recovery for schedules of length up to 6.
    std::vector<std::vector<Int>> prefixes = {
        {2}, {12, 20}, {3, 5, 7}, {2, 3, 2, 5}, {2, 2, 2, 2, 2}, {2, 3, 2, 5, 2, 3}};
    for (const auto& prefix : prefixes) {
        GeneratorSchedule s;
        s.prefix = prefix;
        s.tail = GeneratorSchedule::ConstantTail{2};
        ClassificationResult r =
            classify(build_bns(s, prefix.size()), 32, Bound(10000));
        require(r.bns.schedule.prefix == prefix,
                "classification must recover the generator prefix exactly");
    }
}

void check_decomposability() {
    for (int p : {2, 3, 5, 7, 11}) {
        require(!is_decomposable_set(StructuredSet::interval(p), Bound(100)),
                "[0,p) must be indecomposable for prime p");
    }
    for (int c : {4, 6}) {
        auto w = is_decomposable_set(StructuredSet::interval(c), Bound(100));
        require(w.has_value(), "[0,4) and [0,6) must be decomposable");
        require(sets_equal(direct_sum({w->first, w->second}, Bound(100)),
                           StructuredSet::interval(c), Bound(100)),
                "the witness must direct-sum back to the interval");
    }

    // Exhaustive agreement with a bitmask oracle on zero-subsets of [0,12).
    auto direct_sums_to = [](unsigned a, unsigned b, unsigned c) {
        unsigned long long seen = 0;
        for (int x = 0; x < 24; ++x) {
            if (!(a >> x & 1)) continue;
            for (int y = 0; y < 24; ++y) {
                if (!(b >> y & 1)) continue;
                if (seen >> (x + y) & 1) return false;
                seen |= 1ULL << (x + y);
            }
        }
        return seen == c;
    };
    for (unsigned target = 1; target < (1u << 12); target += 2) {
        if (__builtin_popcount(target) < 2) continue;
        bool oracle_found = false;
        for (unsigned a = target; a > 0 && !oracle_found; a = (a - 1) & target) {
            if (!(a & 1) || __builtin_popcount(a) < 2) continue;
            for (unsigned b = target; b > 0; b = (b - 1) & target) {
                if (!(b & 1) || __builtin_popcount(b) < 2) continue;
                if (direct_sums_to(a, b, target)) {
                    oracle_found = true;
                    break;
                }
            }
        }
        std::vector<Int> elems;
        for (int i = 0; i < 12; ++i) {
            if (target >> i & 1) elems.emplace_back(i);
        }
        auto w = is_decomposable_set(StructuredSet::finite(elems), Bound(100));
        require(w.has_value() == oracle_found,
                "decomposability must agree with the oracle on " +
                    StructuredSet::finite(elems).to_string());
        if (w) {
            require(oracles::is_direct_sum(w->first.enumerate(Bound(10000)),
                                           w->second.enumerate(Bound(10000)), elems),
                    "returned witness must validate");
        }
    }
}

void check_search_exhaustion() {
    SearchOutcome o =
        search({{0, 1, 2, 3, 4, 5}, SearchMode::DirectSum, 0});
    require(o.exhausted, "[0,6) search must exhaust");
    require(o.witnesses.size() == 2, "[0,6) must have exactly two splits");
    require(o.witnesses[0] == Witness{{0, 1}, {0, 2, 4}},
            "first split must be {0,1} (+) {0,2,4}");
    require(o.witnesses[1] == Witness{{0, 1, 2}, {0, 3}},
            "second split must be {0,1,2} (+) {0,3}");

    SearchOutcome none = search({{0, 1, 3}, SearchMode::DirectSum, 0});
    require(none.exhausted, "{0,1,3} search must exhaust");
    require(none.witnesses.empty(), "{0,1,3} must have no splits");
}

void check_cli_contract() {
    using testsupport::run_cli;
    std::string monetary_path = testsupport::data_path("monetary.sys");

    testsupport::CliResult enc = run_cli("encode --preset british-monetary 835");
    require(enc.exit_code == 0 && enc.out == "7,9+3\n",
            "encode must print 7,9+3 and exit 0");

    testsupport::CliResult ver = run_cli("verify " + monetary_path + " --bound 480");
    require(ver.exit_code == 0 && ver.out == "Valid up to 480\n",
            "verify must print Valid up to 480 and exit 0");

    testsupport::CliResult cls = run_cli("classify " + monetary_path + " --json");
    require(cls.exit_code == 0, "classify must exit 0");
    testsupport::Json j = testsupport::Json::parse(cls.out);
    std::string err =
        testsupport::schema_check(j, testsupport::load_schema("classify.json"));
    require(err.empty(), "classify JSON must match its schema: " + err);
    require(j["prefix"] == testsupport::Json::array({12, 20}),
            "classify prefix must be [12,20]");
    require(j["terminated"] == true, "classification must terminate");

    err = testsupport::schema_check(
        testsupport::Json::parse(
            run_cli("verify " + monetary_path + " --bound 480 --json").out),
        testsupport::load_schema("verify.json"));
    require(err.empty(), "verify JSON must match its schema: " + err);
    err = testsupport::schema_check(
        testsupport::Json::parse(
            run_cli("encode --preset british-monetary 835 --json").out),
        testsupport::load_schema("encode.json"));
    require(err.empty(), "encode JSON must match its schema: " + err);

    require(run_cli("verify /no/such/file.sys").exit_code == 2,
            "unreadable input must exit 2");
    require(run_cli("search --target \"{0,1,3}\" --mode direct-sum").exit_code == 1,
            "a witnessless search must exit 1");
}

}  // namespace

int main() {
    std::vector<Check> checks = {
        {"monetary exactness: 835 = 7 + 108 + 720", check_monetary_exactness},
        {"mixed-radix bijectivity on the radix corpus", check_bijectivity},
        {"verifier soundness and deletion rigidity", check_verifier_soundness},
        {"dilation associativity (50 randomized trials)", check_dilation_associativity},
        {"contraction-dilation witness composition", check_composition},
        {"extraction step reconstruction, both cases", check_extraction_reconstruction},
        {"classification round trip and prefix recovery", check_classification_round_trip},
        {"decomposability vs exhaustive oracle on [0,12)", check_decomposability},
        {"exhaustive direct-sum search on [0,6) and {0,1,3}", check_search_exhaustion},
        {"CLI contract: golden outputs, schemas, exit codes", check_cli_contract},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            checks[i].body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string(" (") + e.what() + ")";
            ++failures;
        }
        std::cout << verdict << " [" << i + 1 << "/10] " << checks[i].name << detail
                  << "\n";
    }
    return failures == 0 ? 0 : 1;
}
