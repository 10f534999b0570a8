#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "addsys/sumset_lab.hpp"
#include "oracles.hpp"

using namespace addsys;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

// Brute-force reference search: try every pair of zero-subsets of [0,max(C)]
// with both sides of size >= 2, entirely independent of the bitmask engine.
std::vector<Witness> oracle_search(const SearchProblem& p) {
    unsigned universe = p.target.back().convert_to<unsigned>() + 1;
    std::vector<Witness> out;
    for (const auto& a : oracles::zero_subsets(universe)) {
        if (a.size() < 2) continue;
        for (const auto& b : oracles::zero_subsets(universe)) {
            if (b.size() < 2) continue;
            if (p.mode == SearchMode::Square && a != b) continue;
            if (!std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) &&
                a != b && p.mode != SearchMode::Square) {
                continue;  // canonical order a <= b
            }
            bool ok = false;
            std::vector<Int> sums = oracles::sumset(a, b);
            switch (p.mode) {
                case SearchMode::DirectSum:
                    ok = oracles::is_direct_sum(a, b, p.target);
                    break;
                case SearchMode::Sumset:
                case SearchMode::Square:
                    ok = sums == p.target;
                    break;
                case SearchMode::SubsetSlack: {
                    std::vector<Int> missing;
                    std::set_difference(p.target.begin(), p.target.end(), sums.begin(),
                                        sums.end(), std::back_inserter(missing));
                    ok = std::includes(p.target.begin(), p.target.end(), sums.begin(),
                                       sums.end()) &&
                         missing.size() <= p.slack;
                    break;
                }
                case SearchMode::SupersetSlack: {
                    std::vector<Int> extra;
                    std::set_difference(sums.begin(), sums.end(), p.target.begin(),
                                        p.target.end(), std::back_inserter(extra));
                    ok = std::includes(sums.begin(), sums.end(), p.target.begin(),
                                       p.target.end()) &&
                         extra.size() <= p.slack;
                    break;
                }
            }
            if (ok) out.push_back({a, b});
        }
    }
    return out;
}

bool same_witnesses(std::vector<Witness> x, std::vector<Witness> y) {
    auto key = [](const Witness& w) { return std::pair(w.a, w.b); };
    std::sort(x.begin(), x.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
    std::sort(y.begin(), y.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
    return x == y;
}

}  // namespace

TEST_CASE("the interval [0,6) has exactly two direct-sum splits") {
    SearchOutcome o = search({ints({0, 1, 2, 3, 4, 5}), SearchMode::DirectSum, 0});
    CHECK(o.exhausted);
    REQUIRE(o.witnesses.size() == 2);
    CHECK(o.witnesses[0] == Witness{ints({0, 1}), ints({0, 2, 4})});
    CHECK(o.witnesses[1] == Witness{ints({0, 1, 2}), ints({0, 3})});
}

TEST_CASE("{0,1,3} admits no direct-sum split and the search is exhaustive") {
    SearchOutcome o = search({ints({0, 1, 3}), SearchMode::DirectSum, 0});
    CHECK(o.exhausted);
    CHECK(o.witnesses.empty());
    CHECK(o.nodes_explored > 0);
}

TEST_CASE("sumset mode accepts overlapping representations") {
    std::vector<Int> target = ints({0, 1, 2, 3});
    SearchOutcome direct = search({target, SearchMode::DirectSum, 0});
    SearchOutcome loose = search({target, SearchMode::Sumset, 0});
    CHECK(direct.witnesses.size() == 1);  // {0,1} (+) {0,2}
    CHECK(loose.witnesses.size() > direct.witnesses.size());
    for (const auto& w : direct.witnesses) {
        CHECK(std::find(loose.witnesses.begin(), loose.witnesses.end(), w) !=
              loose.witnesses.end());
    }
}

TEST_CASE("square mode mirrors the witness") {
    SearchOutcome o = search({ints({0, 1, 2}), SearchMode::Square, 0});
    REQUIRE(o.witnesses.size() == 1);
    CHECK(o.witnesses[0].a == ints({0, 1}));
    CHECK(o.witnesses[0].b == o.witnesses[0].a);
}

TEST_CASE("witnesses are canonically ordered") {
    SearchOutcome o = search({ints({0, 1, 2, 3, 4, 5, 6, 7}), SearchMode::DirectSum, 0});
    CHECK(o.exhausted);
    for (const auto& w : o.witnesses) {
        CHECK(std::lexicographical_compare(w.a.begin(), w.a.end(), w.b.begin(),
                                           w.b.end()));
    }
    // No duplicate pairs.
    for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
        for (std::size_t j = i + 1; j < o.witnesses.size(); ++j) {
            CHECK_FALSE(o.witnesses[i] == o.witnesses[j]);
        }
    }
}

TEST_CASE("every reported witness validates; tampered ones do not") {
    SearchProblem p{ints({0, 1, 2, 3, 4, 5}), SearchMode::DirectSum, 0};
    SearchOutcome o = search(p);
    for (const auto& w : o.witnesses) {
        CHECK(validate_witness(p, w));
        Witness bad = w;
        bad.a.push_back(bad.a.back() + 1);
        CHECK_FALSE(validate_witness(p, bad));
    }
}

TEST_CASE("slack modes honour their budget") {
    // A + B = {0,1,2,4} has no exact sumset solution (3 is unavoidable from
    // 1+2), but slack 1 in either direction admits witnesses.
    std::vector<Int> target = ints({0, 1, 2, 4});
    CHECK(search({target, SearchMode::Sumset, 0}).witnesses.empty());

    SearchProblem superset{target, SearchMode::SupersetSlack, 1};
    SearchOutcome over = search(superset);
    CHECK_FALSE(over.witnesses.empty());
    for (const auto& w : over.witnesses) CHECK(validate_witness(superset, w));

    SearchProblem subset{target, SearchMode::SubsetSlack, 1};
    SearchOutcome under = search(subset);
    CHECK_FALSE(under.witnesses.empty());
    for (const auto& w : under.witnesses) CHECK(validate_witness(subset, w));
    // Slack 0 collapses both modes to the exact sumset problem.
    CHECK(same_witnesses(search({target, SearchMode::SubsetSlack, 0}).witnesses,
                         search({target, SearchMode::Sumset, 0}).witnesses));
}

TEST_CASE("all modes agree with the brute-force oracle on small targets") {
    std::vector<std::vector<Int>> targets = {
        ints({0, 1, 2, 3, 4, 5}), ints({0, 1, 3}), ints({0, 2, 4}),
        ints({0, 1, 2, 3, 4}), ints({0, 1, 4, 5})};
    for (const auto& target : targets) {
        for (SearchMode mode : {SearchMode::DirectSum, SearchMode::Sumset,
                                SearchMode::Square, SearchMode::SubsetSlack,
                                SearchMode::SupersetSlack}) {
            SearchProblem p{target, mode, 1};
            CHECK(same_witnesses(search(p).witnesses, oracle_search(p)));
        }
    }
}

TEST_CASE("the node budget cuts the search short") {
    SearchProblem p{ints({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), SearchMode::Sumset, 0};
    SearchOutcome o = search(p, SearchLimits{10});
    CHECK_FALSE(o.exhausted);
    CHECK(o.nodes_explored <= 10 + 1);
}

TEST_CASE("targets past the bitmask range are unsupported") {
    CHECK_THROWS_AS(search({ints({0, 1, 70}), SearchMode::DirectSum, 0}), Unsupported);
}

TEST_CASE("mode names round-trip") {
    for (SearchMode m : {SearchMode::DirectSum, SearchMode::Sumset, SearchMode::Square,
                         SearchMode::SubsetSlack, SearchMode::SupersetSlack}) {
        CHECK(parse_mode(mode_name(m)) == m);
    }
    CHECK_THROWS_AS(parse_mode("telepathy"), Error);
}
