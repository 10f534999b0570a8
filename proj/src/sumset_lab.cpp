#include "addsys/sumset_lab.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

namespace addsys {

namespace {

using U64 = std::uint64_t;
using U128 = unsigned __int128;

int popcount128(U128 x) {
    return __builtin_popcountll(static_cast<U64>(x)) +
           __builtin_popcountll(static_cast<U64>(x >> 64));
}

// Lexicographic order on the ascending element sequences. Let m be the
// smallest differing element. The shared elements below m form a common
// prefix; the owner of m precedes unless the other set is exactly that
// prefix, in which case the prefix (being shorter) precedes.
bool lex_less(U64 a, U64 b) {
    U64 diff = a ^ b;
    if (diff == 0) return false;
    U64 m = diff & -diff;
    U64 above = ~(2 * m - 1);  // elements larger than m
    if (a & m) return (b & above) != 0;
    return (a & above) == 0;
}

std::vector<Int> mask_to_set(U64 mask) {
    std::vector<Int> out;
    for (int i = 0; mask; ++i, mask >>= 1) {
        if (mask & 1) out.push_back(i);
    }
    return out;
}

// A + B as a bitmask; sums can exceed 63, hence 128 bits.
U128 sumset_mask(U64 a, U64 b) {
    U128 out = 0;
    for (int i = 0; a >> i; ++i) {
        if (a >> i & 1) out |= static_cast<U128>(b) << i;
    }
    return out;
}

// The unique cofactor B with A (+) B = C, if it exists.
std::optional<U64> forced_cofactor(U64 cmask, U64 amask) {
    U128 covered = amask;
    const U128 c = cmask;
    U64 b = 1;
    while (covered != c) {
        U128 uncovered = c & ~covered;
        U128 low = uncovered & (~uncovered + 1);
        int m = low <= ~U64(0) ? __builtin_ctzll(static_cast<U64>(low))
                               : 64 + __builtin_ctzll(static_cast<U64>(low >> 64));
        U128 shifted = static_cast<U128>(amask) << m;
        if (shifted & covered) return std::nullopt;  // duplicate representation
        if (shifted & ~c) return std::nullopt;       // spills outside C
        covered |= shifted;
        b |= U64(1) << m;
    }
    if (__builtin_popcountll(b) < 2) return std::nullopt;
    return b;
}

struct MaskProblem {
    U64 cmask = 0;
    int maxc = 0;
};

MaskProblem lower(const SearchProblem& p) {
    if (p.target.empty()) throw Error("search: target must be nonempty");
    MaskProblem mp;
    bool has_zero = false;
    for (const Int& e : p.target) {
        if (e < 0) throw Error("search: target elements must be nonnegative");
        if (e > 62) throw Unsupported("search: target elements above 62 not supported");
        int v = e.convert_to<int>();
        mp.cmask |= U64(1) << v;
        mp.maxc = std::max(mp.maxc, v);
        has_zero = has_zero || v == 0;
    }
    if (!has_zero) throw Error("search: target must contain 0");
    return mp;
}

}  // namespace

SearchOutcome search(const SearchProblem& p, const SearchLimits& limits) {
    MaskProblem mp = lower(p);
    const U64 cmask = mp.cmask;
    const int csize = __builtin_popcountll(cmask);
    const U64 universe =
        mp.maxc >= 63 ? ~U64(0) : (U64(1) << (mp.maxc + 1)) - 1;

    SearchOutcome out;
    std::set<std::pair<U64, U64>> found;
    bool budget_hit = false;
    auto spend = [&]() {
        if (out.nodes_explored >= limits.max_nodes) {
            budget_hit = true;
            return false;
        }
        ++out.nodes_explored;
        return true;
    };
    auto record = [&](U64 a, U64 b) {
        if (lex_less(b, a)) std::swap(a, b);
        found.emplace(a, b);
    };

    // Candidates are subsets containing 0 with at least two elements; for the
    // =/subset modes they must lie inside C, for the superset mode anywhere
    // in [0, max(C)].
    auto candidate = [](U64 m) {
        return (m & 1) && __builtin_popcountll(m) >= 2;
    };
    auto for_each_subset = [&](U64 space, auto&& fn) {
        // descending submask enumeration of `space`
        for (U64 sub = space;; sub = (sub - 1) & space) {
            if (candidate(sub)) {
                if (!fn(sub)) return;
            }
            if (sub == 0) return;
        }
    };

    switch (p.mode) {
        case SearchMode::DirectSum:
            for_each_subset(cmask, [&](U64 a) {
                if (!spend()) return false;
                // |A| * |B| = |C| is forced for a direct sum
                int asize = __builtin_popcountll(a);
                if (csize % asize != 0) return true;
                if (auto b = forced_cofactor(cmask, a)) record(a, *b);
                return true;
            });
            break;
        case SearchMode::Square:
            for_each_subset(cmask, [&](U64 a) {
                if (!spend()) return false;
                if (sumset_mask(a, a) == static_cast<U128>(cmask)) record(a, a);
                return true;
            });
            break;
        case SearchMode::Sumset:
        case SearchMode::SubsetSlack:
        case SearchMode::SupersetSlack: {
            U64 space = p.mode == SearchMode::SupersetSlack ? universe : cmask;
            for_each_subset(space, [&](U64 a) {
                bool keep_going = true;
                for_each_subset(space, [&](U64 b) {
                    if (lex_less(b, a)) return true;  // canonical a <= b
                    if (!spend()) {
                        keep_going = false;
                        return false;
                    }
                    U128 sum = sumset_mask(a, b);
                    const U128 c = cmask;
                    bool ok = false;
                    if (p.mode == SearchMode::Sumset) {
                        ok = sum == c;
                    } else if (p.mode == SearchMode::SubsetSlack) {
                        ok = (sum & ~c) == 0 &&
                             popcount128(c & ~sum) <= static_cast<int>(p.slack);
                    } else {
                        ok = (c & ~sum) == 0 &&
                             popcount128(sum & ~c) <= static_cast<int>(p.slack);
                    }
                    if (ok) record(a, b);
                    return true;
                });
                return keep_going;
            });
            break;
        }
    }

    out.exhausted = !budget_hit;
    for (const auto& [a, b] : found) {
        out.witnesses.push_back({mask_to_set(a), mask_to_set(b)});
    }
    return out;
}

bool validate_witness(const SearchProblem& p, const Witness& w) {
    auto is_set = [](const std::vector<Int>& v) {
        if (v.size() < 2) return false;
        if (std::find(v.begin(), v.end(), Int(0)) == v.end()) return false;
        std::set<Int> s(v.begin(), v.end());
        return s.size() == v.size();
    };
    const std::vector<Int>& a = w.a;
    const std::vector<Int>& b = p.mode == SearchMode::Square ? w.a : w.b;
    if (!is_set(a) || !is_set(b)) return false;

    std::map<Int, int> sums;
    for (const Int& x : a) {
        for (const Int& y : b) ++sums[x + y];
    }
    std::set<Int> target(p.target.begin(), p.target.end());
    std::set<Int> sumset;
    for (const auto& [v, count] : sums) sumset.insert(v);

    switch (p.mode) {
        case SearchMode::DirectSum: {
            if (sumset != target) return false;
            for (const auto& [v, count] : sums) {
                if (count != 1) return false;
            }
            return true;
        }
        case SearchMode::Sumset:
        case SearchMode::Square:
            return sumset == target;
        case SearchMode::SubsetSlack: {
            std::size_t missing = 0;
            for (const Int& v : sumset) {
                if (!target.count(v)) return false;
            }
            for (const Int& v : target) {
                if (!sumset.count(v)) ++missing;
            }
            return missing <= p.slack;
        }
        case SearchMode::SupersetSlack: {
            std::size_t extra = 0;
            for (const Int& v : target) {
                if (!sumset.count(v)) return false;
            }
            for (const Int& v : sumset) {
                if (!target.count(v)) ++extra;
            }
            return extra <= p.slack;
        }
    }
    return false;
}

SearchMode parse_mode(const std::string& name) {
    if (name == "direct-sum") return SearchMode::DirectSum;
    if (name == "sumset") return SearchMode::Sumset;
    if (name == "square") return SearchMode::Square;
    if (name == "subset") return SearchMode::SubsetSlack;
    if (name == "superset") return SearchMode::SupersetSlack;
    throw Error("unknown search mode: " + name);
}

std::string mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::DirectSum: return "direct-sum";
        case SearchMode::Sumset: return "sumset";
        case SearchMode::Square: return "square";
        case SearchMode::SubsetSlack: return "subset";
        case SearchMode::SupersetSlack: return "superset";
    }
    return "?";
}

}  // namespace addsys
