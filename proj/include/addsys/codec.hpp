#pragma once

#include <string>
#include <vector>

#include "addsys/bigint.hpp"
#include "addsys/errors.hpp"

namespace addsys {

// Digit vector x_i in [0, g_i), least-significant-first, plus the overflow
// term x_{r+1}: n = sum G_{i-1} x_i + G_r * overflow.
struct MixedRadixDigits {
    std::vector<Int> digits;
    Int overflow = 0;

    bool operator==(const MixedRadixDigits&) const = default;
};

// Iterated division algorithm; overflow is 0 exactly when n < G_r.
MixedRadixDigits encode(Int n, const std::vector<Int>& radices);

// sum G_{i-1} x_i + G_r * overflow; throws DigitOutOfRange on a bad digit.
Int decode(const MixedRadixDigits& d, const std::vector<Int>& radices);

// Named radix sequences:
//   british-monetary -> (12,20)
//   binary-k         -> k copies of 2
//   g-adic(g,k)      -> k copies of g
//   factorial-k      -> (2,3,...,k+1)
std::vector<Int> preset(const std::string& name);

// Text form "7,9+3": comma-separated digits, "+overflow" suffix when nonzero.
std::string format_digits(const MixedRadixDigits& d, bool most_significant_first = false);
MixedRadixDigits parse_digits(const std::string& text, bool most_significant_first = false);

}  // namespace addsys
