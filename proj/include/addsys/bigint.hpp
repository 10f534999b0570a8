#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace addsys {

// Arbitrary-precision nonnegative integers everywhere; overflow is not a
// correctness hazard at any scale.
using Int = boost::multiprecision::cpp_int;

// ceil(a / b) for nonnegative a and positive b.
inline Int ceil_div(const Int& a, const Int& b) {
    return (a + b - 1) / b;
}

// Checked narrowing for loop counters and array sizes. Enumeration windows
// are desk-scale; anything that does not fit a machine word is a caller bug.
inline unsigned long long to_index(const Int& n) {
    if (n < 0 || n > 1'000'000'000ULL) {
        throw std::runtime_error("enumeration window out of range: " + n.str());
    }
    return n.convert_to<unsigned long long>();
}

}  // namespace addsys
