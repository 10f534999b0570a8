#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "addsys/bigint.hpp"

namespace addsys {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRadix : Error {
    explicit InvalidRadix(const Int& g)
        : Error("radix must be >= 2, got " + g.str()) {}
};

// A finite set literal that does not contain 0.
struct NonZeroBase : Error {
    using Error::Error;
};

// Some n below the bound has two distinct representations; the offending
// value and both representations are kept as evidence.
struct DuplicateRepresentationError : Error {
    Int n;
    std::vector<Int> rep1, rep2;
    DuplicateRepresentationError(Int n_, std::vector<Int> r1, std::vector<Int> r2)
        : Error("duplicate representation of " + n_.str()),
          n(std::move(n_)), rep1(std::move(r1)), rep2(std::move(r2)) {}
};

struct NotAPartition : Error {
    using Error::Error;
};

struct LabelMismatch : Error {
    using Error::Error;
};

struct BoundTooSmall : Error {
    using Error::Error;
};

struct SingletonSystem : Error {
    SingletonSystem() : Error("system has a single member") {}
};

struct InsufficientSchedule : Error {
    using Error::Error;
};

struct UnknownPreset : Error {
    explicit UnknownPreset(const std::string& name)
        : Error("unknown preset: " + name) {}
};

struct DigitOutOfRange : Error {
    std::size_t index;  // 1-based digit position
    DigitOutOfRange(std::size_t i, const Int& x, const Int& g)
        : Error("digit " + std::to_string(i) + " = " + x.str() +
                " outside [0," + g.str() + ")"),
          index(i) {}
};

struct Unsupported : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    int line, column;
    std::string expected;
    SyntaxError(int l, int c, std::string exp)
        : Error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) +
                ", expected " + exp),
          line(l), column(c), expected(std::move(exp)) {}
};

struct DuplicateLabel : Error {
    explicit DuplicateLabel(const std::string& label)
        : Error("duplicate label: " + label) {}
};

}  // namespace addsys
