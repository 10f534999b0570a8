#include "addsys/codec.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace addsys {

MixedRadixDigits encode(Int n, const std::vector<Int>& radices) {
    if (n < 0) throw Error("encode: n must be nonnegative");
    MixedRadixDigits out;
    for (const Int& g : radices) {
        if (g < 2) throw InvalidRadix(g);
        out.digits.push_back(n % g);
        n /= g;
    }
    out.overflow = n;
    return out;
}

Int decode(const MixedRadixDigits& d, const std::vector<Int>& radices) {
    if (d.digits.size() != radices.size()) {
        throw Error("decode: digit count does not match radix count");
    }
    Int n = 0, G = 1;
    for (std::size_t i = 0; i < radices.size(); ++i) {
        if (radices[i] < 2) throw InvalidRadix(radices[i]);
        if (d.digits[i] < 0 || d.digits[i] >= radices[i]) {
            throw DigitOutOfRange(i + 1, d.digits[i], radices[i]);
        }
        n += G * d.digits[i];
        G *= radices[i];
    }
    if (d.overflow < 0) throw Error("decode: negative overflow");
    return n + G * d.overflow;
}

namespace {

// "name-k" -> k, or nullopt.
std::optional<Int> suffix_count(const std::string& name, const std::string& stem) {
    if (name.size() <= stem.size() || name.compare(0, stem.size(), stem) != 0) {
        return std::nullopt;
    }
    std::string rest = name.substr(stem.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        return std::nullopt;
    }
    return Int(rest);
}

}  // namespace

std::vector<Int> preset(const std::string& name) {
    if (name == "british-monetary") return {12, 20};
    if (auto k = suffix_count(name, "binary-")) {
        return std::vector<Int>(to_index(*k), Int(2));
    }
    if (auto k = suffix_count(name, "factorial-")) {
        std::vector<Int> out;
        for (Int g = 2; g <= *k + 1; ++g) out.push_back(g);
        return out;
    }
    if (name.rfind("g-adic(", 0) == 0 && name.back() == ')') {
        std::string body = name.substr(7, name.size() - 8);
        auto comma = body.find(',');
        if (comma != std::string::npos) {
            std::string gs = body.substr(0, comma), ks = body.substr(comma + 1);
            auto numeric = [](const std::string& s) {
                return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
                    return std::isdigit(c);
                });
            };
            if (numeric(gs) && numeric(ks)) {
                Int g(gs);
                if (g < 2) throw InvalidRadix(g);
                return std::vector<Int>(to_index(Int(ks)), g);
            }
        }
    }
    throw UnknownPreset(name);
}

std::string format_digits(const MixedRadixDigits& d, bool most_significant_first) {
    std::vector<Int> digits = d.digits;
    if (most_significant_first) std::reverse(digits.begin(), digits.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ",";
        os << digits[i];
    }
    if (d.overflow > 0) os << "+" << d.overflow;
    return os.str();
}

MixedRadixDigits parse_digits(const std::string& text, bool most_significant_first) {
    MixedRadixDigits out;
    std::string body = text;
    if (auto plus = text.find('+'); plus != std::string::npos) {
        out.overflow = Int(text.substr(plus + 1));
        body = text.substr(0, plus);
    }
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw Error("empty digit in \"" + text + "\"");
        out.digits.emplace_back(tok);
    }
    if (most_significant_first) std::reverse(out.digits.begin(), out.digits.end());
    return out;
}

}  // namespace addsys
