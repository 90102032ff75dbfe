#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "dtgraphs/errors.hpp"

namespace dtg {

/// Exact arbitrary-precision rational. All weight arithmetic runs on this
/// type; floating point appears only at serialization boundaries.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Renders as "p/q" ("p" when q == 1).
inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parses "p", "p/q", or a plain decimal like "2.5" (kept exact).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidParameters("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw InvalidParameters("zero denominator in: " + text);
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            bool neg = !digits.empty() && digits[0] == '-';
            BigInt num(digits);
            BigInt den = 1;
            for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            (void)neg;
            return Rational(num, den);
        }
        return Rational(BigInt(text));
    } catch (const std::exception& e) {
        throw InvalidParameters("bad rational literal '" + text + "': " + e.what());
    }
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace dtg
