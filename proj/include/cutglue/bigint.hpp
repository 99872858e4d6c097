#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer and rational scalars used throughout cutglue.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cutglue {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return den(q) == 1; }

inline int sign(const Integer& a) { return a.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline std::string to_string(const Integer& a) { return a.str(); }

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool fits_u64(const Integer& a) {
    return a >= 0 && a <= Integer(std::numeric_limits<std::uint64_t>::max());
}

} // namespace cutglue
