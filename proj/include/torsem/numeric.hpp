#pragma once

// Exact arbitrary-precision arithmetic used throughout the library.
// Rational values are always kept in lowest terms with positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace torsem {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Floor of p/q for exact integers, correct for negative values.
inline Integer floor_div(const Integer& p, const Integer& q) {
    Integer d = p / q, r = p % q;
    if (r != 0 && ((r < 0) != (q < 0))) d -= 1;
    return d;
}

inline Integer rational_floor(const Rational& x) { return floor_div(num(x), den(x)); }
inline Integer rational_ceil(const Rational& x) { return -floor_div(-num(x), den(x)); }

inline std::string to_string(const Integer& n) { return n.str(); }

// Canonical text form: "p/q", or just "p" when the value is an integer.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Parses "p" or "p/q" with optional leading '-'. Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& text) {
    auto is_int_token = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int_token(text)) return std::nullopt;
            return Rational(Integer(text));
        }
        std::string p = text.substr(0, slash), q = text.substr(slash + 1);
        if (!is_int_token(p) || !is_int_token(q)) return std::nullopt;
        Integer qi(q);
        if (qi == 0) return std::nullopt;
        return Rational(Integer(p), qi);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace torsem
