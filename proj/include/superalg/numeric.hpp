#ifndef SUPERALG_NUMERIC_HPP
#define SUPERALG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "superalg/errors.hpp"

namespace superalg {

// Arbitrary-precision integers and rationals; the whole kernel is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

/// Renders a rational as "p" or "p/q" with q > 0.
inline std::string to_string(const Rat& v) {
    Int n = boost::multiprecision::numerator(v);
    Int d = boost::multiprecision::denominator(v);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline bool valid_int_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline Int parse_int(const std::string& s) {
    require(valid_int_literal(s), errc::malformed_input, "not an integer: '" + s + "'");
    return Int(s);
}

/// Parses "p" or "p/q" (q nonzero).
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    require(den != 0, errc::malformed_input, "zero denominator in '" + s + "'");
    return Rat(num, den);
}

} // namespace superalg

#endif
