#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quatrace {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Residue of a in [0, m), valid for negative a. m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline int mod4(const Int& a) { return static_cast<int>(mod_floor(a, 4)); }
inline int mod8(const Int& a) { return static_cast<int>(mod_floor(a, 8)); }

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

/// Largest r with r*r <= n. n >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

} // namespace quatrace
