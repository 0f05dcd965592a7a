#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <string>

namespace squarefold {

/// Exact rational scalar used throughout. Every quantity in the lattice
/// formulas is an integer or a quarter-integer, so int64 components are
/// far from overflow on all supported inputs.
using Rat = boost::rational<long long>;

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

inline long long as_integer(const Rat& x) { return x.numerator(); }

inline int sign(const Rat& x) {
    if (x.numerator() > 0) return 1;
    if (x.numerator() < 0) return -1;
    return 0;
}

inline Rat rabs(const Rat& x) { return x < Rat(0) ? -x : x; }

/// Floor of the integer square root; isqrt(0) = 0.
inline long long isqrt(long long n) {
    if (n <= 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(long long n) {
    if (n < 0) return false;
    long long r = isqrt(n);
    return r * r == n;
}

/// Sign of x - y*sqrt(g) for rational x, y and integer g >= 0, decided
/// without floating point. Exact at the boundary when sqrt(g) is an
/// integer; otherwise x = y*sqrt(g) cannot occur for y != 0.
inline int cmp_root(const Rat& x, const Rat& y, long long g) {
    long long s = isqrt(g);
    if (s * s == g) return sign(x - y * Rat(s));
    int sx = sign(x), sy = sign(y);
    if (sy == 0) return sx;
    if (sx <= 0 && sy > 0) return -1;
    if (sx >= 0 && sy < 0) return 1;
    // both strictly positive or both strictly negative
    Rat d = x * x - y * y * Rat(g);
    int c = sign(d);
    return (sx > 0) ? c : -c;
}

/// Renders "p" for integers, "p/q" otherwise. No floating point output
/// anywhere in the library.
inline std::string to_string(const Rat& x) {
    if (is_integer(x)) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace squarefold
