#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace adclat {

// Exact rational arithmetic for densities and masses. All quantities in this
// library are small (numerators/denominators are products of a few prime
// powers), so 64-bit components are plenty.
using Rat = boost::rational<long long>;

inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// q^k as an exact rational, valid for negative k.
inline Rat pow_rat(long long q, long long k) {
    Rat r(1);
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) r *= Rat(q);
    return k < 0 ? Rat(1) / r : r;
}

inline long long ipow(long long b, int k) {
    long long r = 1;
    while (k-- > 0) r *= b;
    return r;
}

} // namespace adclat
