#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricjets {

// Exact arithmetic everywhere: unbounded integers for lattice data and
// point counts, exact rationals for thresholds and interpolation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned exp)
{
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

// ceil(m/2) for the speciality range 1..ceil(m/2), i.e. m >= 2s-1.
inline int ceil_half(int m) { return (m + 1) / 2; }

inline std::int64_t to_i64(const Int& v)
{
    if (v > Int((std::numeric_limits<std::int64_t>::max)()) ||
        v < Int((std::numeric_limits<std::int64_t>::min)()))
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

} // namespace toricjets
