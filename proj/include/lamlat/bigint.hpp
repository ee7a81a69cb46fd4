/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer alias and small exact-integer helpers.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace lamlat {

using BigInt = boost::multiprecision::cpp_int;
using Int128 = __int128;

/// Floor of the square root of a non-negative integer.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline Int128 isqrt(Int128 n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    if (n < 2) return n;
    // Newton from a floating seed, then correct by +-1 steps.
    auto r = static_cast<Int128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Floor division for a positive divisor.
template <class Int>
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

template <class Int>
Int ceil_div(const Int& a, const Int& b) {
    return -floor_div<Int>(-a, b);
}

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const BigInt& v) {
    if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

inline BigInt to_big(Int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u & 0xFFFFFFFFFFFFFFFFull);
    return neg ? BigInt(-r) : r;
}

inline std::int64_t to_int64(Int128 v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t to_int64(std::int64_t v) { return v; }

}  // namespace lamlat
