#pragma once

#include <cstdint>
#include <numeric>

#include "exlat/error.hpp"

namespace exlat {

using i64 = std::int64_t;

// Every integer in the library stays within |x| <= 2^62. Arithmetic that
// would leave the band throws errc::overflow instead of wrapping.
inline constexpr i64 working_bound = i64(1) << 62;

inline i64 chk(i64 x) {
    if (x > working_bound || x < -working_bound)
        fail(errc::overflow, "integer exceeds working bound 2^62");
    return x;
}

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        fail(errc::overflow, "integer addition overflow");
    return chk(r);
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        fail(errc::overflow, "integer subtraction overflow");
    return chk(r);
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(errc::overflow, "integer multiplication overflow");
    return chk(r);
}

inline i64 neg(i64 a) { return sub(0, a); }

inline i64 gcd_nonneg(i64 a, i64 b) {
    return std::gcd(a, b); // std::gcd already returns a non-negative value
}

// Floor division and the matching non-negative remainder.
inline i64 fdiv(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i64 fmod(i64 a, i64 b) { return sub(a, mul(fdiv(a, b), b)); }

// Largest s with s^2 <= n (n >= 0).
inline i64 isqrt(i64 n) {
    if (n < 0) fail(errc::bad_input, "isqrt of negative integer");
    if (n == 0) return 0;
    i64 s = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

inline bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 s = isqrt(n);
    return s * s == n;
}

} // namespace exlat
