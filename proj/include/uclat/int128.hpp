#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace uclat {

using i128 = __int128;
using u128 = unsigned __int128;

// floor(sqrt(n)) for machine integers, exact.
inline long long isqrt_ll(long long n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square_ll(long long n, long long& root) {
    if (n < 0) return false;
    root = isqrt_ll(n);
    return root * root == n;
}

inline u128 u128_abs(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

// floor(a / b) for b > 0.
inline i128 floor_div_i128(i128 a, i128 b) {
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// ceil(a / b) for b > 0.
inline i128 ceil_div_i128(i128 a, i128 b) {
    i128 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// floor(sqrt(x)), exact.
inline u128 isqrt_u128(u128 x) {
    if (x == 0) return 0;
    u128 r = static_cast<u128>(__builtin_sqrtl(static_cast<long double>(x)));
    // long double gives ~64 bits of mantissa; fix up the estimate exactly.
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x && r + 1 != 0) ++r;
    return r;
}

inline bool is_square_u128(u128 x, u128& root) {
    root = isqrt_u128(x);
    return root * root == x;
}

// 256-bit product of two u128 values, as (hi, lo) u128 halves.
struct U256 {
    u128 hi;
    u128 lo;

    friend bool operator==(const U256& a, const U256& b) { return a.hi == b.hi && a.lo == b.lo; }
    friend bool operator<(const U256& a, const U256& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

inline U256 mul_u128(u128 a, u128 b) {
    const u128 mask = (static_cast<u128>(1) << 64) - 1;
    u128 a0 = a & mask, a1 = a >> 64;
    u128 b0 = b & mask, b1 = b >> 64;
    u128 ll = a0 * b0;
    u128 lh = a0 * b1;
    u128 hl = a1 * b0;
    u128 hh = a1 * b1;
    u128 mid = (ll >> 64) + (lh & mask) + (hl & mask);
    U256 r;
    r.lo = (ll & mask) | (mid << 64);
    r.hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    return r;
}

// Exact comparison of a*b vs c*d over unsigned 128-bit operands.
inline int cmp_mul_u128(u128 a, u128 b, u128 c, u128 d) {
    U256 x = mul_u128(a, b);
    U256 y = mul_u128(c, d);
    if (x == y) return 0;
    return x < y ? -1 : 1;
}

}  // namespace uclat
