#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace a3dp {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Arbitrary-precision integer and exact rational, used by all point types and
// by every arithmetic-function evaluation. mpq_class keeps denominators
// positive and fractions reduced, which is exactly the ExactRational contract.
using Int = mpz_class;
using Rat = mpq_class;

inline i64 gcd64(i64 a, i64 b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// gcd(x, m) == 1 with m given as a (possibly 128-bit) product of factors.
// One reduction step brings m into 64-bit range.
inline bool coprime_i128(i64 x, i128 m) {
    if (x < 0) x = -x;
    if (x == 0) return m == 1 || m == -1;
    if (x == 1) return true;
    i64 r = static_cast<i64>(m % x);
    return std::gcd(x, r < 0 ? -r : r) == 1;
}

inline i64 isqrt64(i64 n) {
    if (n <= 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// x^-1 mod m for m >= 1, gcd(x, m) = 1. Extended Euclid.
inline i64 mod_inverse(i64 x, i64 m) {
    if (m == 1) return 0;
    i64 a = x % m;
    if (a < 0) a += m;
    i64 t = 0, new_t = 1;
    i64 r = m, new_r = a;
    while (new_r != 0) {
        i64 q = r / new_r;
        i64 tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return t < 0 ? t + m : t;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) { s += static_cast<char>('0' + static_cast<int>(u % 10)); u /= 10; }
    if (neg) s += '-';
    return {s.rbegin(), s.rend()};
}

// "num/den" (or plain "num" when den == 1); the wire format for exact
// rationals in reports.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace a3dp
