// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "wittcharge/errors.hpp"

namespace wittcharge {

using i64 = long long;

inline i64 gcd_ll(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm_ll(i64 a, i64 b) { return std::lcm(a, b); }

/// Nonnegative residue of a mod m (m > 0).
inline i64 mod_pos(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/// Euler totient by trial factorization.
inline i64 euler_phi(i64 n) {
    i64 result = n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Divisors of n in ascending order.
inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> ds;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Distinct prime factors, ascending.
inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> ps;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline i64 odd_part(i64 n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

/// Extended Euclid: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct ExtGcd {
    i64 g, x, y;
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
    if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1 : -1, 0};
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

/// Inverse of a modulo m (m > 0, gcd(a,m) = 1).
inline i64 mod_inverse(i64 a, i64 m) {
    auto e = ext_gcd(mod_pos(a, m), m);
    if (e.g != 1) throw NotCoprime("no inverse modulo " + std::to_string(m));
    return mod_pos(e.x, m);
}

inline i64 mod_pow(i64 base, i64 exp, i64 m) {
    base = mod_pos(base, m);
    i64 result = 1 % m;
    while (exp > 0) {
        if (exp & 1) result = (result * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return result;
}

/// Jacobi symbol (k/n) for odd n >= 1 without precondition checks.
/// Returns 0 iff gcd(k,n) > 1.
inline int jacobi_symbol(i64 k, i64 n) {
    k = mod_pos(k, n);
    int result = 1;
    while (k != 0) {
        while (k % 2 == 0) {
            k /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(k, n);
        if (k % 4 == 3 && n % 4 == 3) result = -result;
        k %= n;
    }
    return n == 1 ? result : 0;
}

/// Least quadratic non-residue modulo an odd prime p.
inline i64 least_nonresidue(i64 p) {
    for (i64 u = 2; u < p; ++u)
        if (jacobi_symbol(u, p) == -1) return u;
    throw OutOfRange("no quadratic non-residue modulo " + std::to_string(p));
}

/// Units modulo m in ascending order.
inline std::vector<i64> units_mod(i64 m) {
    if (m <= 1) return {0};
    std::vector<i64> us;
    for (i64 k = 1; k < m; ++k)
        if (gcd_ll(k, m) == 1) us.push_back(k);
    return us;
}

}  // namespace wittcharge
