// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in cyclotomic fields Q(zeta_n). Elements are stored as
// canonical representatives modulo the n-th cyclotomic polynomial, so equality
// is a coefficient comparison after embedding into a common conductor.

#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "wittcharge/errors.hpp"
#include "wittcharge/number_theory.hpp"

namespace wittcharge {

using BigInt = mpz_class;
using BigRational = mpq_class;

namespace detail {

using ZPoly = std::vector<BigInt>;       // dense, index = power, trimmed
using QPoly = std::vector<BigRational>;  // dense, index = power

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact quotient of integer polynomials; divisor must be monic and divide a.
inline ZPoly divide_exact(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
    for (auto i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        BigInt c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        size_t shift = static_cast<size_t>(i) - (b.size() - 1);
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw Error("non-exact polynomial division");
    trim(q);
    return q;
}

/// Remainder of a modulo a monic integer polynomial m, in place.
inline void reduce_mod(QPoly& a, const ZPoly& m) {
    const size_t d = m.size() - 1;
    for (auto i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(d); --i) {
        BigRational c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        a[static_cast<size_t>(i)] = 0;
        size_t shift = static_cast<size_t>(i) - d;
        for (size_t j = 0; j < d; ++j) a[shift + j] -= c * m[j];
    }
    a.resize(d);
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace detail

/// Phi_n, monic with integer coefficients, computed by recursive division of
/// x^n - 1 by Phi_d over the proper divisors d. Cached; safe for concurrent
/// reads with idempotent fills.
inline const detail::ZPoly& cyclotomic_polynomial(i64 n) {
    static std::map<i64, detail::ZPoly> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1
    detail::ZPoly poly(static_cast<size_t>(n) + 1, BigInt(0));
    poly[0] = -1;
    poly[static_cast<size_t>(n)] = 1;
    for (i64 d : divisors(n)) {
        if (d == n) continue;
        poly = detail::divide_exact(poly, cyclotomic_polynomial(d));
    }
    std::unique_lock lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

/// The field automorphism sigma_k of Q(zeta_n) with sigma_k(zeta_n) = zeta_n^k.
struct GaloisElem {
    i64 modulus = 1;
    i64 k = 0;  // 0 for modulus 1, otherwise 1 <= k < modulus with gcd(k,modulus)=1

    GaloisElem() = default;
    GaloisElem(i64 modulus_, i64 k_) : modulus(modulus_) {
        if (modulus < 1) throw OutOfRange("Galois modulus must be positive");
        k = mod_pos(k_, modulus);
        if (modulus > 1 && gcd_ll(k, modulus) != 1)
            throw NotCoprime("sigma_k requires gcd(k, modulus) = 1");
    }

    GaloisElem inverse() const {
        if (modulus == 1) return *this;
        return {modulus, mod_inverse(k, modulus)};
    }

    /// Composition: sigma_j o sigma_k = sigma_{jk mod n}. Equal moduli required.
    GaloisElem compose(const GaloisElem& other) const {
        if (modulus != other.modulus)
            throw IncompatibleModulus("composition needs equal moduli");
        if (modulus == 1) return *this;
        return {modulus, mod_pos(k * other.k, modulus)};
    }
};

/// Exact element of Q(zeta_n): a polynomial in zeta_n of degree < phi(n),
/// reduced modulo Phi_n. Immutable in practice; all operations are pure.
class CycloElem {
public:
    CycloElem() : conductor_(1), coeffs_(1, BigRational(0)) {}

    /* implicit */ CycloElem(const BigRational& q) : conductor_(1), coeffs_(1, q) {}
    /* implicit */ CycloElem(long v) : conductor_(1), coeffs_(1, BigRational(v)) {}
    /* implicit */ CycloElem(int v) : conductor_(1), coeffs_(1, BigRational(v)) {}

    /// From an arbitrary polynomial in zeta_n; reduces to canonical form.
    CycloElem(i64 conductor, detail::QPoly poly) : conductor_(conductor) {
        if (conductor < 1) throw OutOfRange("conductor must be positive");
        const auto& phi = cyclotomic_polynomial(conductor);
        detail::reduce_mod(poly, phi);
        coeffs_ = std::move(poly);
        coeffs_.resize(phi.size() - 1, BigRational(0));
    }

    i64 conductor() const { return conductor_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    BigRational rational_value() const {
        if (!is_rational()) throw Error("element is not rational");
        return coeffs_[0];
    }

private:
    i64 conductor_;
    std::vector<BigRational> coeffs_;  // size phi(conductor_)
};

/// zeta_n = exp(2*pi*i/n) at conductor n, canonically reduced.
inline CycloElem zeta(i64 n) {
    if (n < 1) throw OutOfRange("zeta requires n >= 1");
    detail::QPoly p(n == 1 ? 1 : 2, BigRational(0));
    if (n == 1)
        p[0] = 1;
    else
        p[1] = 1;
    return CycloElem(n, std::move(p));
}

/// Same field element represented at conductor m (requires conductor | m).
inline CycloElem embed(const CycloElem& x, i64 m) {
    i64 n = x.conductor();
    if (m % n != 0)
        throw NotADivisor(std::to_string(n) + " does not divide " + std::to_string(m));
    if (m == n) return x;
    i64 step = m / n;
    detail::QPoly p(static_cast<size_t>((x.coeffs().size() - 1) * step) + 1, BigRational(0));
    for (size_t i = 0; i < x.coeffs().size(); ++i) p[i * static_cast<size_t>(step)] = x.coeffs()[i];
    return CycloElem(m, std::move(p));
}

inline CycloElem add(const CycloElem& x, const CycloElem& y) {
    i64 m = lcm_ll(x.conductor(), y.conductor());
    CycloElem a = embed(x, m), b = embed(y, m);
    detail::QPoly p = a.coeffs();
    for (size_t i = 0; i < p.size(); ++i) p[i] += b.coeffs()[i];
    return CycloElem(m, std::move(p));
}

inline CycloElem neg(const CycloElem& x) {
    detail::QPoly p = x.coeffs();
    for (auto& c : p) c = -c;
    return CycloElem(x.conductor(), std::move(p));
}

inline CycloElem sub(const CycloElem& x, const CycloElem& y) { return add(x, neg(y)); }

inline CycloElem mul(const CycloElem& x, const CycloElem& y) {
    i64 m = lcm_ll(x.conductor(), y.conductor());
    CycloElem a = embed(x, m), b = embed(y, m);
    return CycloElem(m, detail::mul(a.coeffs(), b.coeffs()));
}

inline CycloElem operator+(const CycloElem& x, const CycloElem& y) { return add(x, y); }
inline CycloElem operator-(const CycloElem& x, const CycloElem& y) { return sub(x, y); }
inline CycloElem operator-(const CycloElem& x) { return neg(x); }
inline CycloElem operator*(const CycloElem& x, const CycloElem& y) { return mul(x, y); }

inline bool equals(const CycloElem& x, const CycloElem& y) {
    i64 m = lcm_ll(x.conductor(), y.conductor());
    return embed(x, m).coeffs() == embed(y, m).coeffs();
}

inline bool operator==(const CycloElem& x, const CycloElem& y) { return equals(x, y); }
inline bool operator!=(const CycloElem& x, const CycloElem& y) { return !equals(x, y); }

/// Image of x under zeta_n -> zeta_n^k. Requires conductor(x) | sigma.modulus.
inline CycloElem galois_apply(const GaloisElem& sigma, const CycloElem& x) {
    i64 n = x.conductor();
    if (sigma.modulus % n != 0)
        throw IncompatibleModulus("conductor " + std::to_string(n) + " does not divide " +
                                  std::to_string(sigma.modulus));
    if (n == 1) return x;
    i64 k = mod_pos(sigma.modulus == 1 ? 1 : sigma.k, n);
    detail::QPoly p(static_cast<size_t>(n), BigRational(0));
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        size_t t = static_cast<size_t>((static_cast<i64>(i) * k) % n);
        p[t] += x.coeffs()[i];
    }
    return CycloElem(n, std::move(p));
}

/// Complex conjugation, i.e. the Galois action of -1 mod n.
inline CycloElem conj(const CycloElem& x) {
    i64 n = x.conductor();
    if (n <= 2) return x;
    return galois_apply(GaloisElem(n, n - 1), x);
}

inline bool is_real(const CycloElem& x) { return conj(x) == x; }

/// Multiplicative inverse via extended Euclid against Phi_n over Q.
inline CycloElem invert(const CycloElem& x) {
    if (x.is_zero()) throw DivisionByZero();
    if (x.is_rational()) return CycloElem(BigRational(1) / x.rational_value());
    i64 n = x.conductor();
    const auto& phi_z = cyclotomic_polynomial(n);
    detail::QPoly r0(phi_z.begin(), phi_z.end());
    detail::QPoly r1 = x.coeffs();
    detail::trim(r1);
    detail::QPoly s0{}, s1{BigRational(1)};  // s tracks the cofactor of x
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        detail::QPoly q;
        detail::QPoly r2 = r0;
        const size_t d1 = r1.size() - 1;
        const BigRational lead = r1.back();
        if (r2.size() > d1) q.assign(r2.size() - d1, BigRational(0));
        for (auto i = static_cast<long>(r2.size()) - 1; i >= static_cast<long>(d1); --i) {
            BigRational c = r2[static_cast<size_t>(i)] / lead;
            if (c == 0) continue;
            size_t shift = static_cast<size_t>(i) - d1;
            q[shift] = c;
            for (size_t j = 0; j <= d1; ++j) r2[shift + j] -= c * r1[j];
        }
        detail::trim(r2);
        detail::QPoly s2 = s0;
        {
            detail::QPoly qs = detail::mul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), BigRational(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            detail::trim(s2);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd(x, Phi_n), a nonzero constant since x is a unit mod Phi_n.
    if (r0.size() != 1) throw Error("element not invertible modulo Phi_n");
    BigRational g = r0[0];
    for (auto& c : s0) c /= g;
    return CycloElem(n, std::move(s0));
}

inline CycloElem operator/(const CycloElem& x, const CycloElem& y) { return mul(x, invert(y)); }

inline CycloElem pow(const CycloElem& x, i64 e) {
    if (e < 0) return invert(pow(x, -e));
    CycloElem result(1);
    CycloElem base = x;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

/// Re-express x at conductor d | conductor(x), if x lies in Q(zeta_d).
/// Solves the exact linear system over the power basis of Q(zeta_d) embedded
/// at the current conductor.
inline std::optional<CycloElem> reduce_to_conductor(const CycloElem& x, i64 d) {
    i64 n = x.conductor();
    if (n % d != 0) throw NotADivisor("target conductor must divide current one");
    if (d == n) return x;
    const size_t rows = x.coeffs().size();
    const size_t cols = static_cast<size_t>(euler_phi(d));
    // Column j = canonical form of zeta_d^j at conductor n.
    std::vector<std::vector<BigRational>> m(rows, std::vector<BigRational>(cols + 1, BigRational(0)));
    CycloElem zd = embed(zeta(d), n);
    CycloElem p = embed(CycloElem(1), n);
    for (size_t j = 0; j < cols; ++j) {
        for (size_t i = 0; i < rows; ++i) m[i][j] = p.coeffs()[i];
        if (j + 1 < cols) p = mul(p, zd);
    }
    for (size_t i = 0; i < rows; ++i) m[i][cols] = x.coeffs()[i];
    // Gaussian elimination.
    size_t row = 0;
    std::vector<long> pivot_col(cols, -1);
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        BigRational inv = 1 / m[row][col];
        for (size_t j = col; j <= cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            BigRational f = m[i][col];
            for (size_t j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[col] = static_cast<long>(row);
        ++row;
    }
    // Consistency: zero rows must have zero RHS.
    for (size_t i = row; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    detail::QPoly sol(cols, BigRational(0));
    for (size_t col = 0; col < cols; ++col)
        if (pivot_col[col] >= 0) sol[col] = m[static_cast<size_t>(pivot_col[col])][cols];
    return CycloElem(d, std::move(sol));
}

/// Smallest-conductor representation of x among divisors of its conductor.
/// Equality never depends on this; it is a normalization convenience.
inline CycloElem minimize_conductor(const CycloElem& x) {
    for (i64 d : divisors(x.conductor())) {
        if (auto r = reduce_to_conductor(x, d)) return *r;
    }
    return x;  // unreachable: d = conductor always succeeds
}

}  // namespace wittcharge
