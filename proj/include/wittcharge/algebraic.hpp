// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Roots of unity, square roots of integers via quadratic Gauss sums, exact
// sines of rational angles and the certified sign of real cyclotomic elements.

#pragma once

#include <string>

#include "wittcharge/cyclotomic.hpp"
#include "wittcharge/interval.hpp"

namespace wittcharge {

// Default working precisions for certified sign evaluation; mutable so the
// CLI can reconfigure them process-wide.
inline long kSignPrecisionStart = 64;
inline long kSignPrecisionCap = 16384;

/// zeta_d^a in lowest terms: gcd(a,d) = 1, or (a,d) = (0,1) for the unit.
class RootOfUnity {
public:
    RootOfUnity() : order_(1), exponent_(0) {}

    RootOfUnity(i64 order, i64 exponent) {
        if (order < 1) throw OutOfRange("root-of-unity order must be positive");
        exponent = mod_pos(exponent, order);
        i64 g = gcd_ll(exponent, order);
        if (exponent == 0) {
            order_ = 1;
            exponent_ = 0;
        } else {
            order_ = order / g;
            exponent_ = exponent / g;
        }
    }

    i64 order() const { return order_; }
    i64 exponent() const { return exponent_; }
    bool is_one() const { return order_ == 1; }

    RootOfUnity operator*(const RootOfUnity& o) const {
        i64 d = lcm_ll(order_, o.order_);
        return {d, exponent_ * (d / order_) + o.exponent_ * (d / o.order_)};
    }

    RootOfUnity pow(i64 e) const {
        i64 r = mod_pos(e, order_);
        return {order_, exponent_ * r};
    }

    RootOfUnity inverse() const { return {order_, -exponent_}; }

    bool operator==(const RootOfUnity& o) const {
        return order_ == o.order_ && exponent_ == o.exponent_;
    }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    CycloElem to_cyclo() const { return wittcharge::pow(zeta(order_), exponent_); }

    /// Image under sigma_k; requires gcd(k, order) = 1.
    RootOfUnity galois(i64 k) const {
        if (gcd_ll(mod_pos(k, order_), order_) != 1 && order_ > 1)
            throw NotCoprime("Galois action on root of unity");
        return {order_, exponent_ * mod_pos(k, order_)};
    }

    std::string to_string() const {
        if (order_ == 1) return "1";
        if (order_ == 2) return "-1";
        return "zeta(" + std::to_string(order_) + ")^" + std::to_string(exponent_);
    }

private:
    i64 order_, exponent_;
};

inline RootOfUnity minus_one() { return {2, 1}; }

/// sin(j*pi/m) as the exact element (zeta_{2m}^j - zeta_{2m}^{-j}) / (2i).
inline CycloElem sin_cyclo(i64 j, i64 m) {
    if (m < 1) throw OutOfRange("sin_cyclo requires m >= 1");
    i64 two_m = 2 * m;
    CycloElem z = zeta(two_m);
    CycloElem num = pow(z, mod_pos(j, two_m)) - pow(z, mod_pos(-j, two_m));
    CycloElem two_i = CycloElem(2) * zeta(4);
    return num * invert(two_i);
}

/// Exact sign of a real element: 0 iff exactly zero, otherwise by interval
/// evaluation with doubling precision until zero is excluded.
inline int certified_sign(const CycloElem& x, long start_bits = 0, long cap_bits = 0) {
    if (start_bits <= 0) start_bits = kSignPrecisionStart;
    if (cap_bits <= 0) cap_bits = kSignPrecisionCap;
    if (start_bits > cap_bits) throw OutOfRange("precision start exceeds cap");
    if (!is_real(x)) throw NotReal();
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.rational_value());
    for (long prec = start_bits; prec <= cap_bits; prec *= 2) {
        int s = eval_interval(x, prec).re.definite_sign();
        if (s != 0) return s;
    }
    throw PrecisionExhausted();
}

/// Exact match of x against the roots of unity of Q(zeta_n), which all lie in
/// mu_{lcm(2,n)}. Throws NotARootOfUnity if no candidate matches.
inline RootOfUnity as_root_of_unity(const CycloElem& x) {
    if (x.is_zero()) throw ZeroElement();
    i64 n = x.conductor();
    i64 L = lcm_ll(2, n);
    CycloElem zn = zeta(n);
    CycloElem p(1);
    for (i64 j = 0; j < n; ++j) {
        if (x == p) return RootOfUnity(L, j * (L / n));
        if (x == neg(p)) return RootOfUnity(L, j * (L / n) + L / 2);
        p = mul(p, zn);
    }
    throw NotARootOfUnity();
}

/// tau/|tau| as an exact root of unity, for tau = |tau| * (root of unity).
/// The square tau/conj(tau) is recognized exactly; the sign of its square
/// root is fixed by the certified sign of tau * conj(candidate) = +-|tau|.
inline RootOfUnity central_charge(const CycloElem& tau) {
    if (tau.is_zero()) throw ZeroGaussSum();
    RootOfUnity u = as_root_of_unity(tau * invert(conj(tau)));
    RootOfUnity cand(2 * u.order(), u.exponent());
    CycloElem probe = tau * cand.inverse().to_cyclo();
    if (certified_sign(probe, 128) < 0) cand = cand * minus_one();
    return cand;
}

/// Quadratic Gauss sum sum_{a=1}^{p-1} (a/p) zeta_p^a = sqrt(p*) for an odd
/// prime p, where p* = (-1)^{(p-1)/2} p.
inline CycloElem quadratic_gauss_sum(i64 p) {
    detail::QPoly poly(static_cast<size_t>(p), BigRational(0));
    for (i64 a = 1; a < p; ++a) poly[static_cast<size_t>(a)] = jacobi_symbol(a, p);
    return CycloElem(p, std::move(poly));
}

/// Exact square root of a nonzero integer m: X with X^2 = m, X numerically
/// positive for m > 0 and X/i positive for m < 0.
inline CycloElem sqrt_int(i64 m) {
    if (m == 0) throw ZeroElement();
    i64 am = m < 0 ? -m : m;
    // am = s * t^2 with s squarefree
    i64 s = 1, t = 1;
    {
        i64 rest = am;
        for (i64 p = 2; p * p <= rest; ++p) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) t *= p;
            if (e % 2) s *= p;
        }
        if (rest > 1) s *= rest;
    }
    CycloElem x{BigRational(static_cast<long>(t))};
    if (s % 2 == 0) {
        // sqrt(2) = zeta_8 + zeta_8^{-1}
        x = x * (zeta(8) + pow(zeta(8), 7));
    }
    for (i64 p : prime_factors(s)) {
        if (p == 2) continue;
        x = x * quadratic_gauss_sum(p);
    }
    // x^2 = +-|m|; a factor of i flips the sign of the square.
    CycloElem sq = x * x;
    if (sq == CycloElem(BigRational(static_cast<long>(-m)))) x = x * zeta(4);
    else if (sq != CycloElem(BigRational(static_cast<long>(m))))
        throw Error("sqrt_int assembly failed");
    if (m > 0) {
        if (certified_sign(x) < 0) x = neg(x);
    } else {
        // x is purely imaginary; x/i = -i*x is real.
        CycloElem ratio = x * pow(zeta(4), 3);
        if (certified_sign(ratio) < 0) x = neg(x);
    }
    return x;
}

}  // namespace wittcharge
