// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Rigorous complex enclosures of cyclotomic elements. Interval endpoints are
// arbitrary-precision dyadic numbers (MPFR floats) with outward rounding;
// trigonometric values carry an explicit error bound so every enclosure is a
// true enclosure, not a best-effort estimate.

#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "wittcharge/cyclotomic.hpp"

namespace wittcharge {

/// Closed interval [lo, hi] with dyadic endpoints at a fixed working precision.
class DyadicInterval {
public:
    explicit DyadicInterval(mpfr_prec_t prec = 64) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    DyadicInterval(const DyadicInterval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    DyadicInterval(DyadicInterval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    DyadicInterval& operator=(DyadicInterval o) noexcept {
        prec_ = o.prec_;
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }

    ~DyadicInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static DyadicInterval from_rational(const BigRational& q, mpfr_prec_t prec) {
        DyadicInterval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return prec_; }
    const __mpfr_struct* lo() const { return lo_; }
    const __mpfr_struct* hi() const { return hi_; }
    __mpfr_struct* lo() { return lo_; }
    __mpfr_struct* hi() { return hi_; }

    bool contains_zero() const {
        return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
    }

    /// -1, 0 or +1 when the interval lies strictly on one side of zero;
    /// 0 means the interval still straddles zero.
    int definite_sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    double width() const {
        mpfr_t w;
        mpfr_init2(w, prec_);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double result = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return result;
    }

    double midpoint_double() const {
        mpfr_t m;
        mpfr_init2(m, prec_);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        double result = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return result;
    }

    DyadicInterval operator+(const DyadicInterval& o) const {
        DyadicInterval r(prec_);
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }

    DyadicInterval operator-() const {
        DyadicInterval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    DyadicInterval operator-(const DyadicInterval& o) const { return *this + (-o); }

    DyadicInterval operator*(const DyadicInterval& o) const {
        DyadicInterval r(prec_);
        mpfr_t t;
        mpfr_init2(t, prec_);
        bool first = true;
        const __mpfr_struct* xs[2] = {lo_, hi_};
        const __mpfr_struct* ys[2] = {o.lo_, o.hi_};
        for (const auto* x : xs) {
            for (const auto* y : ys) {
                mpfr_mul(t, x, y, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, x, y, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        }
        mpfr_clear(t);
        return r;
    }

    /// Widen both endpoints outward by eps = 2^exponent.
    void inflate_pow2(long exponent) {
        mpfr_t eps;
        mpfr_init2(eps, prec_);
        mpfr_set_ui_2exp(eps, 1, exponent, MPFR_RNDU);
        mpfr_sub(lo_, lo_, eps, MPFR_RNDD);
        mpfr_add(hi_, hi_, eps, MPFR_RNDU);
        mpfr_clear(eps);
    }

    std::string to_string(size_t digits = 17) const {
        auto fmt = [&](const __mpfr_struct* v) {
            char* s = nullptr;
            mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v);
            std::string out(s);
            mpfr_free_str(s);
            return out;
        };
        return "[" + fmt(lo_) + ", " + fmt(hi_) + "]";
    }

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

struct ComplexInterval {
    DyadicInterval re, im;

    ComplexInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ComplexInterval(DyadicInterval r, DyadicInterval i)
        : re(std::move(r)), im(std::move(i)) {}
};

namespace detail {

/// Enclosures of cos and sin of 2*pi*j/n. The angle itself is enclosed using
/// directed rounding of pi; the trig value at the lower endpoint is then
/// inflated by the angle width plus a few ulps, which dominates the rounding
/// error since |sin'|, |cos'| <= 1.
inline std::pair<DyadicInterval, DyadicInterval> cos_sin_enclosure(i64 j, i64 n,
                                                                  mpfr_prec_t prec) {
    j = mod_pos(j, n);
    mpfr_t theta_lo, theta_hi, width, v;
    mpfr_init2(theta_lo, prec);
    mpfr_init2(theta_hi, prec);
    mpfr_init2(width, prec);
    mpfr_init2(v, prec);

    mpfr_const_pi(theta_lo, MPFR_RNDD);
    mpfr_mul_si(theta_lo, theta_lo, 2 * j, MPFR_RNDD);
    mpfr_div_si(theta_lo, theta_lo, n, MPFR_RNDD);
    mpfr_const_pi(theta_hi, MPFR_RNDU);
    mpfr_mul_si(theta_hi, theta_hi, 2 * j, MPFR_RNDU);
    mpfr_div_si(theta_hi, theta_hi, n, MPFR_RNDU);
    mpfr_sub(width, theta_hi, theta_lo, MPFR_RNDU);

    DyadicInterval cosv(prec), sinv(prec);
    mpfr_cos(v, theta_lo, MPFR_RNDN);
    mpfr_set(cosv.lo(), v, MPFR_RNDD);
    mpfr_set(cosv.hi(), v, MPFR_RNDU);
    mpfr_sin(v, theta_lo, MPFR_RNDN);
    mpfr_set(sinv.lo(), v, MPFR_RNDD);
    mpfr_set(sinv.hi(), v, MPFR_RNDU);

    // error <= angle width + rounding of the trig call (<= 2 ulp of a value <= 1)
    mpfr_t err;
    mpfr_init2(err, prec);
    mpfr_set_ui_2exp(err, 1, -static_cast<long>(prec) + 2, MPFR_RNDU);
    mpfr_add(err, err, width, MPFR_RNDU);
    for (DyadicInterval* iv : {&cosv, &sinv}) {
        mpfr_sub(iv->lo(), iv->lo(), err, MPFR_RNDD);
        mpfr_add(iv->hi(), iv->hi(), err, MPFR_RNDU);
    }

    mpfr_clear(theta_lo);
    mpfr_clear(theta_hi);
    mpfr_clear(width);
    mpfr_clear(v);
    mpfr_clear(err);
    return {std::move(cosv), std::move(sinv)};
}

}  // namespace detail

/// Rigorous enclosure of the complex value of x at the given working precision.
inline ComplexInterval eval_interval(const CycloElem& x, long precision_bits) {
    if (precision_bits < 8) throw OutOfRange("precision_bits must be >= 8");
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    const i64 n = x.conductor();
    ComplexInterval acc(prec);
    for (size_t t = 0; t < x.coeffs().size(); ++t) {
        const BigRational& c = x.coeffs()[t];
        if (c == 0) continue;
        auto ci = DyadicInterval::from_rational(c, prec);
        auto [cosv, sinv] = detail::cos_sin_enclosure(static_cast<i64>(t), n, prec);
        acc.re = acc.re + ci * cosv;
        acc.im = acc.im + ci * sinv;
    }
    return acc;
}

}  // namespace wittcharge
