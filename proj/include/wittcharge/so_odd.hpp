// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Modular data of the quantum-group categories C_r attached to so(2r+1) at
// level 2r+1: alcove enumeration, twists, quantum dimensions, the
// Frobenius-Schur exponent, the global dimension with its closed-form square
// root D_r, Gauss sums tau_n and central charges xi_n.
//
// Conventions: all weight and root coordinates in the e-basis are stored
// doubled (so half-integer entries become integers); the bilinear form with
// (e_i|e_j) = delta_ij is then sum(a2_i*b2_i)/4.

#pragma once

#include <vector>

#include "wittcharge/algebraic.hpp"
#include "wittcharge/cyclotomic.hpp"

namespace wittcharge {

using IntVec = std::vector<i64>;

/// Root-system data of B_r. Vectors are doubled e-basis coordinates.
struct RootData {
    i64 rank;
    i64 n;             // level shift, n = 2r+1
    i64 dual_coxeter;  // 2r-1
    std::vector<IntVec> positive_roots;
    IntVec rho2;      // 2*rho
    IntVec highest_root;  // doubled: 2*theta_0

    static RootData build(i64 r) {
        if (r < 1) throw OutOfRange("rank must be >= 1");
        RootData d;
        d.rank = r;
        d.n = 2 * r + 1;
        d.dual_coxeter = 2 * r - 1;
        for (i64 i = 0; i < r; ++i) {
            IntVec v(static_cast<size_t>(r), 0);
            v[static_cast<size_t>(i)] = 2;  // short root e_i
            d.positive_roots.push_back(v);
        }
        for (i64 i = 0; i < r; ++i) {
            for (i64 j = i + 1; j < r; ++j) {
                IntVec diff(static_cast<size_t>(r), 0), sum(static_cast<size_t>(r), 0);
                diff[static_cast<size_t>(i)] = 2;
                diff[static_cast<size_t>(j)] = -2;
                sum[static_cast<size_t>(i)] = 2;
                sum[static_cast<size_t>(j)] = 2;
                d.positive_roots.push_back(diff);  // e_i - e_j
                d.positive_roots.push_back(sum);   // e_i + e_j
            }
        }
        for (i64 i = 0; i < r; ++i) d.rho2.push_back(2 * (r - i) - 1);
        d.highest_root.assign(static_cast<size_t>(r), 0);
        d.highest_root[0] = 2;
        if (r >= 2) d.highest_root[1] = 2;  // theta_0 = e_1 + e_2; e_1 when r = 1
        return d;
    }
};

/// A dominant weight in the fundamental alcove, stored as 2*lambda.
struct AlcoveWeight {
    IntVec coords2;
};

/// (a|b) from doubled coordinates.
inline BigRational inner_product(const IntVec& a2, const IntVec& b2) {
    if (a2.size() != b2.size()) throw RankMismatch();
    BigRational acc(0);
    for (size_t i = 0; i < a2.size(); ++i)
        acc += BigRational(static_cast<long>(a2[i] * b2[i]));
    return acc / 4;
}

/// All alcove weights of rank r in lexicographic order of coords2: dominant
/// (non-increasing, entries of one parity) with (lambda|theta_0) <= n.
inline std::vector<AlcoveWeight> enumerate_alcove(i64 r) {
    if (r < 1) throw OutOfRange("rank must be >= 1");
    const i64 two_n = 2 * (2 * r + 1);
    std::vector<AlcoveWeight> out;
    IntVec cur(static_cast<size_t>(r), 0);
    auto rec = [&](auto&& self, i64 pos) -> void {
        if (pos == r) {
            out.push_back({cur});
            return;
        }
        i64 hi = pos == 0 ? two_n : cur[static_cast<size_t>(pos - 1)];
        if (pos == 1) hi = std::min(hi, two_n - cur[0]);
        i64 lo = pos == 0 ? 0 : cur[0] % 2;  // entries share the parity of c0
        for (i64 c = lo; c <= hi; c += pos == 0 ? 1 : 2) {
            cur[static_cast<size_t>(pos)] = c;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// theta_lambda = zeta_{32r}^t, t = 4(lambda|lambda+2rho).
inline RootOfUnity twist(i64 r, const AlcoveWeight& w) {
    i64 t = 0;
    RootData d = RootData::build(r);
    for (size_t i = 0; i < w.coords2.size(); ++i) {
        i64 c = w.coords2[i];
        t += c * c + 2 * c * d.rho2[i];
    }
    return {32 * r, t};
}

namespace detail {

/// Quantum integer [m] = q^{m-1} + q^{m-3} + ... + q^{1-m} at q = zeta_{16r}.
inline CycloElem quantum_integer(i64 m, i64 r) {
    if (m == 0) return CycloElem(0);
    CycloElem q = zeta(16 * r);
    CycloElem acc(0);
    for (i64 t = 0; t < m; ++t) acc = acc + pow(q, mod_pos(m - 1 - 2 * t, 16 * r));
    return acc;
}

}  // namespace detail

/// d_lambda = prod over positive roots of [2(lambda+rho|a)]/[2(rho|a)].
inline CycloElem qdim(i64 r, const AlcoveWeight& w) {
    RootData d = RootData::build(r);
    CycloElem num(1), den(1);
    for (const IntVec& alpha : d.positive_roots) {
        i64 a = 0, b = 0;  // 2(lambda+rho|alpha) and 2(rho|alpha)
        for (size_t i = 0; i < alpha.size(); ++i) {
            a += (w.coords2[i] + d.rho2[i]) * alpha[i];
            b += d.rho2[i] * alpha[i];
        }
        // doubled coordinates: divide the accumulated products by 2
        num = num * detail::quantum_integer(a / 2, r);
        den = den * detail::quantum_integer(b / 2, r);
    }
    return num * invert(den);
}

/// m_r(j): multiplicity of the long-root sine factor sin(j*pi/4r) in D_r.
inline i64 m_count(i64 r, i64 j) {
    if (r < 1) throw OutOfRange("rank must be >= 1");
    if (r == 1) return 0;
    if (j < 1 || j > 2 * r - 2) throw OutOfRange("m_count needs 1 <= j <= 2r-2");
    return r - (j + 1) / 2;
}

/// Companion brute-force count of positive roots with (alpha|rho) = j.
inline i64 m_count_brute(i64 r, i64 j) {
    RootData d = RootData::build(r);
    i64 count = 0;
    for (const IntVec& alpha : d.positive_roots)
        if (inner_product(alpha, d.rho2) == BigRational(static_cast<long>(j))) ++count;
    return count;
}

/// Closed-form positive square root of the global dimension:
/// D_r = sqrt(r^r)/2^{r^2-r-1} / (prod_l sin((2l-1)pi/8r) prod_j sin(j pi/4r)^{m_r(j)}).
inline CycloElem sqrt_of_dim(i64 r) {
    if (r < 1) throw OutOfRange("rank must be >= 1");
    CycloElem x(1);
    if (r % 2 == 0) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r),
                      static_cast<unsigned long>(r / 2));
        x = CycloElem(BigRational(p));
    } else {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r),
                      static_cast<unsigned long>((r - 1) / 2));
        x = CycloElem(BigRational(p)) * sqrt_int(r);
    }
    // rational factor 2^{-(r^2-r-1)}; the exponent is -1 at r = 1
    i64 e = r * r - r - 1;
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    x = x * CycloElem(e >= 0 ? BigRational(1) / BigRational(p2) : BigRational(p2));
    CycloElem sines(1);
    for (i64 l = 1; l <= r; ++l) sines = sines * sin_cyclo(2 * l - 1, 8 * r);
    for (i64 j = 1; j <= 2 * r - 2; ++j)
        sines = sines * pow(sin_cyclo(j, 4 * r), m_count(r, j));
    return x * invert(sines);
}

struct SimpleData {
    AlcoveWeight weight;
    RootOfUnity twist;
    CycloElem qdim;
};

struct CategoryInvariants {
    i64 rank = 0;
    std::vector<SimpleData> simples;
    CycloElem dim;
    CycloElem sqrt_dim;
    i64 fs_exponent = 1;
    RootOfUnity xi1;
};

/// tau_n = sum over simples of d^2 * theta^n.
inline CycloElem gauss_sum(const CategoryInvariants& inv, i64 n) {
    CycloElem acc(0);
    for (const SimpleData& s : inv.simples)
        acc = acc + s.qdim * s.qdim * s.twist.pow(n).to_cyclo();
    return acc;
}

/// xi_n = tau_n/|tau_n| as an exact root of unity.
inline RootOfUnity central_charge(const CategoryInvariants& inv, i64 n) {
    if (gcd_ll(mod_pos(n, inv.fs_exponent), inv.fs_exponent) != 1)
        throw NotCoprime("central_charge needs gcd(n, fs_exponent) = 1");
    return central_charge(gauss_sum(inv, n));
}

inline RootOfUnity xi1_closed_form(i64 r) {
    return {32, (2 * r + 1) * (2 * r + 1)};
}

/// Assembles and verifies all invariants of C_r.
inline CategoryInvariants build_category(i64 r) {
    CategoryInvariants inv;
    inv.rank = r;
    inv.dim = CycloElem(0);
    i64 N = 1;
    for (const AlcoveWeight& w : enumerate_alcove(r)) {
        SimpleData s{w, twist(r, w), qdim(r, w)};
        if (s.qdim.is_zero()) throw ZeroElement();
        if (!is_real(s.qdim)) throw NotReal();
        N = lcm_ll(N, s.twist.order());
        inv.dim = inv.dim + s.qdim * s.qdim;
        inv.simples.push_back(std::move(s));
    }
    inv.fs_exponent = N;
    if (N % lcm_ll(32, 4 * r) != 0 || (32 * r) % N != 0)
        throw Error("Frobenius-Schur exponent out of bounds");
    inv.sqrt_dim = sqrt_of_dim(r);
    if (inv.sqrt_dim * inv.sqrt_dim != inv.dim)
        throw Error("closed-form sqrt(dim) does not square to dim");
    if (certified_sign(inv.sqrt_dim) != 1) throw Error("sqrt(dim) not positive");
    inv.xi1 = central_charge(inv, 1);
    if (inv.xi1 != xi1_closed_form(r)) throw Error("xi1 mismatch");
    return inv;
}

}  // namespace wittcharge
