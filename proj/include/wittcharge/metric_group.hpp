// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Metric groups (H, q): a finite abelian group H = Z/m_1 + ... + Z/m_s with a
// quadratic form q into roots of unity, tabulated exhaustively from generator
// data. Provides non-degeneracy and anisotropy tests, Gauss sums, central
// charges and the rank-2 anisotropic representatives A_p.

#pragma once

#include <map>
#include <vector>

#include "wittcharge/algebraic.hpp"
#include "wittcharge/cyclotomic.hpp"

namespace wittcharge {

inline constexpr i64 kMetricGroupCap = 10000;  // max tabulated |H|

struct MetricGroup {
    std::vector<i64> orders;                   // H = direct sum of Z/m_i
    std::map<std::vector<i64>, RootOfUnity> qvals;

    i64 size() const {
        i64 s = 1;
        for (i64 m : orders) s *= m;
        return s;
    }

    std::vector<i64> reduce(std::vector<i64> x) const {
        for (size_t i = 0; i < orders.size(); ++i) x[i] = mod_pos(x[i], orders[i]);
        return x;
    }

    const RootOfUnity& q(const std::vector<i64>& x) const {
        return qvals.at(reduce(x));
    }

    std::vector<i64> add(std::vector<i64> x, const std::vector<i64>& y) const {
        for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return reduce(std::move(x));
    }

    std::vector<i64> negate(std::vector<i64> x) const {
        for (i64& c : x) c = -c;
        return reduce(std::move(x));
    }

    /// Associated bilinear pairing b(x,y) = q(x+y) q(x)^{-1} q(y)^{-1}.
    RootOfUnity b(const std::vector<i64>& x, const std::vector<i64>& y) const {
        return q(add(x, y)) * q(x).inverse() * q(y).inverse();
    }

    /// All group elements, lexicographic.
    std::vector<std::vector<i64>> elements() const {
        std::vector<std::vector<i64>> out;
        std::vector<i64> cur(orders.size(), 0);
        while (true) {
            out.push_back(cur);
            size_t i = orders.size();
            while (i > 0) {
                --i;
                if (++cur[i] < orders[i]) break;
                cur[i] = 0;
                if (i == 0) return out;
            }
            if (orders.empty()) return out;
        }
    }
};

/// Builds (H, q) from q on generators and the pairings b(g_i, g_j), i < j, via
/// q(sum c_i g_i) = prod q(g_i)^{c_i^2} * prod_{i<j} b_ij^{c_i c_j}.
/// Well-definedness modulo the orders is checked up front, then q(0) = 1,
/// q(-x) = q(x) and bi-additivity of b are verified exhaustively.
inline MetricGroup make_metric_group(const std::vector<i64>& orders,
                                     const std::vector<RootOfUnity>& qgen,
                                     const std::map<std::pair<size_t, size_t>, RootOfUnity>& bgen) {
    const size_t s = orders.size();
    if (qgen.size() != s) throw RankMismatch();
    for (i64 m : orders)
        if (m < 1) throw OutOfRange("group orders must be positive");
    MetricGroup g;
    g.orders = orders;
    if (g.size() > kMetricGroupCap) throw OutOfRange("metric group too large to tabulate");

    auto pairing = [&](size_t i, size_t j) -> RootOfUnity {
        auto it = bgen.find({std::min(i, j), std::max(i, j)});
        return it == bgen.end() ? RootOfUnity() : it->second;
    };
    // shifting c_i by m_i must not change the expansion
    for (size_t i = 0; i < s; ++i) {
        i64 m = orders[i];
        bool ok = m % 2 == 1 ? qgen[i].pow(m).is_one() : qgen[i].pow(2 * m).is_one();
        if (!ok) throw InconsistentForm("q(g) order incompatible with ord(g)");
        for (size_t j = 0; j < s; ++j)
            if (j != i && !pairing(i, j).pow(m).is_one())
                throw InconsistentForm("b(g_i,g_j) order incompatible");
    }

    for (const auto& x : g.elements()) {
        RootOfUnity v;
        for (size_t i = 0; i < s; ++i) {
            v = v * qgen[i].pow(x[i] * x[i]);
            for (size_t j = i + 1; j < s; ++j) v = v * pairing(i, j).pow(x[i] * x[j]);
        }
        g.qvals[x] = v;
    }

    const auto elems = g.elements();
    if (!g.q(std::vector<i64>(s, 0)).is_one()) throw InconsistentForm("q(0) != 1");
    for (const auto& x : elems)
        if (g.q(x) != g.q(g.negate(x))) throw InconsistentForm("q(-x) != q(x)");
    // b(x+g_i, z) = b(x,z) b(g_i,z) over all x, z and generators g_i implies
    // full bi-additivity by induction (and symmetry of b).
    for (size_t i = 0; i < s; ++i) {
        std::vector<i64> gen(s, 0);
        gen[i] = 1;
        for (const auto& x : elems)
            for (const auto& z : elems)
                if (g.b(g.add(x, gen), z) != g.b(x, z) * g.b(gen, z))
                    throw InconsistentForm("b not bi-additive");
    }
    return g;
}

/// True iff x -> b(x, .) is injective.
inline bool is_nondegenerate(const MetricGroup& g) {
    const auto elems = g.elements();
    for (const auto& x : elems) {
        bool zero = true;
        for (i64 c : x) zero = zero && c == 0;
        if (zero) continue;
        bool pairs = false;
        for (const auto& y : elems)
            if (!g.b(x, y).is_one()) {
                pairs = true;
                break;
            }
        if (!pairs) return false;
    }
    return true;
}

/// True iff q(x) != 1 for every x != 0; requires non-degeneracy.
inline bool is_anisotropic(const MetricGroup& g) {
    if (!is_nondegenerate(g)) throw DegenerateForm();
    for (const auto& x : g.elements()) {
        bool zero = true;
        for (i64 c : x) zero = zero && c == 0;
        if (!zero && g.q(x).is_one()) return false;
    }
    return true;
}

/// tau_n = sum over H of q(x)^n.
inline CycloElem gauss_sum_n(const MetricGroup& g, i64 n) {
    CycloElem acc(0);
    for (const auto& x : g.elements()) acc = acc + g.q(x).pow(n).to_cyclo();
    return acc;
}

/// xi_n = tau_n/|tau_n|; throws ZeroGaussSum when tau_n vanishes.
inline RootOfUnity central_charge_n(const MetricGroup& g, i64 n) {
    return central_charge(gauss_sum_n(g, n));
}

/// Direct sum of metric groups (concatenated coordinates).
inline MetricGroup direct_sum(const MetricGroup& g, const MetricGroup& h) {
    MetricGroup s;
    s.orders = g.orders;
    s.orders.insert(s.orders.end(), h.orders.begin(), h.orders.end());
    for (const auto& [x, qx] : g.qvals)
        for (const auto& [y, qy] : h.qvals) {
            std::vector<i64> xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            s.qvals[xy] = qx * qy;
        }
    return s;
}

struct PointedInvariants {
    MetricGroup group;
    i64 dim = 1;
    CycloElem sqrt_dim;
    RootOfUnity xi1;
};

/// The trivial-signature order-2 pointed class at an odd prime p, realized on
/// Z/p + Z/p by q(x,y) = zeta_p^{x^2+y^2} for p = 3 mod 4 and
/// q(x,y) = zeta_p^{x^2-u y^2} (u the least non-residue) for p = 1 mod 4.
/// The defining properties (anisotropic, non-degenerate, xi1 = -1, rational
/// sqrt of |H|) are verified before returning.
inline PointedInvariants a_p_representative(i64 p) {
    if (p == 2 || !is_prime(p)) throw NotOddPrime(std::to_string(p));
    i64 e2 = p % 4 == 3 ? 1 : -least_nonresidue(p);
    MetricGroup g = make_metric_group({p, p}, {RootOfUnity(p, 1), RootOfUnity(p, e2)}, {});
    PointedInvariants out;
    out.group = g;
    out.dim = p * p;
    out.sqrt_dim = CycloElem(BigRational(static_cast<long>(p)));
    out.xi1 = central_charge_n(g, 1);
    if (!is_anisotropic(g)) throw InconsistentForm("A_p form not anisotropic");
    if (out.xi1 != minus_one()) throw InconsistentForm("A_p has xi1 != -1");
    return out;
}

}  // namespace wittcharge
