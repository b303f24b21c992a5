// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "wittcharge/metric_group.hpp"
#include "wittcharge/signatures.hpp"

using namespace wittcharge;

namespace {

MetricGroup cyclic(i64 m, i64 a) { return make_metric_group({m}, {RootOfUnity(m, a)}, {}); }

MetricGroup hyperbolic22() {
    std::map<std::pair<size_t, size_t>, RootOfUnity> b;
    b[{0, 1}] = minus_one();
    return make_metric_group({2, 2}, {RootOfUnity(), RootOfUnity()}, b);
}

}  // namespace

TEST_CASE("tabulation and basic laws") {
    MetricGroup g = cyclic(3, 1);
    CHECK(g.size() == 3);
    CHECK(g.q({0}).is_one());
    CHECK(g.q({1}) == RootOfUnity(3, 1));
    CHECK(g.q({2}) == RootOfUnity(3, 4));  // q(2) = q(-1) = q(1)
    CHECK(g.q({2}) == g.q({1}));
    // the semion: order-4 value on an order-2 group
    MetricGroup sem = make_metric_group({2}, {RootOfUnity(4, 1)}, {});
    CHECK(sem.q({1}) == RootOfUnity(4, 1));
    // degenerate data rejected: order-8 value on Z/2
    CHECK_THROWS_AS(make_metric_group({2}, {RootOfUnity(8, 1)}, {}), InconsistentForm);
    CHECK_THROWS_AS(make_metric_group({3}, {RootOfUnity(9, 1)}, {}), InconsistentForm);
}

TEST_CASE("nondegeneracy and anisotropy") {
    CHECK(is_nondegenerate(cyclic(3, 1)));
    CHECK(is_anisotropic(cyclic(3, 1)));
    CHECK(is_anisotropic(cyclic(5, 1)));
    MetricGroup trivial = make_metric_group({3}, {RootOfUnity()}, {});
    CHECK_FALSE(is_nondegenerate(trivial));
    CHECK_THROWS_AS(is_anisotropic(trivial), DegenerateForm);
    MetricGroup hyp = hyperbolic22();
    CHECK(is_nondegenerate(hyp));
    CHECK_FALSE(is_anisotropic(hyp));  // q(1,0) = 1
}

TEST_CASE("gauss sums against exact square roots") {
    CHECK(gauss_sum_n(cyclic(3, 1), 1) == sqrt_int(-3));
    CHECK(gauss_sum_n(cyclic(5, 1), 1) == sqrt_int(5));
    CHECK(gauss_sum_n(cyclic(7, 1), 0) == CycloElem(7));
    // modulus law |tau|^2 = |H| for nondegenerate forms
    for (i64 m : {3, 5, 7, 11}) {
        CycloElem tau = gauss_sum_n(cyclic(m, 1), 1);
        CHECK(tau * conj(tau) == CycloElem(BigRational(static_cast<long>(m))));
    }
    // multiplicativity under direct sum
    MetricGroup ds = direct_sum(cyclic(3, 1), cyclic(5, 2));
    CHECK(gauss_sum_n(ds, 1) == gauss_sum_n(cyclic(3, 1), 1) * gauss_sum_n(cyclic(5, 2), 1));
}

TEST_CASE("central charges of pointed forms") {
    CHECK(central_charge_n(cyclic(3, 1), 1) == RootOfUnity(4, 1));  // tau = i sqrt 3
    CHECK(central_charge_n(hyperbolic22(), 1).is_one());            // tau = 2
    // Milgram: xi1 is always an 8th root of unity for nondegenerate forms
    for (i64 m : {3, 5, 7, 9, 11}) {
        for (i64 a = 1; a < m; ++a) {
            if (gcd_ll(a, m) != 1) continue;
            RootOfUnity xi = central_charge_n(cyclic(m, a), 1);
            CHECK(8 % xi.order() == 0);
        }
    }
    MetricGroup a3 = make_metric_group({3, 3}, {RootOfUnity(3, 1), RootOfUnity(3, 1)}, {});
    CHECK(central_charge_n(a3, 1) == minus_one());  // tau = (i sqrt 3)^2 = -3
}

TEST_CASE("the A_p representatives") {
    for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        PointedInvariants ap = a_p_representative(p);
        CHECK(ap.dim == p * p);
        CHECK(ap.xi1 == minus_one());
        CHECK(is_anisotropic(ap.group));
        CHECK(ap.sqrt_dim == CycloElem(BigRational(static_cast<long>(p))));
        // trivial signature: rational positive square root
        SignatureSample t = signature_table(ap.sqrt_dim, 8);
        for (const auto& [k, v] : t.values) CHECK(v == 1);
    }
    // A_5 uses the non-residue twist x^2 - 2y^2
    PointedInvariants a5 = a_p_representative(5);
    CHECK(a5.group.q({0, 1}) == RootOfUnity(5, -2));
    CHECK_THROWS_AS(a_p_representative(2), NotOddPrime);
    CHECK_THROWS_AS(a_p_representative(9), NotOddPrime);
}
