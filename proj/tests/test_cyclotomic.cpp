// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "wittcharge/cyclotomic.hpp"

using namespace wittcharge;

TEST_CASE("cyclotomic polynomials at small orders") {
    // Phi_1 = x-1, Phi_4 = x^2+1, Phi_6 = x^2-x+1, Phi_12 = x^4-x^2+1
    CHECK(cyclotomic_polynomial(1) == detail::ZPoly{-1, 1});
    CHECK(cyclotomic_polynomial(4) == detail::ZPoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == detail::ZPoly{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == detail::ZPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(7).size() == 7);  // degree 6, all ones
}

TEST_CASE("zeta powers satisfy the defining relation") {
    for (i64 n : {2, 3, 4, 5, 6, 8, 9, 12, 15}) {
        CHECK(pow(zeta(n), n) == CycloElem(1));
        if (n % 2 == 0) CHECK(pow(zeta(n), n / 2) == CycloElem(-1));
    }
    // zeta_2 = -1, zeta_1 = 1
    CHECK(zeta(2) == CycloElem(-1));
    CHECK(zeta(1) == CycloElem(1));
}

TEST_CASE("embedding is a ring map and equality sees through conductors") {
    CycloElem z3 = zeta(3);
    CycloElem in12 = embed(z3, 12);
    CHECK(in12.conductor() == 12);
    CHECK(in12 == z3);
    CHECK(in12 * in12 * in12 == CycloElem(1));
    CHECK_THROWS_AS(embed(z3, 10), NotADivisor);
    // 1 + zeta_3 + zeta_3^2 = 0
    CHECK((CycloElem(1) + z3 + z3 * z3).is_zero());
}

TEST_CASE("rational detection") {
    CycloElem x = zeta(5) + pow(zeta(5), 2) + pow(zeta(5), 3) + pow(zeta(5), 4);
    REQUIRE(x.is_rational());
    CHECK(x.rational_value() == -1);
    CHECK_FALSE(zeta(5).is_rational());
}

TEST_CASE("inversion against the minimal polynomial") {
    // (1 + zeta_4)^{-1} = (1 - zeta_4)/2
    CycloElem x = CycloElem(1) + zeta(4);
    CHECK(invert(x) == (CycloElem(1) - zeta(4)) * CycloElem(BigRational(1, 2)));
    CHECK_THROWS_AS(invert(CycloElem(0)), DivisionByZero);
    for (i64 n : {3, 5, 8, 12}) {
        CycloElem y = zeta(n) + CycloElem(2);
        CHECK(y * invert(y) == CycloElem(1));
    }
}

TEST_CASE("Galois action is a field automorphism") {
    CycloElem x = zeta(7) + CycloElem(3) * pow(zeta(7), 2);
    CycloElem y = pow(zeta(7), 4) - CycloElem(1);
    GaloisElem s(7, 3);
    CHECK(galois_apply(s, x * y) == galois_apply(s, x) * galois_apply(s, y));
    CHECK(galois_apply(s, x + y) == galois_apply(s, x) + galois_apply(s, y));
    // sigma_2 fixes rationals
    CHECK(galois_apply(GaloisElem(5, 2), CycloElem(BigRational(7, 3))) ==
          CycloElem(BigRational(7, 3)));
    // composition
    CHECK(galois_apply(GaloisElem(7, 2), galois_apply(GaloisElem(7, 3), x)) ==
          galois_apply(GaloisElem(7, 6), x));
}

TEST_CASE("conjugation and reality") {
    CHECK(conj(zeta(5)) == pow(zeta(5), 4));
    CHECK(is_real(zeta(5) + pow(zeta(5), 4)));
    CHECK_FALSE(is_real(zeta(5)));
    CHECK(is_real(CycloElem(BigRational(-3, 7))));
}

TEST_CASE("conductor reduction finds minimal fields") {
    CycloElem x = embed(zeta(3), 12);
    CHECK(minimize_conductor(x).conductor() == 3);
    auto r = reduce_to_conductor(x, 3);
    REQUIRE(r.has_value());
    CHECK(*r == zeta(3));
    CHECK_FALSE(reduce_to_conductor(zeta(12), 3).has_value());
    // zeta_6 = 1 + zeta_3 lives in the conductor-3 field
    CHECK(minimize_conductor(embed(zeta(6), 12)).conductor() == 3);
    CHECK(minimize_conductor(embed(zeta(6), 12)) == CycloElem(1) + zeta(3));
    CHECK(minimize_conductor(CycloElem(1) + zeta(8) - zeta(8)).conductor() == 1);
}

TEST_CASE("galois element inverse and composition") {
    GaloisElem s(16, 3);
    GaloisElem si = s.inverse();
    CHECK(mod_pos(s.k * si.k, 16) == 1);
    CHECK_THROWS_AS(GaloisElem(8, 2), NotCoprime);
}
