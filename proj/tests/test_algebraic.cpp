// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "wittcharge/algebraic.hpp"
#include "wittcharge/interval.hpp"

using namespace wittcharge;

TEST_CASE("root of unity normal form and group laws") {
    CHECK(RootOfUnity(6, 2) == RootOfUnity(3, 1));
    CHECK(RootOfUnity(6, 0).is_one());
    CHECK(RootOfUnity(5, 2) * RootOfUnity(5, 3) == RootOfUnity());
    CHECK(RootOfUnity(8, 3).pow(2) == RootOfUnity(4, 3));
    CHECK(RootOfUnity(8, 3).pow(-1) == RootOfUnity(8, 5));
    CHECK(RootOfUnity(8, 3).inverse() * RootOfUnity(8, 3) == RootOfUnity());
    CHECK(minus_one().pow(2).is_one());
    CHECK(RootOfUnity(12, 5).galois(7) == RootOfUnity(12, 35));
    CHECK(RootOfUnity(7, 3).to_cyclo() == pow(zeta(7), 3));
    CHECK(RootOfUnity(2, 1).to_string() == "-1");
}

TEST_CASE("exact sines of rational angles") {
    CHECK(sin_cyclo(1, 6) == CycloElem(BigRational(1, 2)));
    CHECK(sin_cyclo(1, 2) == CycloElem(1));
    CHECK(sin_cyclo(1, 4) * sin_cyclo(1, 4) == CycloElem(BigRational(1, 2)));
    // sin(-x) = -sin(x), sin(pi - x) = sin(x)
    CHECK(sin_cyclo(-1, 5) == neg(sin_cyclo(1, 5)));
    CHECK(sin_cyclo(4, 5) == sin_cyclo(1, 5));
    CHECK(sin_cyclo(0, 7).is_zero());
}

TEST_CASE("interval evaluation encloses known values") {
    // sqrt(2) enclosure vs integer-square oracle: lo^2 < 2 < hi^2
    CycloElem s2 = zeta(8) + pow(zeta(8), 7);
    auto iv = eval_interval(s2, 64);
    CHECK(iv.im.contains_zero());
    double mid = iv.re.midpoint_double();
    CHECK(mid * mid > 1.999999);
    CHECK(mid * mid < 2.000001);
    CHECK(iv.re.definite_sign() == 1);
    // zeta_3 has real part -1/2
    auto iv3 = eval_interval(zeta(3), 64);
    CHECK(iv3.re.midpoint_double() == Catch::Approx(-0.5).epsilon(1e-12));
    CHECK_THROWS_AS(eval_interval(s2, 4), OutOfRange);
}

TEST_CASE("certified signs") {
    CHECK(certified_sign(CycloElem(0)) == 0);
    CHECK(certified_sign(CycloElem(BigRational(-3, 2))) == -1);
    CHECK(certified_sign(zeta(8) + pow(zeta(8), 7)) == 1);
    CHECK(certified_sign(neg(sin_cyclo(1, 12))) == -1);
    // tiny but nonzero: sqrt(2) - 1.41421356 stays certified
    CycloElem tiny = zeta(8) + pow(zeta(8), 7) - CycloElem(BigRational(35355339, 25000000));
    CHECK(certified_sign(tiny) == 1);
    CHECK_THROWS_AS(certified_sign(zeta(3)), NotReal);
}

TEST_CASE("root-of-unity recognition") {
    CHECK(as_root_of_unity(pow(zeta(12), 5)) == RootOfUnity(12, 5));
    CHECK(as_root_of_unity(neg(zeta(8))) == RootOfUnity(16, 10));  // -zeta_8 = zeta_16^10
    CHECK(as_root_of_unity(CycloElem(1)).is_one());
    CHECK(as_root_of_unity(CycloElem(-1)) == minus_one());
    CHECK_THROWS_AS(as_root_of_unity(CycloElem(2)), NotARootOfUnity);
    CHECK_THROWS_AS(as_root_of_unity(CycloElem(0)), ZeroElement);
}

TEST_CASE("quadratic Gauss sums square to the signed prime") {
    for (i64 p : {3, 5, 7, 11, 13}) {
        CycloElem g = quadratic_gauss_sum(p);
        i64 target = p % 4 == 1 ? p : -p;
        CHECK(g * g == CycloElem(BigRational(static_cast<long>(target))));
    }
}

TEST_CASE("integer square roots, both signs") {
    for (i64 m = -50; m <= 50; ++m) {
        if (m == 0) continue;
        CycloElem x = sqrt_int(m);
        CHECK(x * x == CycloElem(BigRational(static_cast<long>(m))));
        if (m > 0) {
            CHECK(certified_sign(x) == 1);
        } else {
            // x/i must be positive
            CHECK(certified_sign(x * pow(zeta(4), 3)) == 1);
        }
    }
    CHECK(sqrt_int(4) == CycloElem(2));
    CHECK(sqrt_int(-1) == zeta(4));
    CHECK_THROWS_AS(sqrt_int(0), ZeroElement);
}

TEST_CASE("central charge extraction on known Gauss sums") {
    // sqrt(5) has charge 1; i*sqrt(3) has charge i; -3 has charge -1
    CHECK(central_charge(sqrt_int(5)).is_one());
    CHECK(central_charge(sqrt_int(-3)) == RootOfUnity(4, 1));
    CHECK(central_charge(CycloElem(-3)) == minus_one());
    CHECK(central_charge(pow(zeta(8), 3) * CycloElem(7)) == RootOfUnity(8, 3));
    CHECK_THROWS_AS(central_charge(CycloElem(0)), ZeroGaussSum);
}
