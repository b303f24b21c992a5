// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "wittcharge/signatures.hpp"

using namespace wittcharge;

namespace {

// Brute-force quadratic-residue oracle for the Legendre symbol.
int legendre_brute(i64 k, i64 p) {
    k = mod_pos(k, p);
    if (k == 0) return 0;
    for (i64 x = 1; x < p; ++x)
        if (mod_pos(x * x, p) == k) return 1;
    return -1;
}

}  // namespace

TEST_CASE("jacobi matches the residue oracle at odd primes") {
    for (i64 p : {3, 5, 7, 11, 13, 17, 19}) {
        for (i64 k = -5; k < 2 * p; ++k) CHECK(jacobi(k, p) == legendre_brute(k, p));
    }
    CHECK(jacobi(7, 1) == 1);
    CHECK(jacobi(2, 15) == jacobi(2, 3) * jacobi(2, 5));
    CHECK(jacobi(3, 9) == 0);
    CHECK_THROWS_AS(jacobi(3, 4), EvenModulus);
}

TEST_CASE("jacobi is multiplicative in both arguments") {
    const i64 odds[] = {3, 5, 9, 15, 21, 35};
    for (i64 n : odds)
        for (i64 m : odds)
            for (i64 k = 1; k <= 10; ++k)
                CHECK(jacobi(k, n * m) == jacobi(k, n) * jacobi(k, m));
    for (i64 n : odds)
        for (i64 a = 1; a <= 8; ++a)
            for (i64 b = 1; b <= 8; ++b)
                CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
}

TEST_CASE("signature of sqrt(5) realizes the Legendre character") {
    CycloElem root5 = sqrt_int(5);
    for (i64 k : {1, 2, 3, 4}) {
        CHECK(signature_of(root5, GaloisElem(5, k)) == legendre_brute(k, 5));
    }
    // positive rationals have trivial signature
    CHECK(signature_of(CycloElem(BigRational(7, 2)), GaloisElem(12, 5)) == 1);
    CHECK_THROWS_AS(signature_of(CycloElem(0), GaloisElem(5, 2)), ZeroElement);
    CHECK_THROWS_AS(signature_of(zeta(5), GaloisElem(5, 2)), NotReal);
}

TEST_CASE("signature is multiplicative") {
    CycloElem a = sqrt_int(5), b = sqrt_int(13), c = sin_cyclo(1, 5);
    GaloisElem s(4 * 5 * 13, 7);
    CHECK(signature_of(a * b, s) == signature_of(a, s) * signature_of(b, s));
    CHECK(signature_of(a * c, s) == signature_of(a, s) * signature_of(c, s));
}

TEST_CASE("sine image sign rule on a small grid vs the certified path") {
    for (i64 m = 2; m <= 12; ++m) {
        for (i64 j = 1; j < m; ++j) {
            for (i64 k = 1; k < 4 * m; k += 4) {
                if (gcd_ll(k, 4 * m) != 1) continue;
                int expected = signature_of(sin_cyclo(j, m), GaloisElem(4 * m, k));
                CHECK(sine_image_sign(j, m, k) == expected);
            }
        }
    }
    CHECK(sine_image_sign(1, 8, 1) == 1);
    CHECK(sine_image_sign(1, 8, 5) == 1);
    CHECK(sine_image_sign(3, 8, 5) == -1);  // sin(15 pi/8) < 0
    CHECK_THROWS_AS(sine_image_sign(1, 8, 3), BadResidue);
    CHECK_THROWS_AS(sine_image_sign(1, 15, 5), NotCoprime);
}

TEST_CASE("sqrt power sign") {
    for (i64 k : {1, 5, 9, 13, 17, 21, 29}) {
        if (gcd_ll(k, 4) == 1) CHECK(sqrt_power_sign(4, k) == 1);
    }
    CHECK(sqrt_power_sign(5, 9) == 1);
    CHECK(sqrt_power_sign(13, 109) == -1);
    CHECK_THROWS_AS(sqrt_power_sign(5, 3), BadResidue);
    CHECK_THROWS_AS(sqrt_power_sign(5, 25 * 4 + 5), NotCoprime);
}

TEST_CASE("signature tables") {
    SignatureSample t = signature_table(sqrt_int(5), 20);
    CHECK(t.modulus == 20);
    CHECK(t.values.size() == 8);
    int minus = 0;
    for (const auto& [k, v] : t.values) {
        CHECK((v == 1 || v == -1));
        if (v == -1) ++minus;
    }
    CHECK(minus == 4);  // the character is nontrivial, half the entries flip
    // well-definedness: recomputation at a larger modulus restricts correctly
    SignatureSample t2 = signature_table(sqrt_int(5), 40);
    for (const auto& [k, v] : t2.values) CHECK(v == t.values.at(mod_pos(k, 20)));
    // rational elements: identically +1
    for (const auto& [k, v] : signature_table(CycloElem(2), 8).values) CHECK(v == 1);
    CHECK_THROWS_AS(signature_table(sqrt_int(5), 7), NotADivisor);
}
