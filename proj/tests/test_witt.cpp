// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "wittcharge/verify.hpp"
#include "wittcharge/witt.hpp"

using namespace wittcharge;

TEST_CASE("generator factories") {
    WittGenerator c1 = WittGenerator::so_odd(1);
    CHECK(c1.xi1 == RootOfUnity(32, 9));
    CHECK(c1.fs_exponent == 32);
    WittGenerator c5 = WittGenerator::so_odd(5);
    CHECK(c5.fs_exponent == 160);
    CHECK(c5.fs_exact);
    WittGenerator ii = WittGenerator::ising();
    CHECK(ii.xi1 == RootOfUnity(16, 3));
    CHECK(ii.sqrt_dim() == CycloElem(2));
    WittGenerator a3 = WittGenerator::pointed_ap(3);
    CHECK(a3.xi1 == minus_one());
    CHECK_THROWS_AS(WittGenerator::from_label("B7"), UnknownLabel);
    CHECK_THROWS_AS(WittGenerator::from_label("Ap4"), NotOddPrime);
}

TEST_CASE("word parsing round trip") {
    WittWord w = parse_word("C5^3 * C23 * I^-2 * Ap3");
    CHECK(w.exponents.at("C5") == 3);
    CHECK(w.exponents.at("C23") == 1);
    CHECK(w.exponents.at("I") == -2);
    CHECK(w.exponents.at("Ap3") == 1);
    CHECK(parse_word("1").empty());
    CHECK(parse_word("  ").empty());
    CHECK(parse_word("I^2 * I^-2").empty());
    CHECK_THROWS_AS(parse_word("C5 +"), ParseError);
    CHECK_THROWS_AS(parse_word("Q9"), UnknownLabel);
}

TEST_CASE("xi1 of words") {
    WittWord i16;
    i16.multiply("I", 16);
    CHECK(xi1_of(i16).is_one());
    WittWord w;
    w.multiply("C1", 2);
    w.multiply("I", -3);
    CHECK(xi1_of(w).is_one());
    CHECK(xi1_of(WittWord{}).is_one());
}

TEST_CASE("square relation shadow") {
    for (i64 r = 1; r <= 32; ++r) CHECK(verify_square_relation(r));
}

TEST_CASE("greedy coprime sequences") {
    std::vector<i64> want{5, 23, 41, 59, 77, 113, 131, 149, 167, 221, 239};
    CHECK(a_sequence(0, 11) == want);
    CHECK(a_sequence(0, 4, true) == std::vector<i64>{5, 23, 41, 59});
    // pairwise coprimality by construction
    auto terms = a_sequence(1, 8);
    for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j) CHECK(gcd_ll(terms[i], terms[j]) == 1);
    // residue condition: every term = 2l+1 mod 8l+2 with l = 4z+2
    for (i64 t : a_sequence(1, 6)) CHECK(mod_pos(t, 50) == 13);
}

TEST_CASE("signatures of words") {
    WittWord c13;
    c13.multiply("C13", 1);
    i64 M = word_modulus(c13);
    CHECK(word_signature(c13, 109, M) == -1);
    CHECK(word_signature(c13, 5, M) == 1);
    // squares are trivial
    WittWord sq;
    sq.multiply("C13", 2);
    CHECK(word_signature(sq, 109, M) == 1);
    // pointed components are trivial
    WittWord ap;
    ap.multiply("Ap3", 1);
    CHECK(word_signature(ap, 5, word_modulus(ap)) == 1);
    // exact path and certified-numeric path agree off the k = 1 mod 4 stratum
    WittWord c5;
    c5.multiply("C5", 1);
    i64 M5 = word_modulus(c5);
    for (i64 k : {3, 7, 11, 19}) {
        if (gcd_ll(k, M5) != 1) continue;
        int numeric = word_signature(c5, k, M5);
        CHECK((numeric == 1 || numeric == -1));
    }
}

TEST_CASE("distinguishing Galois exponents") {
    WittWord c5;
    c5.multiply("C5", 1);
    i64 k = distinguishing_k(c5, "C5", 0);
    CHECK(mod_pos(k, 32) == 1);
    CHECK(mod_pos(k, 4) == 1);
    CHECK(word_signature(c5, k, lcm_ll(32, 32 * 5)) == -1);

    WittWord w;
    w.multiply("C5", 1);
    w.multiply("C23", 3);
    i64 k2 = distinguishing_k(w, "C5", 0);
    i64 N = lcm_ll(32, WittGenerator::so_odd(23).fs_exponent);
    CHECK(mod_pos(k2, N) == 1);
    CHECK_THROWS_AS(distinguishing_k(w, "C23", 1), BadResidue);  // 23 is in a_0, not a_1
    WittWord even;
    even.multiply("C5", 2);
    CHECK_THROWS_AS(distinguishing_k(even, "C5", 0), NoOddExponent);
}

TEST_CASE("kernel tests") {
    WittWord empty;
    CHECK(kernel_test(empty, KernelMode::exhaustive).in_kernel);
    WittWord c5;
    c5.multiply("C5", 1);
    CHECK_FALSE(kernel_test(c5, KernelMode::exhaustive).in_kernel);
    CHECK_FALSE(kernel_test(c5, KernelMode::certify).in_kernel);
    WittWord pair;
    pair.multiply("Ap3", 1);
    pair.multiply("Ap5", 1);
    CHECK(kernel_test(pair, KernelMode::exhaustive).in_kernel);
    CHECK(kernel_test(pair, KernelMode::certify).in_kernel);
    WittWord i8;
    i8.multiply("I", 8);
    CHECK_FALSE(kernel_test(i8, KernelMode::exhaustive).in_kernel);  // xi1 = -1
}

TEST_CASE("Xi evaluation") {
    WittWord c1;
    c1.multiply("C1", 1);
    GaloisElem id(32, 1);
    CHECK(Xi_eval(c1, id) == RootOfUnity(32, 9));
    // against the enumerated category for all units
    CategoryInvariants inv = build_category(1);
    for (i64 n : units_mod(32)) CHECK(Xi_eval(c1, GaloisElem(32, n)) == central_charge(inv, n));
    // pointed pairs are Xi-trivial
    WittWord pair;
    pair.multiply("Ap3", 1);
    pair.multiply("Ap5", 1);
    i64 M = word_modulus(pair);
    for (i64 n : units_mod(M)) CHECK(Xi_eval(pair, GaloisElem(M, n)).is_one());
    CHECK_THROWS_AS(Xi_eval(c1, GaloisElem(8, 3)), IncompatibleModulus);
}

TEST_CASE("structure verification at small depth") {
    StructureReport rep = verify_structure({5}, 0);
    CHECK(rep.classes == 31);
    CHECK(rep.ok());
    StructureReport rep1 = verify_structure({5, 23}, 1);
    CHECK(rep1.classes == 63);
    CHECK(rep1.ok());
    CHECK_THROWS_AS(verify_structure({7}, 0), BadResidue);
    CHECK_THROWS_AS(verify_structure({5}, 3), OutOfRange);
}

TEST_CASE("named verification suites resolve") {
    CHECK(run_suite("eq6.1").at(0).pass);
    CHECK(run_suite("prop6.9").at(0).pass);
    CHECK_THROWS_AS(run_suite("nope"), UnknownLabel);
}
