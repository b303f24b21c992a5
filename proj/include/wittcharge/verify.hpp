// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained verification checks over the library's exact invariants:
// closed-form dimensions, central charges, Frobenius-Schur bounds, signature
// identities, kernel structure and randomized algebra laws. Each check
// returns a structured pass/fail result; the CLI and the acceptance runner
// share this code.

#pragma once

#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <vector>

#include "wittcharge/witt.hpp"

namespace wittcharge {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first failure, or a summary of what was covered

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
};

namespace detail {

inline const CategoryInvariants& cached_category(i64 r) {
    static std::map<i64, CategoryInvariants> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, build_category(r)).first;
    return it->second;
}

}  // namespace detail

/// Closed-form sqrt of the global dimension squares to the dimension sum for
/// ranks 1..4, and the sine-multiplicity formula matches brute-force root
/// counting for ranks up to 8.
inline CheckResult check_dimension_oracle() {
    CheckResult res{"dimension-oracle"};
    for (i64 r = 1; r <= 4; ++r) {
        const auto& inv = detail::cached_category(r);
        if (inv.sqrt_dim * inv.sqrt_dim != inv.dim)
            res.fail("sqrt_dim^2 != dim at r=" + std::to_string(r));
        if (certified_sign(inv.sqrt_dim) != 1)
            res.fail("sqrt_dim not positive at r=" + std::to_string(r));
    }
    for (i64 r = 2; r <= 8; ++r)
        for (i64 j = 1; j <= 2 * r - 2; ++j)
            if (m_count(r, j) != m_count_brute(r, j))
                res.fail("m_count mismatch at r=" + std::to_string(r) + ", j=" + std::to_string(j));
    if (res.pass) res.detail = "ranks 1..4 exact; multiplicities to rank 8";
    return res;
}

/// First central charge equals zeta_32^{(2r+1)^2} for ranks 1..4.
inline CheckResult check_xi1_closed_form() {
    CheckResult res{"xi1-closed-form"};
    for (i64 r = 1; r <= 4; ++r) {
        const auto& inv = detail::cached_category(r);
        RootOfUnity direct = central_charge(inv, 1);
        if (direct != xi1_closed_form(r))
            res.fail("xi1 mismatch at r=" + std::to_string(r) + ": " + direct.to_string());
    }
    if (res.pass) res.detail = "ranks 1..4 exact";
    return res;
}

/// Frobenius-Schur exponent bounds lcm(32,4r) | N_r | 32r for ranks 1..5,
/// with the two pinned twist orders (32 and 4r) exhibited.
inline CheckResult check_fs_bounds() {
    CheckResult res{"fs-exponent-bounds"};
    for (i64 r = 1; r <= 5; ++r) {
        i64 N = 1;
        for (const AlcoveWeight& w : enumerate_alcove(r)) N = lcm_ll(N, twist(r, w).order());
        if (N % lcm_ll(32, 4 * r) != 0 || (32 * r) % N != 0)
            res.fail("bounds fail at r=" + std::to_string(r) + ", N=" + std::to_string(N));
        AlcoveWeight omega_r{IntVec(static_cast<size_t>(r), 1)};
        if (twist(r, omega_r).order() != 32)
            res.fail("spin-weight twist order != 32 at r=" + std::to_string(r));
        if (r >= 3) {
            AlcoveWeight two_e1{IntVec(static_cast<size_t>(r), 0)};
            two_e1.coords2[0] = 4;
            if (twist(r, two_e1).order() != 4 * r)
                res.fail("2e1 twist order != 4r at r=" + std::to_string(r));
        }
    }
    if (res.pass) res.detail = "ranks 1..5";
    return res;
}

/// Central-charge formula: for ranks 1 and 2 and every unit n modulo N_r,
/// the directly computed xi_n equals ss'(sigma)*sigma(xi1)*gamma^n/sigma^2(gamma^n)
/// with gamma = xi1^11 and sigma = sigma_{n^{-1}}.
inline CheckResult check_charge_formula() {
    CheckResult res{"central-charge-formula"};
    for (i64 r : {i64{1}, i64{2}}) {
        const auto& inv = detail::cached_category(r);
        const i64 N = inv.fs_exponent;
        WittGenerator gen = WittGenerator::so_odd(r);
        RootOfUnity gamma = inv.xi1.pow(11);
        for (i64 n : units_mod(N)) {
            i64 k = mod_inverse(n, N);
            RootOfUnity direct = central_charge(inv, n);
            RootOfUnity formula = inv.xi1.pow(k) * gamma.pow(n) * gamma.pow(n * k * k).inverse();
            if (generator_signature(gen, k, N) < 0) formula = formula * minus_one();
            if (direct != formula)
                res.fail("mismatch at r=" + std::to_string(r) + ", n=" + std::to_string(n));
            if (direct != Xi_eval(WittWord{{{gen.label, 1}}}, GaloisElem(N, n)))
                res.fail("Xi_eval disagrees at r=" + std::to_string(r) + ", n=" + std::to_string(n));
        }
    }
    if (res.pass) res.detail = "ranks 1..2, all units";
    return res;
}

/// Galois action on square roots: sigma_k(sqrt r) = (k/r) sqrt r for odd
/// r <= 21 and all k = 1 mod 4 coprime to 4r, k < 4r. Exact equality.
inline CheckResult check_sqrt_galois() {
    CheckResult res{"sqrt-galois-action"};
    for (i64 r = 1; r <= 21; r += 2) {
        CycloElem root = sqrt_int(r);
        for (i64 k = 1; k < 4 * r; k += 4) {
            if (gcd_ll(k, 4 * r) != 1) continue;
            CycloElem image = galois_apply(GaloisElem(4 * r, k), embed(root, 4 * r));
            CycloElem expected = jacobi(k, r) == 1 ? root : neg(root);
            if (image != expected)
                res.fail("r=" + std::to_string(r) + ", k=" + std::to_string(k));
        }
    }
    if (res.pass) res.detail = "odd r <= 21, all k = 1 mod 4";
    return res;
}

/// Signature grid: ss_{C_a}(sigma_k) = (-1)^x for a = 2l+1+w(8l+2) and
/// k = 8xa+4l+1, over l in {1,2,4,6}, w in {1,2}, x in {0..3}. The exact
/// combinatorial path is asserted; for a <= 13 the certified-numeric path
/// must independently agree.
inline CheckResult check_signature_grid() {
    CheckResult res{"signature-grid"};
    for (i64 l : {i64{1}, i64{2}, i64{4}, i64{6}}) {
        for (i64 w = 1; w <= 2; ++w) {
            i64 a = 2 * l + 1 + w * (8 * l + 2);
            WittGenerator gen = WittGenerator::so_odd(a);
            for (i64 x = 0; x <= 3; ++x) {
                i64 k = 8 * x * a + 4 * l + 1;
                int want = x % 2 == 0 ? 1 : -1;
                int got = generator_signature(gen, k, 32 * a);
                if (got != want)
                    res.fail("exact path: a=" + std::to_string(a) + ", k=" + std::to_string(k));
                if (a <= 13) {
                    int numeric = signature_of(sqrt_of_dim(a), GaloisElem(32 * a, mod_pos(k, 32 * a)));
                    if (numeric != want)
                        res.fail("numeric path: a=" + std::to_string(a) + ", k=" + std::to_string(k));
                }
            }
        }
    }
    if (res.pass) res.detail = "full grid; numeric cross-check at a <= 13";
    return res;
}

/// The float-free sine sign rule agrees with the certified-numeric kernel on
/// the full grid m <= 24, 0 < j < m, k = 1 mod 4 coprime to 4m, k < 4m.
inline CheckResult check_sine_oracle() {
    CheckResult res{"sine-sign-oracle"};
    for (i64 m = 1; m <= 24; ++m) {
        for (i64 j = 1; j < m; ++j) {
            CycloElem s = sin_cyclo(j, m);
            for (i64 k = 1; k < 4 * m; k += 4) {
                if (gcd_ll(k, 4 * m) != 1) continue;
                int fast = sine_image_sign(j, m, k);
                int slow = signature_of(s, GaloisElem(4 * m, k));
                if (fast != slow)
                    res.fail("m=" + std::to_string(m) + ", j=" + std::to_string(j) +
                             ", k=" + std::to_string(k));
            }
        }
    }
    if (res.pass) res.detail = "full grid m <= 24";
    return res;
}

/// Depth-3 kernel structure: all 255 nontrivial candidate classes over the
/// ranks [5,23,41,59] are distinguished, certifying image Z/32 + (Z/2)^3.
inline CheckResult check_structure_depth3() {
    CheckResult res{"structure-depth-3"};
    StructureReport rep = verify_structure({5, 23, 41, 59}, 3);
    if (rep.classes != 255) res.fail("expected 255 classes, saw " + std::to_string(rep.classes));
    for (const std::string& f : rep.failures) res.fail("undistinguished class " + f);
    if (res.pass)
        res.detail = "255 of 256 classes nontrivial: " +
                     std::to_string(rep.distinguished_by_xi1) + " by xi1, " +
                     std::to_string(rep.distinguished_by_k) + " by witness";
    return res;
}

/// Pointed order-2 classes: xi1(A_p) = -1 with trivial signature for
/// p in {3,5,7}; products A_p A_{p'} pass the kernel test, single A_p fail.
inline CheckResult check_pointed_classes() {
    CheckResult res{"pointed-classes"};
    const std::vector<i64> primes{3, 5, 7};
    for (i64 p : primes) {
        PointedInvariants ap = a_p_representative(p);
        if (ap.xi1 != minus_one()) res.fail("xi1 != -1 at p=" + std::to_string(p));
        if (!ap.sqrt_dim.is_rational() || ap.sqrt_dim.rational_value() <= 0)
            res.fail("sqrt_dim not a positive rational at p=" + std::to_string(p));
        WittWord w{{{"Ap" + std::to_string(p), 1}}};
        if (kernel_test(w, KernelMode::exhaustive).in_kernel)
            res.fail("A_" + std::to_string(p) + " wrongly in kernel");
    }
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j) {
            WittWord w{{{"Ap" + std::to_string(primes[i]), 1},
                        {"Ap" + std::to_string(primes[j]), 1}}};
            if (!kernel_test(w, KernelMode::exhaustive).in_kernel)
                res.fail("A_" + std::to_string(primes[i]) + " A_" + std::to_string(primes[j]) +
                         " not in kernel");
        }
    if (res.pass) res.detail = "p in {3,5,7} and all pairs";
    return res;
}

/// The greedy coprime sequence at z = 0 reproduces its first eleven terms.
inline CheckResult check_sequence() {
    CheckResult res{"coprime-sequence"};
    const std::vector<i64> want{5, 23, 41, 59, 77, 113, 131, 149, 167, 221, 239};
    if (a_sequence(0, 11) != want) res.fail("sequence mismatch");
    if (a_sequence(0, 4, true) != std::vector<i64>{5, 23, 41, 59})
        res.fail("prime subsequence mismatch");
    if (res.pass) res.detail = "11 terms exact";
    return res;
}

/// The invariant shadow of the square relation [C_r]^2 = [I]^e over a range
/// of ranks.
inline CheckResult check_square_relation() {
    CheckResult res{"square-relation"};
    for (i64 r = 1; r <= 64; ++r)
        if (!verify_square_relation(r)) res.fail("fails at r=" + std::to_string(r));
    if (res.pass) res.detail = "ranks 1..64";
    return res;
}

/// 1000 randomized cases of the core algebra laws: ring identities, Galois
/// composition and multiplicativity, integer square roots, Gauss-sum modulus,
/// and multiplicativity of the signature and of Xi on words.
inline CheckResult check_randomized_properties(unsigned seed = 1283145u, int cases = 1000) {
    CheckResult res{"randomized-properties"};
    std::mt19937 rng(seed);
    const std::vector<i64> conductors{1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24};
    auto rand_int = [&](i64 lo, i64 hi) {
        return std::uniform_int_distribution<i64>(lo, hi)(rng);
    };
    auto rand_elem = [&](i64 n) {
        detail::QPoly p(static_cast<size_t>(n), BigRational(0));
        for (auto& c : p) {
            c = BigRational(static_cast<long>(rand_int(-4, 4)), static_cast<long>(rand_int(1, 3)));
            c.canonicalize();  // mpq_class(num, den) does not reduce the fraction
        }
        return CycloElem(n, std::move(p));
    };
    const std::vector<std::string> labels{"C1", "C2", "C5", "I", "Ap3", "Ap5"};
    auto rand_word = [&] {
        WittWord w;
        int parts = static_cast<int>(rand_int(0, 3));
        for (int i = 0; i < parts; ++i)
            w.multiply(labels[static_cast<size_t>(rand_int(0, static_cast<i64>(labels.size()) - 1))],
                       rand_int(-2, 2));
        return w;
    };
    for (int t = 0; t < cases && res.pass; ++t) {
        switch (t % 6) {
            case 0: {  // ring laws
                i64 n = conductors[static_cast<size_t>(rand_int(0, 11))];
                CycloElem x = rand_elem(n), y = rand_elem(n), z = rand_elem(n);
                if ((x + y) * z != x * z + y * z) res.fail("distributivity");
                if (x * y != y * x) res.fail("commutativity");
                if (!x.is_zero() && x * invert(x) != CycloElem(1)) res.fail("inverse");
                break;
            }
            case 1: {  // Galois composition and multiplicativity
                i64 n = conductors[static_cast<size_t>(rand_int(0, 11))];
                auto units = units_mod(n);
                i64 a = units[static_cast<size_t>(rand_int(0, static_cast<i64>(units.size()) - 1))];
                i64 b = units[static_cast<size_t>(rand_int(0, static_cast<i64>(units.size()) - 1))];
                if (n == 1) break;
                CycloElem x = rand_elem(n), y = rand_elem(n);
                GaloisElem sa(n, a), sb(n, b), sab(n, mod_pos(a * b, n));
                if (galois_apply(sa, galois_apply(sb, x)) != galois_apply(sab, x))
                    res.fail("Galois composition");
                if (galois_apply(sa, x * y) != galois_apply(sa, x) * galois_apply(sa, y))
                    res.fail("Galois multiplicativity");
                break;
            }
            case 2: {  // integer square roots
                i64 m = rand_int(1, 50) * (rand_int(0, 1) ? 1 : -1);
                CycloElem root = sqrt_int(m);
                if (root * root != CycloElem(BigRational(static_cast<long>(m))))
                    res.fail("sqrt_int square at m=" + std::to_string(m));
                break;
            }
            case 3: {  // Gauss-sum modulus law on nondegenerate cyclic forms
                const i64 ms[] = {3, 5, 7, 9, 11};
                i64 m = ms[rand_int(0, 4)];
                i64 a = rand_int(1, m - 1);
                if (gcd_ll(a, m) != 1) break;
                MetricGroup g = make_metric_group({m}, {RootOfUnity(m, a)}, {});
                if (!is_nondegenerate(g)) break;
                CycloElem tau = gauss_sum_n(g, 1);
                if (tau * conj(tau) != CycloElem(BigRational(static_cast<long>(m))))
                    res.fail("|tau|^2 != |H| at m=" + std::to_string(m));
                break;
            }
            case 4: {  // signature multiplicativity on words
                WittWord w1 = rand_word(), w2 = rand_word();
                WittWord prod = w1;
                for (const auto& [label, e] : w2.exponents) prod.multiply(label, e);
                i64 M = lcm_ll(word_modulus(prod), lcm_ll(word_modulus(w1), word_modulus(w2)));
                auto units = units_mod(M);
                i64 k = units[static_cast<size_t>(rand_int(0, static_cast<i64>(units.size()) - 1))];
                if (word_signature(prod, k, M) !=
                    word_signature(w1, k, M) * word_signature(w2, k, M))
                    res.fail("signature multiplicativity");
                break;
            }
            case 5: {  // Xi multiplicativity on words
                WittWord w1 = rand_word(), w2 = rand_word();
                WittWord prod = w1;
                for (const auto& [label, e] : w2.exponents) prod.multiply(label, e);
                i64 M = lcm_ll(word_modulus(prod), lcm_ll(word_modulus(w1), word_modulus(w2)));
                auto units = units_mod(M);
                i64 k = units[static_cast<size_t>(rand_int(0, static_cast<i64>(units.size()) - 1))];
                GaloisElem sigma(M, k);
                if (Xi_eval(prod, sigma) != Xi_eval(w1, sigma) * Xi_eval(w2, sigma))
                    res.fail("Xi multiplicativity");
                break;
            }
        }
    }
    if (res.pass) res.detail = std::to_string(cases) + " cases, fixed seed";
    return res;
}

/// Named verification suites exposed by the CLI.
inline std::vector<std::string> suite_names() {
    return {"lemma5.1", "prop5.2", "eq5.5", "thm4.1", "lemma6.2",
            "prop6.3",  "thm6.7",  "prop6.9", "eq6.1"};
}

inline std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "prop5.2") return {check_dimension_oracle()};
    if (name == "eq5.5") return {check_xi1_closed_form()};
    if (name == "lemma5.1") return {check_fs_bounds()};
    if (name == "thm4.1") return {check_charge_formula()};
    if (name == "lemma6.2") return {check_sqrt_galois()};
    if (name == "prop6.3") return {check_signature_grid()};
    if (name == "thm6.7") return {check_structure_depth3()};
    if (name == "prop6.9") return {check_pointed_classes()};
    if (name == "eq6.1") return {check_square_relation()};
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const std::string& s : suite_names())
            for (CheckResult& r : run_suite(s)) out.push_back(std::move(r));
        return out;
    }
    throw UnknownLabel(name);
}

}  // namespace wittcharge
