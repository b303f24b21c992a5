// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Formal word calculus over the Witt generators C_r (so(2r+1) level 2r+1),
// the Ising category I = su(2)_2 and the pointed classes A_p: evaluation of
// the first central charge and of the central-charge homomorphism Xi, kernel
// testing, distinguishing Galois elements, the greedy coprime sequences a_z,
// and desk-scale verification of the Z/32 + (Z/2)^n structure.

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittcharge/metric_group.hpp"
#include "wittcharge/signatures.hpp"
#include "wittcharge/so_odd.hpp"

namespace wittcharge {

inline constexpr i64 kPhiCap = 1 << 20;  // exhaustive kernel-test bound on phi(M)

struct WittGenerator {
    enum class Kind { so_odd, pointed, ising };

    std::string label;
    Kind kind = Kind::ising;
    i64 param = 0;        // rank r for so_odd, prime p for pointed
    RootOfUnity xi1;
    i64 fs_exponent = 1;  // xi/signature data factor through (Z/fs)^x
    bool fs_exact = true; // false when only the 32r upper bound is recorded

    /// Exact square root of the categorical dimension (real, positive).
    CycloElem sqrt_dim() const {
        switch (kind) {
            case Kind::so_odd: return sqrt_of_dim(param);
            case Kind::pointed: return CycloElem(BigRational(static_cast<long>(param)));
            case Kind::ising: return CycloElem(2);
        }
        throw Error("unreachable");
    }

    static WittGenerator so_odd(i64 r) {
        if (r < 1) throw OutOfRange("rank must be >= 1");
        WittGenerator g;
        g.label = "C" + std::to_string(r);
        g.kind = Kind::so_odd;
        g.param = r;
        g.xi1 = xi1_closed_form(r);
        if (r % 2 == 1) {
            g.fs_exponent = 32 * r;  // lcm(32,4r) = 32r forces N_r
        } else if (r <= 8) {
            i64 N = 1;
            for (const AlcoveWeight& w : enumerate_alcove(r))
                N = lcm_ll(N, twist(r, w).order());
            g.fs_exponent = N;
        } else {
            g.fs_exponent = 32 * r;  // upper bound only
            g.fs_exact = false;
        }
        return g;
    }

    static WittGenerator ising() {
        WittGenerator g;
        g.label = "I";
        g.kind = Kind::ising;
        g.xi1 = RootOfUnity(16, 3);
        g.fs_exponent = 16;
        return g;
    }

    static WittGenerator pointed_ap(i64 p) {
        a_p_representative(p);  // validates p and the defining properties
        WittGenerator g;
        g.label = "Ap" + std::to_string(p);
        g.kind = Kind::pointed;
        g.param = p;
        g.xi1 = minus_one();
        g.fs_exponent = 2 * p;
        return g;
    }

    static WittGenerator from_label(const std::string& label) {
        auto num = [&](size_t off) -> i64 {
            if (off >= label.size()) throw UnknownLabel(label);
            for (size_t i = off; i < label.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(label[i])))
                    throw UnknownLabel(label);
            return std::stoll(label.substr(off));
        };
        if (label == "I") return ising();
        if (label.rfind("Ap", 0) == 0) return pointed_ap(num(2));
        if (label.rfind("C", 0) == 0) return so_odd(num(1));
        throw UnknownLabel(label);
    }
};

/// A formal product of generators, label -> integer exponent.
struct WittWord {
    std::map<std::string, i64> exponents;

    bool empty() const { return exponents.empty(); }

    WittWord& multiply(const std::string& label, i64 e) {
        i64 v = (exponents[label] += e);
        if (v == 0) exponents.erase(label);
        return *this;
    }

    std::string to_string() const {
        if (exponents.empty()) return "1";
        std::string out;
        for (const auto& [label, e] : exponents) {
            if (!out.empty()) out += " * ";
            out += label;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }
};

/// Parses e.g. "C5^3 * C23 * I^-2 * Ap3".
inline WittWord parse_word(const std::string& text) {
    WittWord w;
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos == text.size()) return w;
    if (text[pos] == '1') {  // the identity class
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError("unexpected text after '1'");
        return w;
    }
    while (true) {
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
        if (pos == start) throw ParseError("expected generator label at position " + std::to_string(start));
        std::string label = text.substr(start, pos - start);
        WittGenerator::from_label(label);  // validate early
        i64 e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            size_t es = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == es) throw ParseError("expected exponent after '^'");
            e = std::stoll(text.substr(es, pos - es));
            skip_ws();
        }
        w.multiply(label, e);
        if (pos == text.size()) break;
        if (text[pos] != '*') throw ParseError("expected '*' at position " + std::to_string(pos));
        ++pos;
        skip_ws();
    }
    return w;
}

inline std::vector<std::pair<WittGenerator, i64>> resolve(const WittWord& w) {
    std::vector<std::pair<WittGenerator, i64>> out;
    for (const auto& [label, e] : w.exponents)
        out.emplace_back(WittGenerator::from_label(label), e);
    return out;
}

/// First central charge of the word: product of generator xi1 powers.
inline RootOfUnity xi1_of(const WittWord& w) {
    RootOfUnity acc;
    for (const auto& [gen, e] : resolve(w)) acc = acc * gen.xi1.pow(e);
    return acc;
}

/// Least common modulus through which all xi/signature data of the word factor.
inline i64 word_modulus(const WittWord& w) {
    i64 M = 32;  // always large enough for xi1 values and sign bookkeeping
    for (const auto& [gen, e] : resolve(w)) M = lcm_ll(M, gen.fs_exponent);
    return M;
}

/// Signature of one generator under sigma_k: the exact combinatorial path for
/// so_odd when k = 1 mod 4 and gcd(k,r) = 1 (sign of the D_r factorization),
/// the certified-numeric path otherwise. Rational sqrt_dim is always +1.
inline int generator_signature(const WittGenerator& gen, i64 k, i64 M) {
    if (gen.kind != WittGenerator::Kind::so_odd) return 1;
    i64 r = gen.param;
    if (mod_pos(k, 4) == 1 && gcd_ll(mod_pos(k, r) == 0 ? r : mod_pos(k, r), r) == 1) {
        int s = sqrt_power_sign(r, k);
        for (i64 l = 1; l <= r; ++l) s *= sine_image_sign(2 * l - 1, 8 * r, k);
        for (i64 j = 1; j <= 2 * r - 2; ++j)
            if (m_count(r, j) % 2 != 0) s *= sine_image_sign(j, 4 * r, k);
        if (s == 0) throw Error("vanishing sine factor in exact signature");
        return s;
    }
    return signature_of(gen.sqrt_dim(), GaloisElem(M, mod_pos(k, M)));
}

/// ss of the word at sigma_k modulo M: product over components.
inline int word_signature(const WittWord& w, i64 k, i64 M) {
    if (gcd_ll(mod_pos(k, M), M) != 1 && M > 1) throw NotCoprime("word_signature");
    int s = 1;
    for (const auto& [gen, e] : resolve(w))
        if (mod_pos(e, 2) == 1) s *= generator_signature(gen, k, M);
    return s;
}

namespace detail {

/// Canonical third root of a root of unity whose order is prime to 3.
inline RootOfUnity canonical_gamma(const RootOfUnity& xi) {
    i64 d = xi.order();
    if (d % 3 == 0) throw NoCanonicalCubeRoot();
    return xi.pow(mod_inverse(3, d == 1 ? 1 : d));
}

}  // namespace detail

/// The central-charge homomorphism at sigma (modulus M, exponent k):
/// per generator, ss'(sigma^{-1}) * sigma^{-1}(xi1) * sigma(gamma^k)/... in
/// exponent form ss'(sigma_{k'}) * xi1^{k'} * gamma^{k - k'} with
/// k' = k^{-1} mod M and gamma the canonical cube root of xi1.
inline RootOfUnity Xi_eval(const WittWord& w, const GaloisElem& sigma) {
    i64 M = sigma.modulus;
    if (M % word_modulus(w) != 0)
        throw IncompatibleModulus("sigma modulus must cover the word's conductors");
    i64 k = M == 1 ? 1 : sigma.k;
    i64 kp = mod_inverse(k, M);
    RootOfUnity acc;
    for (const auto& [gen, e] : resolve(w)) {
        RootOfUnity gamma = detail::canonical_gamma(gen.xi1);
        RootOfUnity val = gen.xi1.pow(kp) * gamma.pow(k - kp);
        if (generator_signature(gen, kp, M) < 0) val = val * minus_one();
        acc = acc * val.pow(e);
    }
    return acc;
}

/// The greedy coprime sequence a_z: first term 2l+1 with l = 4z+2, each later
/// term the smallest integer = 2l+1 mod 8l+2 coprime to all earlier terms.
/// primes_only filters the output to prime terms.
inline std::vector<i64> a_sequence(i64 z, i64 count, bool primes_only = false) {
    if (z < 0 || count < 1) throw OutOfRange("a_sequence arguments");
    const i64 l = 4 * z + 2;
    const i64 step = 8 * l + 2;
    std::vector<i64> accepted, out;
    for (i64 t = 2 * l + 1; static_cast<i64>(out.size()) < count; t += step) {
        bool ok = true;
        for (i64 a : accepted) ok = ok && gcd_ll(a, t) == 1;
        if (!ok) continue;
        accepted.push_back(t);
        if (!primes_only || is_prime(t)) out.push_back(t);
    }
    return out;
}

/// Lemma-6.6-style distinguishing Galois exponent for the so_odd component
/// `label` (rank f, odd exponent in the word): solves x*f + y*N = 1 for
/// N = lcm(32, other components' moduli) and returns
/// k = -8(2z+1)*x*f + 4l+1 (mod lcm(N, 32f)), after verifying k = 1 mod N and
/// that the component's signature at sigma_k is -1.
inline i64 distinguishing_k(const WittWord& w, const std::string& label, i64 z) {
    auto it = w.exponents.find(label);
    if (it == w.exponents.end() || mod_pos(it->second, 2) != 1)
        throw NoOddExponent(label);
    WittGenerator gen = WittGenerator::from_label(label);
    if (gen.kind != WittGenerator::Kind::so_odd)
        throw UnsupportedGaloisElement("distinguishing component must be so_odd");
    const i64 f = gen.param;
    const i64 l = 4 * z + 2;
    if (mod_pos(f, 8 * l + 2) != 2 * l + 1)
        throw BadResidue("rank is not = 2l+1 mod 8l+2 for this z");
    i64 N = 32;
    for (const auto& [g, e] : resolve(w))
        if (g.label != label) N = lcm_ll(N, g.fs_exponent);
    if (gcd_ll(f, N) != 1) throw NotCoprime("gcd(f, N) > 1");
    auto eg = ext_gcd(f, N);
    i64 k = -8 * (2 * z + 1) * eg.x * f + 4 * l + 1;
    const i64 M = lcm_ll(N, 32 * f);
    k = mod_pos(k, M);
    if (mod_pos(k, N) != 1) throw Error("distinguishing k not = 1 mod N");
    if (generator_signature(gen, k, M) != -1)
        throw Error("distinguishing k fails to flip the component signature");
    if (word_signature(w, k, M) != -1)
        throw Error("distinguishing k fails on the full word");
    return k;
}

struct KernelReport {
    bool in_kernel = false;
    std::optional<i64> witness_k;  // a sigma_k with word signature -1
    std::string reason;
};

enum class KernelMode { exhaustive, certify };

namespace detail {

/// Smallest z >= 0 with f = 2l+1 mod 8l+2 for l = 4z+2, if any in range.
inline std::optional<i64> matching_z(i64 f) {
    for (i64 z = 0; 8 * (4 * z + 2) + 2 <= 4 * f; ++z)
        if (mod_pos(f, 8 * (4 * z + 2) + 2) == 2 * (4 * z + 2) + 1) return z;
    return std::nullopt;
}

}  // namespace detail

/// Kernel criterion: xi1 = 1 and ss identically +1. Exhaustive mode sweeps
/// all units modulo the word modulus; certify mode looks for a distinguishing
/// Galois exponent instead.
inline KernelReport kernel_test(const WittWord& w, KernelMode mode) {
    KernelReport rep;
    if (!xi1_of(w).is_one()) {
        rep.reason = "xi1 != 1";
        return rep;
    }
    const i64 M = word_modulus(w);
    if (mode == KernelMode::exhaustive) {
        if (euler_phi(M) > kPhiCap) throw ConductorTooLarge(std::to_string(M));
        for (i64 k : units_mod(M)) {
            if (word_signature(w, k, M) == -1) {
                rep.witness_k = k;
                rep.reason = "signature -1 at k=" + std::to_string(k);
                return rep;
            }
        }
        rep.in_kernel = true;
        rep.reason = "xi1 = 1 and signature identically +1 on (Z/" + std::to_string(M) + ")^x";
        return rep;
    }
    // certify mode: only odd-exponent so_odd components can carry signature
    bool any_odd = false;
    for (const auto& [gen, e] : resolve(w)) {
        if (gen.kind != WittGenerator::Kind::so_odd || mod_pos(e, 2) != 1) continue;
        any_odd = true;
        auto z = detail::matching_z(gen.param);
        if (!z) continue;
        i64 k = distinguishing_k(w, gen.label, *z);
        rep.witness_k = k;
        rep.reason = "signature -1 at k=" + std::to_string(k) + " (component " + gen.label + ")";
        return rep;
    }
    if (!any_odd) {
        // every so_odd exponent even and all other sqrt_dims rational: ss = +1
        rep.in_kernel = true;
        rep.reason = "xi1 = 1 and all component signatures trivially +1";
        return rep;
    }
    throw NoOddExponent("no so_odd component matches a distinguishing sequence");
}

/// Invariant-level shadow of the square relation [C_r]^2 = [I]^e:
/// xi1(C_r)^2 = xi1(I)^e with e = 11 for r = 0,3 mod 4 and e = 3 otherwise.
inline bool verify_square_relation(i64 r) {
    i64 e = (r % 4 == 0 || r % 4 == 3) ? 11 : 3;
    return xi1_closed_form(r).pow(2) == RootOfUnity(16, 3).pow(e);
}

struct StructureReport {
    i64 classes = 0;
    i64 distinguished_by_xi1 = 0;
    i64 distinguished_by_k = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Certifies that the 32*2^n candidate classes [C_{f0}]^{b0} ... [C_{fn}]^{bn}
/// (b0 in [0,32), later b in {0,1}) have pairwise-distinct Xi images, by
/// showing every nontrivial class has xi1 != 1 or a signature witness. Squares
/// of [C_{f0}] are folded into Ising powers via the square relation.
inline StructureReport verify_structure(const std::vector<i64>& f, i64 n) {
    if (f.empty() || n + 1 > static_cast<i64>(f.size()))
        throw OutOfRange("need n+1 <= number of ranks");
    auto z0 = detail::matching_z(f[0]);
    if (!z0) throw BadResidue("f is not a prefix of any a_z");
    std::vector<i64> expect = a_sequence(*z0, static_cast<i64>(f.size()));
    if (expect != f) throw BadResidue("f is not a prefix of a_z");
    if (!verify_square_relation(f[0]))
        throw Error("square relation fails for the leading rank");
    const i64 e = (f[0] % 4 == 0 || f[0] % 4 == 3) ? 11 : 3;

    StructureReport rep;
    const i64 total = 32 << n;
    for (i64 code = 0; code < total; ++code) {
        i64 b0 = code % 32;
        WittWord w;
        if (b0 % 2 == 1) w.multiply("C" + std::to_string(f[0]), 1);
        if ((b0 / 2) % 16 != 0) w.multiply("I", mod_pos(e * (b0 / 2), 16));
        for (i64 i = 1; i <= n; ++i)
            if ((code >> (4 + i)) & 1) w.multiply("C" + std::to_string(f[static_cast<size_t>(i)]), 1);
        if (w.empty()) continue;  // the identity class
        ++rep.classes;
        if (!xi1_of(w).is_one()) {
            ++rep.distinguished_by_xi1;
            continue;
        }
        try {
            KernelReport kr = kernel_test(w, KernelMode::certify);
            if (!kr.in_kernel && kr.witness_k) ++rep.distinguished_by_k;
            else rep.failures.push_back(w.to_string());
        } catch (const Error& err) {
            rep.failures.push_back(w.to_string() + ": " + err.what());
        }
    }
    return rep;
}

}  // namespace wittcharge
