// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Signature functions sgn(sigma_k(x)) for totally real cyclotomic elements,
// the Jacobi symbol, and float-free sign rules for Galois images of sines of
// rational angles and of sqrt(r^r).

#pragma once

#include <map>
#include <string>

#include "wittcharge/algebraic.hpp"
#include "wittcharge/cyclotomic.hpp"

namespace wittcharge {

/// A factor sin(j*pi/m)^multiplicity with 0 < j < m.
struct SineFactor {
    i64 j;
    i64 m;
    i64 multiplicity;
};

/// Values of a signature function on the units modulo M.
struct SignatureSample {
    i64 modulus;
    std::map<i64, int> values;  // k -> +-1, keys coprime to modulus, ascending
};

/// Jacobi symbol (k/n), n odd. 0 iff gcd(k,n) > 1; (./1) = 1.
inline int jacobi(i64 k, i64 n) {
    if (n < 1 || n % 2 == 0) throw EvenModulus();
    return jacobi_symbol(k, n);
}

/// Lift k from (Z/modulus)^x to a unit modulo M (modulus | M).
inline i64 lift_unit(i64 k, i64 modulus, i64 M) {
    if (M % modulus != 0) throw IncompatibleModulus("lift target must be a multiple");
    if (modulus == 1) return 1 % std::max<i64>(M, 2) == 0 ? 0 : 1;
    k = mod_pos(k, modulus);
    for (i64 c = k == 0 ? modulus : k; c < k + M; c += modulus)
        if (gcd_ll(mod_pos(c, M) == 0 ? M : mod_pos(c, M), M) == 1) return mod_pos(c, M);
    throw NotCoprime("no coprime lift of " + std::to_string(k));
}

/// sgn(sigma(x)) for real nonzero x; multiplicative in x.
inline int signature_of(const CycloElem& x, const GaloisElem& sigma) {
    if (x.is_zero()) throw ZeroElement();
    if (!is_real(x)) throw NotReal();
    i64 M = lcm_ll(x.conductor(), sigma.modulus);
    i64 k = lift_unit(sigma.modulus == 1 ? 1 : sigma.k, sigma.modulus, M);
    return certified_sign(galois_apply(GaloisElem(M, k), embed(x, M)));
}

/// Exact sign of sigma_k(sin(j*pi/m)) for k = 1 mod 4 without floats:
/// reduce u = k*j mod 2m and read the sign off the half-period.
inline int sine_image_sign(i64 j, i64 m, i64 k) {
    if (m < 1) throw OutOfRange("sine_image_sign requires m >= 1");
    if (mod_pos(k, 4) != 1)
        throw BadResidue("sine_image_sign requires k = 1 mod 4");
    if (gcd_ll(k, odd_part(m)) != 1)
        throw NotCoprime("k must be coprime to the odd part of m");
    i64 u = mod_pos(k * j, 2 * m);
    if (u == 0 || u == m) return 0;
    return u < m ? 1 : -1;
}

/// Sign of sigma_k(sqrt(r^r)) for k = 1 mod 4: +1 for even r (perfect
/// square), Jacobi symbol (k/r) for odd r.
inline int sqrt_power_sign(i64 r, i64 k) {
    if (mod_pos(k, 4) != 1) throw BadResidue("sqrt_power_sign requires k = 1 mod 4");
    if (gcd_ll(k, r) != 1) throw NotCoprime("sqrt_power_sign requires gcd(k,r) = 1");
    if (r % 2 == 0) return 1;
    return jacobi(k, r);
}

/// Tabulates sgn(sigma_k(x)) over all units k modulo M.
inline SignatureSample signature_table(const CycloElem& x, i64 M) {
    if (M % x.conductor() != 0)
        throw NotADivisor("conductor must divide the table modulus");
    SignatureSample table;
    table.modulus = M;
    for (i64 k : units_mod(M)) table.values[k] = signature_of(x, GaloisElem(M, k));
    return table;
}

}  // namespace wittcharge
