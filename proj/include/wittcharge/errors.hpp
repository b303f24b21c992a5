// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace wittcharge {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct IncompatibleModulus : Error {
    explicit IncompatibleModulus(const std::string& w) : Error("incompatible modulus: " + w) {}
};

struct NotADivisor : Error {
    explicit NotADivisor(const std::string& w) : Error("not a divisor: " + w) {}
};

struct NotReal : Error {
    NotReal() : Error("element is not real (not fixed by conjugation)") {}
};

struct NotARootOfUnity : Error {
    NotARootOfUnity() : Error("element is not a root of unity") {}
};

struct ZeroElement : Error {
    ZeroElement() : Error("element is zero") {}
};

struct EvenModulus : Error {
    EvenModulus() : Error("Jacobi symbol requires an odd modulus") {}
};

struct BadResidue : Error {
    explicit BadResidue(const std::string& w) : Error("bad residue: " + w) {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& w) : Error("arguments are not coprime: " + w) {}
};

struct RankMismatch : Error {
    RankMismatch() : Error("rank mismatch") {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& w) : Error("out of range: " + w) {}
};

struct InconsistentForm : Error {
    explicit InconsistentForm(const std::string& w) : Error("inconsistent quadratic form: " + w) {}
};

struct DegenerateForm : Error {
    DegenerateForm() : Error("quadratic form is degenerate") {}
};

struct NotOddPrime : Error {
    explicit NotOddPrime(const std::string& w) : Error("not an odd prime: " + w) {}
};

struct ZeroGaussSum : Error {
    ZeroGaussSum() : Error("Gauss sum vanishes; central charge undefined") {}
};

struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& w) : Error("unknown generator label: " + w) {}
};

struct NoCanonicalCubeRoot : Error {
    NoCanonicalCubeRoot() : Error("order of xi1 is divisible by 3; no canonical cube root") {}
};

struct ConductorTooLarge : Error {
    explicit ConductorTooLarge(const std::string& w) : Error("conductor too large: " + w) {}
};

struct NoOddExponent : Error {
    NoOddExponent() : Error("word has no usable component with odd exponent") {}
    explicit NoOddExponent(const std::string& w)
        : Error("word has no usable component with odd exponent: " + w) {}
};

struct UnsupportedGaloisElement : Error {
    explicit UnsupportedGaloisElement(const std::string& w)
        : Error("unsupported Galois element: " + w) {}
};

// Thrown when the certified sign iteration reaches the precision cap without
// separating the value from zero. Exact zero is tested first, so this signals
// a bug rather than a hard input.
struct PrecisionExhausted : Error {
    PrecisionExhausted() : Error("precision cap reached in certified evaluation") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

}  // namespace wittcharge
