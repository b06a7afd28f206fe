#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "linrel/errors.hpp"

namespace linrel {

enum class FieldKind : std::uint8_t { Rational, PrimeField };

/// Identifies the ground field of a computation: the rationals or GF(p).
/// Every scalar, matrix and subspace carries one; mixing specs is an error.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rational, 0); }

    /// GF(p). Throws ValidationError unless p is prime.
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return characteristic_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }

    std::string str() const;  // "Q" or "GF(p)"
    /// Parses "q", "Q", "gf:P", "GF(P)".
    static FieldSpec parse(const std::string& text);

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.characteristic_ == b.characteristic_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    FieldSpec(FieldKind kind, std::uint64_t characteristic)
        : kind_(kind), characteristic_(characteristic) {}

    FieldKind kind_;
    std::uint64_t characteristic_;  // 0 for the rationals
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element: an arbitrary-precision rational or a residue mod p.
/// Values are immutable; arithmetic between different FieldSpecs throws.
class Scalar {
public:
    Scalar() : Scalar(zero(FieldSpec::rationals())) {}

    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar from_int(const FieldSpec& field, long value);
    static Scalar from_rational(mpq_class value);  // field = Q, canonicalized
    static Scalar from_residue(const FieldSpec& field, std::uint64_t value);  // reduced mod p

    /// Parses "a", "-a" or "a/b" in the given field.
    static Scalar parse(const FieldSpec& field, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue in [0, p); only valid for PrimeField scalars.
    std::uint64_t residue() const;
    /// Canonical rational value; only valid for Rational scalars.
    const mpq_class& rational() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// "a" or "a/b" for rationals; the residue as decimal digits for GF(p).
    std::string str() const;

private:
    Scalar(FieldSpec field, mpq_class rat, std::uint64_t res)
        : field_(field), rat_(std::move(rat)), res_(res) {}

    void require_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    mpq_class rat_;       // used when field_ is Rational
    std::uint64_t res_;   // used when field_ is PrimeField
};

}  // namespace linrel
