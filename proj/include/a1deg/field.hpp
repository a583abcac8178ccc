#pragma once

// Field descriptors and the tagged scalar type shared by the polynomial,
// forms and degree code. Elements of RR and CC are exact rationals; the field
// tag only changes which invariants classify a form.

#include "a1deg/arith.hpp"
#include "a1deg/finite_field.hpp"

#include <compare>
#include <memory>
#include <string>
#include <variant>

namespace a1deg {

enum class FieldKind { QQ, RR, CC, GF };

class FieldDesc {
public:
    static FieldDesc rationals() { return FieldDesc(FieldKind::QQ); }
    static FieldDesc reals() { return FieldDesc(FieldKind::RR); }
    static FieldDesc complexes() { return FieldDesc(FieldKind::CC); }
    /// GF(p^k) with the deterministic smallest irreducible modulus.
    static FieldDesc finite(std::uint64_t p, unsigned k = 1);
    /// GF(p^k) with a caller-chosen modulus (t^0 .. t^k, monic).
    static FieldDesc finite_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

    FieldKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == FieldKind::GF; }
    /// QQ and GF; RR/CC carry exact rationals but are not exact fields.
    bool is_exact() const { return kind_ == FieldKind::QQ || kind_ == FieldKind::GF; }
    bool has_rational_elements() const { return kind_ != FieldKind::GF; }
    const std::shared_ptr<const GaloisField>& galois() const { return gf_; }

    std::string name() const;

    bool operator==(const FieldDesc& other) const;

private:
    explicit FieldDesc(FieldKind kind) : kind_(kind) {}

    FieldKind kind_;
    std::shared_ptr<const GaloisField> gf_;
};

/// gf_construct: GF(p^k) with p odd; throws on p = 2.
FieldDesc gf_construct(std::uint64_t p, unsigned k);

struct FiniteFieldElement {
    std::shared_ptr<const GaloisField> field;
    std::uint64_t value = 0;
};

/// An element of some FieldDesc: a Rational (QQ/RR/CC) or a FiniteFieldElement.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational r) : value_(std::move(r)) {}
    Scalar(FiniteFieldElement e) : value_(std::move(e)) {}

    static Scalar zero(const FieldDesc& F) { return from_integer(F, 0); }
    static Scalar one(const FieldDesc& F) { return from_integer(F, 1); }
    static Scalar from_integer(const FieldDesc& F, const Integer& n);
    /// For GF fields the denominator must be invertible mod p.
    static Scalar from_rational(const FieldDesc& F, const Rational& r);

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& rational() const;
    const FiniteFieldElement& finite() const;

    bool is_zero() const;
    bool is_one() const;
    /// Sign of a rational scalar; throws for finite-field elements.
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;

    /// Deterministic total order: rationals by value, finite elements by packed value.
    std::strong_ordering compare(const Scalar& o) const;

    std::string to_string() const;

private:
    std::variant<Rational, FiniteFieldElement> value_;
};

/// True iff a is a nonzero square in F. Throws on a = 0.
bool is_square(const Scalar& a, const FieldDesc& F);

/// Checks that `a` is an element of F (rational for QQ/RR/CC, same GF otherwise).
bool belongs_to(const Scalar& a, const FieldDesc& F);

} // namespace a1deg
