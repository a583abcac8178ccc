#include "a1deg/field.hpp"

#include "a1deg/error.hpp"

namespace a1deg {

namespace {

[[noreturn]] void mixed_fields() { throw DomainError("arithmetic between elements of different fields"); }

const GaloisField& common_field(const FiniteFieldElement& a, const FiniteFieldElement& b) {
    if (a.field != b.field && !(*a.field == *b.field)) mixed_fields();
    return *a.field;
}

} // namespace

FieldDesc FieldDesc::finite(std::uint64_t p, unsigned k) {
    if (p == 2) throw DomainError("characteristic 2 unsupported");
    if (!is_prime(Integer(static_cast<unsigned long>(p)))) throw DomainError(std::to_string(p) + " is not a prime");
    return finite_with_modulus(p, smallest_irreducible(p, k));
}

FieldDesc FieldDesc::finite_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    FieldDesc F(FieldKind::GF);
    F.gf_ = std::make_shared<const GaloisField>(p, std::move(modulus));
    return F;
}

FieldDesc gf_construct(std::uint64_t p, unsigned k) { return FieldDesc::finite(p, k); }

std::string FieldDesc::name() const {
    switch (kind_) {
    case FieldKind::QQ: return "QQ";
    case FieldKind::RR: return "RR";
    case FieldKind::CC: return "CC";
    case FieldKind::GF: return gf_->name();
    }
    return "?";
}

bool FieldDesc::operator==(const FieldDesc& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ != FieldKind::GF) return true;
    return gf_ == other.gf_ || *gf_ == *other.gf_;
}

Scalar Scalar::from_integer(const FieldDesc& F, const Integer& n) {
    if (F.has_rational_elements()) return Scalar(Rational(n));
    const auto& gf = F.galois();
    Integer r = n % Integer(static_cast<unsigned long>(gf->characteristic()));
    if (r < 0) r += static_cast<unsigned long>(gf->characteristic());
    return Scalar(FiniteFieldElement{gf, r.get_ui()});
}

Scalar Scalar::from_rational(const FieldDesc& F, const Rational& r) {
    if (F.has_rational_elements()) return Scalar(r);
    Scalar den = from_integer(F, r.get_den());
    if (den.is_zero()) throw DomainError("denominator " + a1deg::to_string(Integer(r.get_den())) + " vanishes in " + F.name());
    return from_integer(F, r.get_num()) / den;
}

const Rational& Scalar::rational() const {
    if (auto* r = std::get_if<Rational>(&value_)) return *r;
    throw DomainError("expected a rational scalar");
}

const FiniteFieldElement& Scalar::finite() const {
    if (auto* e = std::get_if<FiniteFieldElement>(&value_)) return *e;
    throw DomainError("expected a finite-field scalar");
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<Rational>(&value_)) return *r == 0;
    return std::get<FiniteFieldElement>(value_).value == 0;
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<Rational>(&value_)) return *r == 1;
    return std::get<FiniteFieldElement>(value_).value == 1;
}

int Scalar::sign() const { return sgn(rational()); }

Scalar Scalar::operator-() const {
    if (auto* r = std::get_if<Rational>(&value_)) return Scalar(Rational(-*r));
    const auto& e = std::get<FiniteFieldElement>(value_);
    return Scalar(FiniteFieldElement{e.field, e.field->neg(e.value)});
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r += o.rational();
    } else {
        auto& e = std::get<FiniteFieldElement>(value_);
        const auto& f = o.finite();
        e.value = common_field(e, f).add(e.value, f.value);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r -= o.rational();
    } else {
        auto& e = std::get<FiniteFieldElement>(value_);
        const auto& f = o.finite();
        e.value = common_field(e, f).sub(e.value, f.value);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r *= o.rational();
    } else {
        auto& e = std::get<FiniteFieldElement>(value_);
        const auto& f = o.finite();
        e.value = common_field(e, f).mul(e.value, f.value);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r /= o.rational();
    } else {
        auto& e = std::get<FiniteFieldElement>(value_);
        const auto& f = o.finite();
        const auto& gf = common_field(e, f);
        e.value = gf.mul(e.value, gf.inv(f.value));
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_rational()) return Scalar(Rational(1)) / *this;
    const auto& e = finite();
    return Scalar(FiniteFieldElement{e.field, e.field->inv(e.value)});
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return rational() == o.rational();
    const auto& a = finite();
    const auto& b = o.finite();
    return a.value == b.value && (a.field == b.field || *a.field == *b.field);
}

std::strong_ordering Scalar::compare(const Scalar& o) const {
    if (is_rational() && o.is_rational()) {
        int c = cmp(rational(), o.rational());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    if (!is_rational() && !o.is_rational()) return finite().value <=> o.finite().value;
    return is_rational() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Scalar::to_string() const {
    if (is_rational()) return a1deg::to_string(rational());
    const auto& e = finite();
    return e.field->format(e.value);
}

bool belongs_to(const Scalar& a, const FieldDesc& F) {
    if (F.has_rational_elements()) return a.is_rational();
    if (a.is_rational()) return false;
    const auto& e = a.finite();
    return e.field == F.galois() || *e.field == *F.galois();
}

bool is_square(const Scalar& a, const FieldDesc& F) {
    if (a.is_zero()) throw DomainError("zero has no square class");
    switch (F.kind()) {
    case FieldKind::CC: return true;
    case FieldKind::RR: return a.sign() > 0;
    case FieldKind::QQ: return squarefree_part(a.rational()) == 1;
    case FieldKind::GF: {
        const auto& e = a.finite();
        return e.field->is_square(e.value);
    }
    }
    return false;
}

} // namespace a1deg
