#pragma once

// Sparse multivariate polynomials over QQ or GF(q) with graded reverse
// lexicographic order, reduced Groebner bases (Buchberger with Gebauer-Moeller
// pair elimination), ideal quotients, saturation and standard monomials.

#include "a1deg/field.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace a1deg {

struct Monomial {
    std::vector<std::uint32_t> exps;
    std::uint32_t degree = 0;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e);
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

    bool is_one() const { return degree == 0; }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// k[x_1..x_n] over an exact field. The order is grevlex on the first
/// `elimination_block` variables, ties broken by grevlex on the rest; with
/// a zero block this is plain grevlex in the given variable order.
class PolyRing {
public:
    static RingPtr make(FieldDesc field, std::vector<std::string> vars, std::size_t elimination_block = 0);

    const FieldDesc& field() const { return field_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::size_t elimination_block() const { return elim_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// <0, 0, >0 as a < b, a == b, a > b in the ring's order.
    int compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && elim_ == o.elim_;
    }

    std::string format(const Monomial& m) const;

private:
    PolyRing(FieldDesc field, std::vector<std::string> vars, std::size_t elim)
        : field_(std::move(field)), vars_(std::move(vars)), elim_(elim) {}

    FieldDesc field_;
    std::vector<std::string> vars_;
    std::size_t elim_;
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    /// Combines like terms, drops zeros and sorts.
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long c);
    static Polynomial variable(const RingPtr& ring, std::size_t i);
    static Polynomial variable(const RingPtr& ring, const std::string& name);
    static Polynomial monomial(const RingPtr& ring, Monomial m, Scalar c);

    const RingPtr& ring() const { return ring_; }
    /// Terms in decreasing monomial order.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coeff() const { return leading_term().coeff; }
    std::uint32_t total_degree() const;
    /// Highest exponent of variable i appearing.
    std::uint32_t degree_in(std::size_t i) const;

    Polynomial monic() const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(unsigned e) const;

    /// Coefficient of m (zero if absent).
    Scalar coefficient(const Monomial& m) const;

    bool operator==(const Polynomial& o) const;

    std::string to_string() const;

private:
    friend struct PolyAccess;
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Throws DomainError unless both rings are equal.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exact division f / g; throws DomainError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Image of f in `target`, sending variable i of f's ring to variable
/// var_map[i] of target. Coefficients are kept; fields must agree.
Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<std::size_t>& var_map);

Polynomial derivative(const Polynomial& f, std::size_t var);
/// f with variable `var` replaced by the constant c.
Polynomial substitute(const Polynomial& f, std::size_t var, const Scalar& c);

class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    /// True when every generator is zero.
    bool is_zero() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis: monic, interreduced, sorted by ascending leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero(); }
    bool contains(const Polynomial& f) const;
    Ideal ideal() const { return Ideal(ring_, basis_); }

    bool operator==(const GroebnerBasis& o) const { return *ring_ == *o.ring_ && basis_ == o.basis_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> basis_;
};

GroebnerBasis groebner_basis(const Ideal& I);

/// Remainder of multivariate division by the basis elements.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
/// Same, against an arbitrary list of divisors (used with unions of bases in
/// disjoint variables, which are themselves Groebner bases).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

bool ideals_equal(const Ideal& I, const Ideal& J);
bool ideal_contains(const Ideal& big, const Ideal& small);

/// I intersect J via one auxiliary elimination variable.
Ideal intersect(const Ideal& I, const Ideal& J);
/// (I : J) = {f : f J subset I}, the intersection of (I : g) over generators g of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// Iterates K <- (K : J) from K = I until stable.
Ideal saturation(const Ideal& I, const Ideal& J);

/// Monomials outside the leading-term ideal, ascending. Throws DomainError
/// "zeros are not isolated" when the quotient is infinite-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& G);

/// Determinant of the Sylvester matrix of two polynomials in one common
/// variable. Optional formal degrees (>= actual degrees) pad with leading
/// zeros, which gives the resultant of the homogenizations.
Scalar resultant_univariate(const Polynomial& f, const Polynomial& g,
                            std::optional<unsigned> formal_deg_f = std::nullopt,
                            std::optional<unsigned> formal_deg_g = std::nullopt);

/// Resultant of two binary forms in variables (u, v) of their ring: the
/// Sylvester determinant in the coefficients of u^d, u^(d-1) v, ..., v^d.
Scalar resultant_binary_forms(const Polynomial& f, const Polynomial& g, std::size_t u, std::size_t v);

} // namespace a1deg
