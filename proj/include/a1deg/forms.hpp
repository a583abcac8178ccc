#pragma once

// Classes in the Grothendieck-Witt ring GW(k) for k in {CC, RR, QQ, GF(q)},
// represented by symmetric nondegenerate Gram matrices.

#include "a1deg/field.hpp"
#include "a1deg/matrix.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace a1deg {

class GWClass {
public:
    /// Validates squareness, symmetry, nondegeneracy and that every entry is
    /// an element of F. Rejects 0x0 matrices; use empty() for the zero class.
    GWClass(FieldDesc F, Matrix<Scalar> gram);

    /// The rank-0 form (the class of the zero vector space).
    static GWClass empty(FieldDesc F);

    const FieldDesc& field() const { return field_; }
    const Matrix<Scalar>& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }

    bool operator==(const GWClass& o) const { return field_ == o.field_ && gram_ == o.gram_; }

    /// "[[1,3],[3,7]]"
    std::string to_string() const;

private:
    GWClass(FieldDesc F, Matrix<Scalar> gram, bool /*unchecked*/) : field_(std::move(F)), gram_(std::move(gram)) {}

    FieldDesc field_;
    Matrix<Scalar> gram_;
};

/// Convenience for integer literal matrices.
Matrix<Scalar> integer_matrix(const FieldDesc& F, std::initializer_list<std::initializer_list<long>> rows);

GWClass make_gw_class(const Matrix<Scalar>& M, const FieldDesc& F);
GWClass make_diagonal_form(const FieldDesc& F, const std::vector<Scalar>& entries);
GWClass make_diagonal_form(const FieldDesc& F, std::initializer_list<long> entries);
/// rank/2 copies of H = <1,-1>; rank must be even and positive.
GWClass make_hyperbolic_form(const FieldDesc& F, std::size_t rank = 2);
/// <<a_1,...,a_n>> = tensor product of the <1,-a_i>.
GWClass make_pfister_form(const FieldDesc& F, const std::vector<Scalar>& entries);

/// Direct sum (block diagonal Gram matrix).
GWClass add_gw(const GWClass& a, const GWClass& b);
/// Tensor product (Kronecker product of Gram matrices).
GWClass multiply_gw(const GWClass& a, const GWClass& b);

struct Diagonalization {
    GWClass diagonal;
    /// Columns are the new basis: P^T * gram * P == diagonal.
    Matrix<Scalar> change_of_basis;
};

/// Symmetric Gaussian elimination by congruence. Diagonal entries are then
/// scaled to their square-class representative (squarefree integers over
/// QQ/RR/CC; 1 or the fixed smallest nonsquare over GF(q)).
Diagonalization diagonalize(const GWClass& beta);
std::vector<Scalar> diagonal_entries(const GWClass& beta);

/// Squarefree integer over QQ/RR/CC; 1 or the smallest nonsquare over GF(q).
Scalar square_class_representative(const Scalar& a, const FieldDesc& F);

Scalar determinant(const Matrix<Scalar>& M, const FieldDesc& F);

std::size_t get_rank(const GWClass& beta);
/// #positive - #negative diagonal entries; QQ and RR only.
int get_signature(const GWClass& beta);
/// Square class of the determinant: squarefree integer over QQ, +-1 over RR,
/// 1 over CC, 1 or the smallest nonsquare over GF(q).
Scalar get_discriminant(const GWClass& beta);

/// (a, b)_p in closed form from the unit/valuation decomposition of a and b.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);
/// (a, b) at the real place: -1 iff both are negative.
int real_hilbert_symbol(const Rational& a, const Rational& b);

/// prod_{i<j} (a_i, a_j)_p over a diagonalization; +1 for rank <= 1.
int hasse_witt_invariant(const GWClass& beta, const Integer& p);

/// {2} together with the odd primes dividing the squarefree diagonal entries.
/// Outside this set every Hasse-Witt invariant is +1.
std::vector<Integer> relevant_primes(const GWClass& beta);

struct InvariantBundle {
    std::size_t rank = 0;
    std::optional<int> signature;
    Scalar discriminant;
    /// QQ only. Keys: 2, the odd primes with odd valuation in the
    /// discriminant, and the odd primes where the invariant is -1.
    std::map<Integer, int> hasse_witt;

    bool operator==(const InvariantBundle& o) const {
        return rank == o.rank && signature == o.signature && discriminant == o.discriminant &&
               hasse_witt == o.hasse_witt;
    }
};

InvariantBundle invariants(const GWClass& beta);

/// Classification by invariants: rank (CC); rank and signature (RR); rank and
/// discriminant (GF); rank, signature, discriminant and all Hasse-Witt
/// invariants (QQ).
bool is_isomorphic_form(const GWClass& a, const GWClass& b);

/// Re-tags a QQ class as RR or CC.
GWClass base_change(const GWClass& beta, const FieldDesc& target);

} // namespace a1deg
