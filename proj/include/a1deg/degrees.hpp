#pragma once

// A1-Brouwer degrees of endomorphisms f = (f_1..f_n) of affine n-space via
// the Bezoutian bilinear form on the quotient algebra (global) or on the
// local algebra at a point (local).

#include "a1deg/forms.hpp"
#include "a1deg/poly.hpp"

#include <vector>

namespace a1deg {

class EndoSystem {
public:
    /// Requires as many polynomials as variables, all in `ring`.
    EndoSystem(RingPtr ring, std::vector<Polynomial> polys);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& polys() const { return polys_; }
    std::size_t size() const { return polys_.size(); }
    Ideal ideal() const { return Ideal(ring_, polys_); }

private:
    RingPtr ring_;
    std::vector<Polynomial> polys_;
};

struct BezoutianMatrix {
    /// Variables X1..Xn, Y1..Yn in grevlex.
    RingPtr doubled;
    Matrix<Polynomial> entries;
};

/// Ring with variables X1..Xn, Y1..Yn over the field of `base`.
RingPtr doubled_ring(const RingPtr& base);

/// Delta_ij = (f_i(Y_1..Y_{j-1}, X_j..X_n) - f_i(Y_1..Y_j, X_{j+1}..X_n)) / (X_j - Y_j).
BezoutianMatrix bezoutian_matrix(const EndoSystem& f);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Polynomial polynomial_determinant(const Matrix<Polynomial>& M);

GWClass global_a1_degree(const EndoSystem& f);

struct LocalAlgebraBasis {
    Ideal point;
    /// (I : (I : m^oo)), the m-primary component of I.
    Ideal local_ideal;
    std::vector<Monomial> basis;
};

LocalAlgebraBasis local_algebra_basis(const EndoSystem& f, const Ideal& point);

GWClass local_a1_degree(const EndoSystem& f, const Ideal& point);

} // namespace a1deg
