#pragma once

// Isotropy and Witt decomposition beta = beta_a + n*H with beta_a anisotropic.
// Rank-0 forms are legal values here (the anisotropic part of n*H).

#include "a1deg/forms.hpp"

#include <string>

namespace a1deg {

/// Dimension of the Q_p-anisotropic kernel of a form over QQ; in {0,...,4}.
std::size_t anisotropic_dimension_qp(const GWClass& beta, const Integer& p);

std::size_t anisotropic_dimension(const GWClass& beta);
std::size_t witt_index(const GWClass& beta);
bool is_anisotropic(const GWClass& beta);
/// False for the rank-0 form.
bool is_isotropic(const GWClass& beta);

/// Diagonal anisotropic form with square-class entries sorted ascending.
GWClass anisotropic_part(const GWClass& beta);

struct DecompositionReport {
    GWClass anisotropic_part;
    std::size_t witt_index = 0;
    /// "2H + <2> + <5>"; "0" for the rank-0 form.
    std::string display;
};

DecompositionReport sum_decomposition(const GWClass& beta);

/// True iff the nonzero rational d is a square in Q_p.
bool is_padic_square(const Rational& d, const Integer& p);

} // namespace a1deg
