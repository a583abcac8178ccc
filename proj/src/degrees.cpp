#include "a1deg/degrees.hpp"

#include "a1deg/error.hpp"

#include <map>
#include <stdexcept>

namespace a1deg {

EndoSystem::EndoSystem(RingPtr ring, std::vector<Polynomial> polys) : ring_(std::move(ring)), polys_(std::move(polys)) {
    if (polys_.size() != ring_->nvars()) {
        throw DomainError("an endomorphism needs as many polynomials (" + std::to_string(polys_.size()) +
                          ") as variables (" + std::to_string(ring_->nvars()) + ")");
    }
    for (const auto& p : polys_) require_same_ring(p.ring(), ring_);
}

RingPtr doubled_ring(const RingPtr& base) {
    const std::size_t n = base->nvars();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i + 1));
    return PolyRing::make(base->field(), names);
}

BezoutianMatrix bezoutian_matrix(const EndoSystem& f) {
    const std::size_t n = f.size();
    RingPtr D = doubled_ring(f.ring());
    Matrix<Polynomial> delta(n, n, Polynomial(D));
    for (std::size_t j = 0; j < n; ++j) {
        // Variables before j go to Y, from j on to X (left); j itself also to Y (right).
        std::vector<std::size_t> left(n), right(n);
        for (std::size_t k = 0; k < n; ++k) {
            left[k] = k < j ? n + k : k;
            right[k] = k <= j ? n + k : k;
        }
        Polynomial denom = Polynomial::variable(D, j) - Polynomial::variable(D, n + j);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial num = map_variables(f.polys()[i], D, left) - map_variables(f.polys()[i], D, right);
            delta(i, j) = divide_exact(num, denom);
        }
    }
    return {D, std::move(delta)};
}

Polynomial polynomial_determinant(const Matrix<Polynomial>& M) {
    if (!M.is_square() || M.rows() == 0) throw DomainError("determinant needs a nonempty square matrix");
    const std::size_t n = M.rows();
    const RingPtr ring = M(0, 0).ring();
    Matrix<Polynomial> A = M;
    Polynomial prev = Polynomial::constant(ring, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && A(r, k).is_zero()) ++r;
            if (r == n) return Polynomial(ring);
            A.swap_rows(k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                A(i, j) = divide_exact(A(k, k) * A(i, j) - A(i, k) * A(k, j), prev);
            }
        }
        prev = A(k, k);
    }
    Polynomial det = A(n - 1, n - 1);
    return negate ? -det : det;
}

namespace {

GroebnerBasis require_zero_dimensional_gb(const Ideal& I) {
    GroebnerBasis G = groebner_basis(I);
    standard_monomials(G);
    return G;
}

// Images of a basis of the base ring in the X and Y copies of the doubled ring.
std::vector<Polynomial> doubled_divisors(const GroebnerBasis& G, const RingPtr& D) {
    const std::size_t n = G.ring()->nvars();
    std::vector<std::size_t> to_x(n), to_y(n);
    for (std::size_t k = 0; k < n; ++k) {
        to_x[k] = k;
        to_y[k] = n + k;
    }
    std::vector<Polynomial> out;
    for (const auto& g : G.basis()) out.push_back(map_variables(g, D, to_x));
    for (const auto& g : G.basis()) out.push_back(map_variables(g, D, to_y));
    return out;
}

// Reduces det(Delta) modulo G in both copies and reads the coefficient of
// a_i(X) a_j(Y) into entry (i, j).
GWClass bezoutian_form(const EndoSystem& f, const GroebnerBasis& G, const std::vector<Monomial>& basis) {
    const FieldDesc& F = f.ring()->field();
    if (basis.empty()) return GWClass::empty(F);
    const std::size_t n = f.size();
    BezoutianMatrix B = bezoutian_matrix(f);
    Polynomial det = polynomial_determinant(B.entries);
    Polynomial reduced = normal_form(det, doubled_divisors(G, B.doubled));

    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exps, i);

    const std::size_t m = basis.size();
    Matrix<Scalar> gram(m, m, Scalar::zero(F));
    for (const auto& t : reduced.terms()) {
        std::vector<std::uint32_t> xs(t.mono.exps.begin(), t.mono.exps.begin() + n);
        std::vector<std::uint32_t> ys(t.mono.exps.begin() + n, t.mono.exps.end());
        auto ix = index.find(xs), iy = index.find(ys);
        if (ix == index.end() || iy == index.end()) {
            throw std::logic_error("reduced Bezoutian has a term off the basis grid: " + B.doubled->format(t.mono));
        }
        gram(ix->second, iy->second) = t.coeff;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!(gram(i, j) == gram(j, i))) throw std::logic_error("Bezoutian Gram matrix is not symmetric");
    return GWClass(F, std::move(gram));
}

} // namespace

GWClass global_a1_degree(const EndoSystem& f) {
    GroebnerBasis G = require_zero_dimensional_gb(f.ideal());
    if (G.is_unit()) return GWClass::empty(f.ring()->field());
    return bezoutian_form(f, G, standard_monomials(G));
}

LocalAlgebraBasis local_algebra_basis(const EndoSystem& f, const Ideal& point) {
    require_same_ring(point.ring(), f.ring());
    Ideal I = f.ideal();
    GroebnerBasis M = groebner_basis(point);
    if (M.is_unit()) throw DomainError("the point ideal is the whole ring");
    for (const auto& g : I.generators()) {
        if (!M.contains(g)) throw DomainError("point not in zero locus");
    }
    Ideal away = saturation(I, point);
    Ideal J = ideal_quotient(I, away);
    GroebnerBasis GJ = require_zero_dimensional_gb(J);
    return {point, GJ.ideal(), standard_monomials(GJ)};
}

GWClass local_a1_degree(const EndoSystem& f, const Ideal& point) {
    LocalAlgebraBasis L = local_algebra_basis(f, point);
    return bezoutian_form(f, groebner_basis(L.local_ideal), L.basis);
}

} // namespace a1deg
