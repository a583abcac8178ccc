#include "a1deg/forms.hpp"

#include "a1deg/error.hpp"

#include <algorithm>
#include <set>

namespace a1deg {

namespace {

void require_same_field(const GWClass& a, const GWClass& b) {
    if (!(a.field() == b.field())) {
        throw DomainError("forms over different fields: " + a.field().name() + " and " + b.field().name());
    }
}

} // namespace

Scalar determinant(const Matrix<Scalar>& M, const FieldDesc& F) {
    if (!M.is_square()) throw DomainError("determinant of a non-square matrix");
    Matrix<Scalar> A = M;
    const std::size_t n = A.rows();
    Scalar det = Scalar::one(F);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && A(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return Scalar::zero(F);
        if (pivot != c) {
            A.swap_rows(pivot, c);
            det = -det;
        }
        det *= A(c, c);
        Scalar inv = A(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (A(r, c).is_zero()) continue;
            Scalar factor = A(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) A(r, k) -= factor * A(c, k);
        }
    }
    return det;
}

GWClass::GWClass(FieldDesc F, Matrix<Scalar> gram) : field_(std::move(F)), gram_(std::move(gram)) {
    if (!gram_.is_square()) throw DomainError("Gram matrix must be square");
    if (gram_.rows() == 0) throw DomainError("Gram matrix must be nonempty");
    if (field_.is_finite() && field_.galois()->characteristic() == 2) throw DomainError("characteristic 2 unsupported");
    const std::size_t n = gram_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!belongs_to(gram_(i, j), field_)) throw DomainError("Gram entry is not an element of " + field_.name());
            if (j > i && !(gram_(i, j) == gram_(j, i))) throw DomainError("Gram matrix is not symmetric");
        }
    }
    if (determinant(gram_, field_).is_zero()) throw DomainError("degenerate form");
}

GWClass GWClass::empty(FieldDesc F) { return GWClass(std::move(F), Matrix<Scalar>(0, 0), true); }

std::string GWClass::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rank(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < rank(); ++j) out += (j ? "," : "") + gram_(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

Matrix<Scalar> integer_matrix(const FieldDesc& F, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    Matrix<Scalar> m(r, c, Scalar::zero(F));
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DomainError("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Scalar::from_integer(F, v);
        ++i;
    }
    return m;
}

GWClass make_gw_class(const Matrix<Scalar>& M, const FieldDesc& F) { return GWClass(F, M); }

GWClass make_diagonal_form(const FieldDesc& F, const std::vector<Scalar>& entries) {
    Matrix<Scalar> m(entries.size(), entries.size(), Scalar::zero(F));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].is_zero()) throw DomainError("diagonal entries must be nonzero");
        m(i, i) = entries[i];
    }
    return GWClass(F, std::move(m));
}

GWClass make_diagonal_form(const FieldDesc& F, std::initializer_list<long> entries) {
    std::vector<Scalar> s;
    for (long v : entries) s.push_back(Scalar::from_integer(F, v));
    return make_diagonal_form(F, s);
}

GWClass make_hyperbolic_form(const FieldDesc& F, std::size_t rank) {
    if (rank == 0 || rank % 2 != 0) throw DomainError("hyperbolic forms have even positive rank");
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < rank / 2; ++i) {
        entries.push_back(Scalar::one(F));
        entries.push_back(-Scalar::one(F));
    }
    return make_diagonal_form(F, entries);
}

GWClass make_pfister_form(const FieldDesc& F, const std::vector<Scalar>& entries) {
    if (entries.empty()) throw DomainError("Pfister forms need at least one entry");
    std::optional<GWClass> acc;
    for (const auto& a : entries) {
        if (a.is_zero()) throw DomainError("Pfister entries must be nonzero");
        GWClass factor = make_diagonal_form(F, {Scalar::one(F), -a});
        acc = acc ? multiply_gw(*acc, factor) : factor;
    }
    return *acc;
}

GWClass add_gw(const GWClass& a, const GWClass& b) {
    require_same_field(a, b);
    const std::size_t n = a.rank(), m = b.rank();
    if (n + m == 0) return GWClass::empty(a.field());
    Matrix<Scalar> g(n + m, n + m, Scalar::zero(a.field()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
    return GWClass(a.field(), std::move(g));
}

GWClass multiply_gw(const GWClass& a, const GWClass& b) {
    require_same_field(a, b);
    const std::size_t n = a.rank(), m = b.rank();
    if (n * m == 0) return GWClass::empty(a.field());
    Matrix<Scalar> g(n * m, n * m, Scalar::zero(a.field()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) g(i * m + k, j * m + l) = a.gram()(i, j) * b.gram()(k, l);
    return GWClass(a.field(), std::move(g));
}

Scalar square_class_representative(const Scalar& a, const FieldDesc& F) {
    if (a.is_zero()) throw DomainError("zero has no square class");
    if (F.has_rational_elements()) return Scalar(Rational(squarefree_part(a.rational())));
    const auto& gf = F.galois();
    return Scalar(FiniteFieldElement{gf, gf->is_square(a.finite().value) ? 1 : gf->smallest_nonsquare()});
}

namespace {

// Scalar s with a = rep * s^2.
Scalar square_root_of_ratio(const Scalar& a, const Scalar& rep) {
    Scalar ratio = a / rep;
    if (ratio.is_rational()) return Scalar(rational_sqrt(ratio.rational()));
    const auto& e = ratio.finite();
    return Scalar(FiniteFieldElement{e.field, e.field->sqrt(e.value)});
}

} // namespace

Diagonalization diagonalize(const GWClass& beta) {
    const FieldDesc& F = beta.field();
    const std::size_t n = beta.rank();
    Matrix<Scalar> A = beta.gram();
    Matrix<Scalar> P = Matrix<Scalar>::identity(n, Scalar::zero(F), Scalar::one(F));

    // Basis operations act on rows and columns of A and on columns of P.
    auto add_multiple = [&](std::size_t target, std::size_t source, const Scalar& c) {
        // e_target <- e_target + c * e_source
        for (std::size_t k = 0; k < n; ++k) A(target, k) += c * A(source, k);
        for (std::size_t k = 0; k < n; ++k) A(k, target) += c * A(k, source);
        for (std::size_t k = 0; k < n; ++k) P(k, target) += c * P(k, source);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (A(i, i).is_zero()) {
            std::size_t j = i + 1;
            while (j < n && A(j, j).is_zero()) ++j;
            if (j < n) {
                A.swap_rows(i, j);
                A.swap_cols(i, j);
                P.swap_cols(i, j);
            } else {
                j = i + 1;
                while (j < n && A(i, j).is_zero()) ++j;
                if (j == n) throw DomainError("degenerate form");
                // With A(j,j) = 0, A(i,i) becomes 2 c A(i,j) = 1 (odd characteristic).
                add_multiple(i, j, (Scalar::from_integer(F, 2) * A(i, j)).inverse());
            }
        }
        Scalar pivot_inv = A(i, i).inverse();
        for (std::size_t j = i + 1; j < n; ++j) {
            if (A(i, j).is_zero()) continue;
            add_multiple(j, i, -(A(i, j) * pivot_inv));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        Scalar rep = square_class_representative(A(i, i), F);
        Scalar root = square_root_of_ratio(A(i, i), rep);
        Scalar inv = root.inverse();
        for (std::size_t k = 0; k < n; ++k) P(k, i) *= inv;
        A(i, i) = rep;
    }
    Matrix<Scalar> D(n, n, Scalar::zero(F));
    for (std::size_t i = 0; i < n; ++i) D(i, i) = A(i, i);
    if (n == 0) return {GWClass::empty(F), P};
    return {GWClass(F, std::move(D)), std::move(P)};
}

std::vector<Scalar> diagonal_entries(const GWClass& beta) {
    Diagonalization d = diagonalize(beta);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < beta.rank(); ++i) out.push_back(d.diagonal.gram()(i, i));
    return out;
}

std::size_t get_rank(const GWClass& beta) { return beta.rank(); }

int get_signature(const GWClass& beta) {
    const FieldKind k = beta.field().kind();
    if (k != FieldKind::QQ && k != FieldKind::RR) throw DomainError("signature undefined over this field");
    int sig = 0;
    for (const auto& d : diagonal_entries(beta)) sig += d.sign();
    return sig;
}

Scalar get_discriminant(const GWClass& beta) {
    const FieldDesc& F = beta.field();
    Scalar det = determinant(beta.gram(), F);
    switch (F.kind()) {
    case FieldKind::CC: return Scalar(Rational(1));
    case FieldKind::RR: return Scalar(Rational(det.sign()));
    default: return square_class_representative(det, F);
    }
}

int real_hilbert_symbol(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
    return (a < 0 && b < 0) ? -1 : 1;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
    if (!is_prime(p)) throw DomainError(to_string(p) + " is not a prime");
    // a = p^alpha u with u a p-adic unit; only alpha mod 2 and u mod squares matter.
    auto split = [&p](const Rational& r) {
        Integer n = r.get_num() * r.get_den();
        long k = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
        return std::pair<long, Integer>(k % 2, n);
    };
    const auto [alpha, u] = split(a);
    const auto [beta, v] = split(b);
    if (p != 2) {
        int result = 1;
        Integer half = (p - 1) / 2;
        if (alpha && beta && mpz_odd_p(half.get_mpz_t())) result = -result;
        if (beta) result *= legendre_symbol(u, p);
        if (alpha) result *= legendre_symbol(v, p);
        return result;
    }
    auto mod8 = [](const Integer& x) {
        Integer r = x % 8;
        if (r < 0) r += 8;
        return static_cast<int>(r.get_si());
    };
    const int u8 = mod8(u), v8 = mod8(v);
    auto eps = [](int x) { return ((x - 1) / 2) % 2; };
    auto omega = [](int x) { return ((x * x - 1) / 8) % 2; };
    int exponent = eps(u8) * eps(v8) + static_cast<int>(alpha) * omega(v8) + static_cast<int>(beta) * omega(u8);
    return exponent % 2 ? -1 : 1;
}

int hasse_witt_invariant(const GWClass& beta, const Integer& p) {
    if (beta.field().kind() != FieldKind::QQ) throw DomainError("Hasse-Witt invariants are only defined over QQ here");
    auto d = diagonal_entries(beta);
    int result = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) result *= hilbert_symbol(d[i].rational(), d[j].rational(), p);
    return result;
}

std::vector<Integer> relevant_primes(const GWClass& beta) {
    std::set<Integer> primes{Integer(2)};
    for (const auto& d : diagonal_entries(beta)) {
        for (const auto& p : prime_divisors(squarefree_part(d.rational()))) primes.insert(p);
    }
    return {primes.begin(), primes.end()};
}

InvariantBundle invariants(const GWClass& beta) {
    InvariantBundle b;
    const FieldKind k = beta.field().kind();
    b.rank = beta.rank();
    if (k == FieldKind::QQ || k == FieldKind::RR) b.signature = get_signature(beta);
    b.discriminant = beta.rank() ? get_discriminant(beta) : Scalar::one(beta.field());
    if (k == FieldKind::QQ && beta.rank()) {
        const Integer d = b.discriminant.rational().get_num();
        auto diag = diagonal_entries(beta);
        for (const auto& p : relevant_primes(beta)) {
            int eps = 1;
            for (std::size_t i = 0; i < diag.size(); ++i)
                for (std::size_t j = i + 1; j < diag.size(); ++j)
                    eps *= hilbert_symbol(diag[i].rational(), diag[j].rational(), p);
            bool odd_valuation = mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t());
            if (p == 2 || odd_valuation || eps == -1) b.hasse_witt[p] = eps;
        }
    } else if (k == FieldKind::QQ) {
        b.hasse_witt[Integer(2)] = 1;
    }
    return b;
}

bool is_isomorphic_form(const GWClass& a, const GWClass& b) {
    require_same_field(a, b);
    if (a.rank() != b.rank()) return false;
    if (a.rank() == 0) return true;
    switch (a.field().kind()) {
    case FieldKind::CC: return true;
    case FieldKind::RR: return get_signature(a) == get_signature(b);
    case FieldKind::GF: return get_discriminant(a) == get_discriminant(b);
    case FieldKind::QQ: return invariants(a) == invariants(b);
    }
    return false;
}

GWClass base_change(const GWClass& beta, const FieldDesc& target) {
    if (beta.field().kind() != FieldKind::QQ ||
        (target.kind() != FieldKind::RR && target.kind() != FieldKind::CC)) {
        throw DomainError("base change is only supported from QQ to RR or CC");
    }
    if (beta.rank() == 0) return GWClass::empty(target);
    return GWClass(target, beta.gram());
}

} // namespace a1deg
