#include "a1deg/error.hpp"
#include "a1deg/forms.hpp"
#include "a1deg/parse.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace a1deg;

namespace {

const FieldDesc Q = FieldDesc::rationals();

const std::vector<long> kCorpus = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10, 15, -15, 30, -30};

Matrix<Scalar> congruent(const Matrix<Scalar>& G, const Matrix<Scalar>& P, const FieldDesc& F) {
    return P.transpose().multiply(G, Scalar::zero(F)).multiply(P, Scalar::zero(F));
}

void check_witness(const GWClass& beta) {
    Diagonalization d = diagonalize(beta);
    CHECK(congruent(beta.gram(), d.change_of_basis, beta.field()) == d.diagonal.gram());
}

// Random invertible integer matrix: unit upper triangular times a permutation.
Matrix<Scalar> random_invertible(std::size_t n, const FieldDesc& F, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    Matrix<Scalar> P = Matrix<Scalar>::identity(n, Scalar::zero(F), Scalar::one(F));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) P(i, j) = Scalar::from_integer(F, d(rng));
    for (std::size_t i = n; i-- > 1;) P.swap_cols(i, std::uniform_int_distribution<std::size_t>(0, i)(rng));
    return P;
}

GWClass random_form(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-30, 30);
    for (;;) {
        Matrix<Scalar> m(n, n, Scalar::zero(Q));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Scalar(Rational(d(rng)));
        if (!determinant(m, Q).is_zero()) return GWClass(Q, m);
    }
}

}

TEST_SUITE("forms") {

TEST_CASE("construction validates the Gram matrix") {
    CHECK_NOTHROW(make_gw_class(integer_matrix(Q, {{1, 3}, {3, 7}}), Q));
    CHECK_THROWS_AS(make_gw_class(integer_matrix(Q, {{1, 2}, {3, 4}}), Q), DomainError);
    CHECK_THROWS_WITH_AS(make_gw_class(integer_matrix(Q, {{1, 1}, {1, 1}}), Q), "degenerate form", DomainError);
    CHECK_THROWS_AS(make_gw_class(Matrix<Scalar>(0, 0), Q), DomainError);
    CHECK_THROWS_AS(make_diagonal_form(Q, {1, 0}), DomainError);
    CHECK_THROWS_AS(make_hyperbolic_form(Q, 3), DomainError);
}

TEST_CASE("diagonalization") {
    GWClass b = make_gw_class(integer_matrix(Q, {{1, 3}, {3, 7}}), Q);
    CHECK(diagonalize(b).diagonal == make_diagonal_form(Q, {1, -2}));
    check_witness(b);
    GWClass d = make_diagonal_form(Q, {2, -3, 5});
    CHECK(diagonalize(d).diagonal == d);
    CHECK(diagonalize(d).change_of_basis == Matrix<Scalar>::identity(3, Scalar::zero(Q), Scalar::one(Q)));
    GWClass h = make_gw_class(integer_matrix(Q, {{0, 1}, {1, 0}}), Q);
    CHECK(diagonalize(h).diagonal == make_diagonal_form(Q, {1, -1}));
    check_witness(h);
    check_witness(make_gw_class(integer_matrix(Q, {{0, 0, 1}, {0, 2, 0}, {1, 0, 0}}), Q));
    FieldDesc F27 = FieldDesc::finite(3, 3);
    check_witness(make_gw_class(integer_matrix(F27, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), F27));
}

TEST_CASE("the congruence witness holds on random forms") {
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) check_witness(random_form(1 + i % 5, rng));
}

TEST_CASE("ring operations") {
    GWClass s = add_gw(make_diagonal_form(Q, {1}), make_diagonal_form(Q, {-1}));
    CHECK(s.gram() == integer_matrix(Q, {{1, 0}, {0, -1}}));
    CHECK(multiply_gw(make_diagonal_form(Q, {3}), make_diagonal_form(Q, {5})) == make_diagonal_form(Q, {15}));
    CHECK(multiply_gw(make_hyperbolic_form(Q), make_diagonal_form(Q, {2, 3})).rank() == 4);
    CHECK_THROWS_AS(add_gw(make_diagonal_form(Q, {1}), make_diagonal_form(FieldDesc::reals(), {1})), DomainError);
}

TEST_CASE("standard forms") {
    FieldDesc F13 = FieldDesc::finite(13);
    CHECK(make_diagonal_form(F13, {2, 6}).gram() == integer_matrix(F13, {{2, 0}, {0, 6}}));
    CHECK(make_hyperbolic_form(Q, 2) == make_diagonal_form(Q, {1, -1}));
    CHECK(make_hyperbolic_form(Q, 4).rank() == 4);
    for (long a : {2, -3, 5})
        for (long b : {3, -7})
            CHECK(make_pfister_form(Q, {Scalar(Rational(a)), Scalar(Rational(b))}) ==
                  make_diagonal_form(Q, {1, -b, -a, a * b}));
    CHECK(make_pfister_form(Q, {Scalar(Rational(2)), Scalar(Rational(3)), Scalar(Rational(5))}).rank() == 8);
}

TEST_CASE("rank, signature and discriminant") {
    CHECK(get_signature(make_diagonal_form(FieldDesc::reals(), {3, -4, 7})) == 1);
    CHECK(get_discriminant(make_gw_class(integer_matrix(Q, {{1, 3}, {3, 7}}), Q)) == Scalar(Rational(-2)));
    CHECK(get_rank(make_hyperbolic_form(Q, 2)) == 2);
    CHECK(get_discriminant(make_diagonal_form(FieldDesc::reals(), {3, -4, 7})) == Scalar(Rational(-1)));
    CHECK(get_discriminant(make_diagonal_form(FieldDesc::complexes(), {3, -4, 7})) == Scalar(Rational(1)));
    FieldDesc F13 = FieldDesc::finite(13);
    CHECK(get_discriminant(make_diagonal_form(F13, {2, 6})) == Scalar::one(F13));
    CHECK(get_discriminant(make_diagonal_form(F13, {2})) == Scalar::from_integer(F13, 2));
    CHECK_THROWS_WITH_AS(get_signature(make_diagonal_form(F13, {2})), "signature undefined over this field", DomainError);
    CHECK_THROWS_AS(get_signature(make_diagonal_form(FieldDesc::complexes(), {2})), DomainError);
}

TEST_CASE("signature bounds on random forms") {
    std::mt19937 rng(19);
    for (int i = 0; i < 60; ++i) {
        GWClass b = random_form(1 + i % 6, rng);
        int s = get_signature(b);
        CHECK(std::abs(s) <= static_cast<int>(b.rank()));
        CHECK((static_cast<int>(b.rank()) - s) % 2 == 0);
    }
}

TEST_CASE("Hilbert symbol examples") {
    for (long b : kCorpus)
        for (long p : {2, 3, 5, 7}) CHECK(hilbert_symbol(1, b, p) == 1);
    CHECK(hilbert_symbol(2, 3, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(make_rational(2, 9), make_rational(12, 5), 3) == hilbert_symbol(2, 15, 3));
    CHECK_THROWS_AS(hilbert_symbol(0, 3, 2), DomainError);
    CHECK_THROWS_AS(hilbert_symbol(2, 3, 4), DomainError);
    CHECK(real_hilbert_symbol(-1, -2) == -1);
    CHECK(real_hilbert_symbol(-1, 2) == 1);
}

TEST_CASE("closed-form Hilbert symbol agrees with the primitive-solution search") {
    for (long a : kCorpus)
        for (long b : kCorpus)
            for (long p : {2, 3, 5, 7}) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(p);
                CHECK(hilbert_symbol(a, b, p) == oracle::hilbert_by_search(a, b, p));
            }
}

TEST_CASE("Hilbert symbol symmetry, bimultiplicativity and product formula") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-200, 200);
    for (int i = 0; i < 300; ++i) {
        long a = d(rng), a2 = d(rng), b = d(rng);
        if (!a || !a2 || !b) continue;
        for (long p : {2, 3, 5, 7, 11}) {
            CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
            CHECK(hilbert_symbol(a * a2, b, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a2, b, p));
        }
        int prod = real_hilbert_symbol(a, b);
        for (const auto& p : prime_divisors(Integer(2 * a * b))) prod *= hilbert_symbol(a, b, p);
        CHECK(prod == 1);
    }
}

TEST_CASE("Hasse-Witt invariants") {
    for (long p : {2, 3, 5, 7}) CHECK(hasse_witt_invariant(make_diagonal_form(Q, {1, 1, 1, 1}), p) == 1);
    CHECK(hasse_witt_invariant(make_diagonal_form(Q, {-1, -1}), 2) == -1);
    CHECK(hasse_witt_invariant(make_diagonal_form(Q, {2, 3}), 5) == 1);
    CHECK(hasse_witt_invariant(make_diagonal_form(Q, {7}), 7) == 1);
    CHECK_THROWS_AS(hasse_witt_invariant(make_diagonal_form(FieldDesc::reals(), {1, 1}), 2), DomainError);
}

TEST_CASE("invariant bundle keys") {
    InvariantBundle inv = invariants(make_diagonal_form(Q, {3, -3, 2, 5, 1, -9}));
    CHECK(inv.rank == 6);
    CHECK(*inv.signature == 2);
    CHECK(inv.discriminant == Scalar(Rational(10)));
    std::map<Integer, int> expected{{Integer(2), 1}, {Integer(5), -1}};
    CHECK(inv.hasse_witt == expected);
    // hasse_witt keys: 2, odd primes with odd valuation in d, odd primes with symbol -1
    std::mt19937 rng(29);
    for (int i = 0; i < 40; ++i) {
        GWClass b = random_form(1 + i % 5, rng);
        InvariantBundle v = invariants(b);
        const Integer d = v.discriminant.rational().get_num();
        for (const auto& p : relevant_primes(b)) {
            int eps = hasse_witt_invariant(b, p);
            bool keyed = p == 2 || mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) || eps == -1;
            CHECK(v.hasse_witt.count(p) == (keyed ? 1u : 0u));
            if (keyed) CHECK(v.hasse_witt.at(p) == eps);
        }
    }
}

TEST_CASE("invariants of direct sums") {
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        GWClass a = random_form(1 + i % 3, rng), b = random_form(1 + (i / 3) % 3, rng);
        GWClass s = add_gw(a, b);
        CHECK(get_rank(s) == get_rank(a) + get_rank(b));
        CHECK(get_signature(s) == get_signature(a) + get_signature(b));
        Rational da = get_discriminant(a).rational(), db = get_discriminant(b).rational();
        CHECK(get_discriminant(s) == Scalar(Rational(squarefree_part(da * db))));
        for (long p : {2, 3, 5, 7, 11, 13}) {
            CHECK(hasse_witt_invariant(s, p) ==
                  hasse_witt_invariant(a, p) * hasse_witt_invariant(b, p) * hilbert_symbol(da, db, p));
        }
    }
}

TEST_CASE("isomorphism testing") {
    CHECK(is_isomorphic_form(make_diagonal_form(Q, {1}), make_diagonal_form(Q, {4})));
    CHECK_FALSE(is_isomorphic_form(make_diagonal_form(Q, {1}), make_diagonal_form(Q, {2})));
    FieldDesc F13 = FieldDesc::finite(13);
    CHECK(is_isomorphic_form(make_diagonal_form(F13, {2}), make_diagonal_form(F13, {6})));
    CHECK(is_isomorphic_form(make_diagonal_form(Q, {1, 1}), make_diagonal_form(Q, {2, 2})));
    CHECK_FALSE(is_isomorphic_form(make_diagonal_form(Q, {1, 1}), make_diagonal_form(Q, {3, 3})));
    CHECK(is_isomorphic_form(make_diagonal_form(FieldDesc::complexes(), {1, 5}), make_diagonal_form(FieldDesc::complexes(), {-2, 3})));
    CHECK_THROWS_AS(is_isomorphic_form(make_diagonal_form(Q, {1}), make_diagonal_form(F13, {1})), DomainError);
}

TEST_CASE("isomorphism is invariant under congruence and is an equivalence") {
    std::mt19937 rng(37);
    std::vector<GWClass> pool;
    for (int i = 0; i < 12; ++i) {
        GWClass b = random_form(1 + i % 4, rng);
        GWClass c(Q, congruent(b.gram(), random_invertible(b.rank(), Q, rng), Q));
        CHECK(is_isomorphic_form(b, c));
        CHECK(is_isomorphic_form(c, b));
        CHECK(is_isomorphic_form(b, b));
        pool.push_back(b);
        pool.push_back(c);
    }
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                if (is_isomorphic_form(a, b) && is_isomorphic_form(b, c)) CHECK(is_isomorphic_form(a, c));
}

TEST_CASE("base change") {
    GWClass b = make_diagonal_form(Q, {1, -2});
    GWClass r = base_change(b, FieldDesc::reals());
    CHECK(get_rank(r) == 2);
    CHECK(get_signature(r) == 0);
    CHECK(get_rank(base_change(b, FieldDesc::complexes())) == 2);
    CHECK(get_signature(base_change(make_diagonal_form(Q, {2, 5}), FieldDesc::reals())) == 2);
    CHECK_THROWS_AS(base_change(r, FieldDesc::complexes()), DomainError);
    CHECK_THROWS_AS(base_change(b, FieldDesc::finite(5)), DomainError);
}

TEST_CASE("matrix text round trip") {
    GWClass b = make_gw_class(parse_matrix("[[1, 3/2], [3/2, -7]]", Q), Q);
    CHECK(b.to_string() == "[[1,3/2],[3/2,-7]]");
    CHECK(make_gw_class(parse_matrix(b.to_string(), Q), Q) == b);
    CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]", Q), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1.5]]", Q), ParseError);
}

}
