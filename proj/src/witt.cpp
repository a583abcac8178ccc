#include "a1deg/witt.hpp"

#include "a1deg/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace a1deg {

bool is_padic_square(const Rational& d, const Integer& p) {
    Integer s = squarefree_part(d);
    if (p == 2) {
        Integer r = s % 8;
        if (r < 0) r += 8;
        return r == 1;
    }
    if (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) return false;
    return legendre_symbol(s, p) == 1;
}

namespace {

bool same_local_class(const Integer& a, const Integer& b, const Integer& p) { return is_padic_square(Rational(a * b), p); }

bool locally_isotropic(std::size_t rank, const Integer& d, int eps, const Integer& p) {
    switch (rank) {
    case 0:
    case 1: return false;
    case 2: return same_local_class(d, -1, p);
    case 3: return eps == hilbert_symbol(Rational(-1), Rational(-d), p);
    case 4: return !same_local_class(d, 1, p) || eps == hilbert_symbol(Rational(-1), Rational(-1), p);
    default: return true;
    }
}

std::size_t anisotropic_dimension_from(std::size_t rank, Integer d, int eps, const Integer& p) {
    while (rank > 0 && locally_isotropic(rank, d, eps, p)) {
        rank -= 2;
        d = -d;
        eps *= hilbert_symbol(Rational(d), Rational(-1), p);
    }
    return rank;
}

void require_qq(const GWClass& beta) {
    if (beta.field().kind() != FieldKind::QQ) throw DomainError("p-adic invariants need a form over QQ");
}

std::vector<Scalar> sorted(std::vector<Scalar> entries) {
    std::sort(entries.begin(), entries.end(), [](const Scalar& a, const Scalar& b) { return a.compare(b) < 0; });
    return entries;
}

GWClass diagonal_or_empty(const FieldDesc& F, const std::vector<Scalar>& entries) {
    if (entries.empty()) return GWClass::empty(F);
    return make_diagonal_form(F, sorted(entries));
}

int product_of_pairs(const std::vector<Integer>& entries, const Integer& p) {
    int r = 1;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) r *= hilbert_symbol(Rational(entries[i]), Rational(entries[j]), p);
    return r;
}

Integer product(const std::vector<Integer>& v) {
    Integer r = 1;
    for (const auto& x : v) r *= x;
    return r;
}

// Yields squarefree positive integers 1, 2, 3, 5, 6, 7, 10, ...
class SquarefreeCounter {
public:
    Integer next() {
        for (;;) {
            Integer k = current_++;
            if (squarefree_part(Rational(k)) == k) return k;
        }
    }

private:
    Integer current_ = 1;
};

constexpr long kSearchLimit = 200000;

struct RationalTarget {
    std::size_t rank;
    int signature;
    Integer disc;
    std::set<Integer> primes;          // every prime where a target symbol may be -1
    std::map<Integer, int> hasse_witt; // over `primes`
};

int target_at(const RationalTarget& t, const Integer& p) {
    auto it = t.hasse_witt.find(p);
    return it == t.hasse_witt.end() ? 1 : it->second;
}

// Completes f0 by <x, delta*x> with x of the given sign, or returns false if
// no such binary tail exists.
bool complete_with_binary_tail(const RationalTarget& t, const std::vector<Integer>& f0, int x_sign,
                               std::vector<Integer>& out) {
    const Integer d0 = product(f0);
    const Integer delta = squarefree_part(make_rational(t.disc, d0));
    std::set<Integer> primes = t.primes;
    primes.insert(2);
    for (const auto& e : f0)
        for (const auto& p : prime_divisors(e)) primes.insert(p);
    for (const auto& p : prime_divisors(delta)) primes.insert(p);

    // Need (x, -delta)_p = tau_p for every p.
    std::map<Integer, int> tau;
    int tau_product = 1;
    for (const auto& p : primes) {
        int v = target_at(t, p) * product_of_pairs(f0, p) * hilbert_symbol(Rational(d0), Rational(delta), p);
        if (v == -1 && is_padic_square(Rational(-delta), p)) return false;
        tau[p] = v;
        tau_product *= v;
    }
    const int real_symbol = (x_sign < 0 && -delta < 0) ? -1 : 1;
    if (tau_product != real_symbol) return false;

    // x = +-(product of a subset of S) * q for at most one prime q outside S.
    std::vector<Integer> S(primes.begin(), primes.end());
    if (S.size() > 20) throw std::logic_error("too many primes in the binary tail search");
    std::vector<Integer> products;
    for (std::size_t mask = 0; mask < (std::size_t{1} << S.size()); ++mask) {
        Integer v = 1;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (mask >> i & 1) v *= S[i];
        products.push_back(v);
    }
    std::sort(products.begin(), products.end());
    Integer q = 1;
    for (long step = 0; step < kSearchLimit; ++step) {
        for (const auto& v : products) {
            Integer x = v * q * x_sign;
            bool ok = q == 1 || hilbert_symbol(Rational(x), Rational(-delta), q) == 1;
            for (auto it = tau.begin(); ok && it != tau.end(); ++it)
                ok = hilbert_symbol(Rational(x), Rational(-delta), it->first) == it->second;
            if (!ok) continue;
            out = f0;
            out.push_back(x);
            out.push_back(squarefree_part(Rational(x * delta)));
            return true;
        }
        do {
            ++q;
        } while (primes.count(q) || !is_prime(q));
    }
    return false;
}

std::vector<Integer> realize_rational(const RationalTarget& t) {
    const std::size_t m = t.rank;
    const long P = (static_cast<long>(m) + t.signature) / 2;
    const long N = static_cast<long>(m) - P;
    if (m == 1) return {t.disc};
    std::vector<Integer> out;
    if (m == 2) {
        const int x_sign = P == 0 ? -1 : 1;
        if (complete_with_binary_tail(t, {}, x_sign, out)) return out;
        throw std::logic_error("no binary form realizes the required invariants");
    }

    // f0 = (m-3 entries +-1) + <c>, then a binary tail <x, delta*x>.
    int x_sign, c_sign;
    long pos_rest, neg_rest;
    if (P >= 1 && N >= 1) {
        x_sign = 1;
        c_sign = P >= 2 ? 1 : -1;
        pos_rest = P - 1 - (c_sign > 0);
        neg_rest = N - 1 - (c_sign < 0);
    } else if (N == 0) {
        x_sign = c_sign = 1;
        pos_rest = P - 3;
        neg_rest = 0;
    } else {
        x_sign = c_sign = -1;
        pos_rest = 0;
        neg_rest = N - 3;
    }
    std::vector<Integer> base;
    for (long i = 0; i < pos_rest; ++i) base.push_back(1);
    for (long i = 0; i < neg_rest; ++i) base.push_back(-1);

    SquarefreeCounter counter;
    for (long step = 0; step < kSearchLimit; ++step) {
        std::vector<Integer> f0 = base;
        f0.push_back(counter.next() * c_sign);
        if (complete_with_binary_tail(t, f0, x_sign, out)) return out;
    }
    throw std::logic_error("no diagonal form realizes the required invariants");
}

GWClass anisotropic_part_rational(const GWClass& beta) {
    const FieldDesc& F = beta.field();
    const std::size_t m = anisotropic_dimension(beta);
    const std::size_t n = (beta.rank() - m) / 2;
    if (m == 0) return GWClass::empty(F);

    RationalTarget t;
    t.rank = m;
    t.signature = get_signature(beta);
    const Integer d = get_discriminant(beta).rational().get_num();
    t.disc = n % 2 ? Integer(-d) : d;
    for (const auto& p : relevant_primes(beta)) t.primes.insert(p);
    for (const auto& p : prime_divisors(t.disc)) t.primes.insert(p);
    for (const auto& p : t.primes) {
        int v = hasse_witt_invariant(beta, p);
        if ((n * (n - 1) / 2) % 2) v *= hilbert_symbol(Rational(-1), Rational(-1), p);
        v *= hilbert_symbol(Rational(t.disc), Rational(n % 2 ? -1 : 1), p);
        t.hasse_witt[p] = v;
    }

    std::vector<Scalar> entries;
    for (const auto& e : realize_rational(t)) entries.push_back(Scalar(Rational(e)));
    GWClass result = diagonal_or_empty(F, entries);

    GWClass rebuilt = n ? add_gw(result, make_hyperbolic_form(F, 2 * n)) : result;
    if (!(invariants(rebuilt) == invariants(beta)) || anisotropic_dimension(result) != m) {
        throw std::logic_error("anisotropic part failed its postcondition for " + beta.to_string());
    }
    return result;
}

} // namespace

std::size_t anisotropic_dimension_qp(const GWClass& beta, const Integer& p) {
    require_qq(beta);
    if (!is_prime(p)) throw DomainError(to_string(p) + " is not a prime");
    if (beta.rank() == 0) return 0;
    const Integer d = get_discriminant(beta).rational().get_num();
    return anisotropic_dimension_from(beta.rank(), d, hasse_witt_invariant(beta, p), p);
}

std::size_t anisotropic_dimension(const GWClass& beta) {
    const std::size_t r = beta.rank();
    if (r == 0) return 0;
    switch (beta.field().kind()) {
    case FieldKind::CC: return r % 2;
    case FieldKind::RR: return static_cast<std::size_t>(std::abs(get_signature(beta)));
    case FieldKind::GF: {
        if (r % 2) return 1;
        const FieldDesc& F = beta.field();
        Scalar split = (r / 2) % 2 ? -Scalar::one(F) : Scalar::one(F);
        return get_discriminant(beta) == square_class_representative(split, F) ? 0 : 2;
    }
    case FieldKind::QQ: {
        std::size_t dim = static_cast<std::size_t>(std::abs(get_signature(beta)));
        for (const auto& p : relevant_primes(beta)) dim = std::max(dim, anisotropic_dimension_qp(beta, p));
        return dim;
    }
    }
    return r;
}

std::size_t witt_index(const GWClass& beta) { return (beta.rank() - anisotropic_dimension(beta)) / 2; }

bool is_anisotropic(const GWClass& beta) { return anisotropic_dimension(beta) == beta.rank(); }

bool is_isotropic(const GWClass& beta) { return beta.rank() > 0 && !is_anisotropic(beta); }

GWClass anisotropic_part(const GWClass& beta) {
    const FieldDesc& F = beta.field();
    const std::size_t m = anisotropic_dimension(beta);
    std::vector<Scalar> entries;
    switch (F.kind()) {
    case FieldKind::CC:
        if (m) entries.push_back(Scalar::one(F));
        break;
    case FieldKind::RR: {
        const int s = get_signature(beta);
        for (std::size_t i = 0; i < m; ++i) entries.push_back(Scalar(Rational(s > 0 ? 1 : -1)));
        break;
    }
    case FieldKind::GF: {
        const std::size_t n = (beta.rank() - m) / 2;
        Scalar da = get_discriminant(beta);
        if (n % 2) da = square_class_representative(-da, F);
        if (m == 1) entries.push_back(da);
        if (m == 2) {
            entries.push_back(Scalar::one(F));
            entries.push_back(da);
        }
        break;
    }
    case FieldKind::QQ: return anisotropic_part_rational(beta);
    }
    return diagonal_or_empty(F, entries);
}

DecompositionReport sum_decomposition(const GWClass& beta) {
    GWClass part = anisotropic_part(beta);
    const std::size_t n = (beta.rank() - part.rank()) / 2;
    std::vector<std::string> pieces;
    if (n) pieces.push_back(std::to_string(n) + "H");
    for (std::size_t i = 0; i < part.rank(); ++i) pieces.push_back("<" + part.gram()(i, i).to_string() + ">");
    std::string display;
    for (const auto& piece : pieces) display += (display.empty() ? "" : " + ") + piece;
    if (display.empty()) display = "0";
    return {std::move(part), n, std::move(display)};
}

} // namespace a1deg
