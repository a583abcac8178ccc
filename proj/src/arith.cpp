#include "a1deg/arith.hpp"

#include "a1deg/error.hpp"

#include <algorithm>
#include <map>

namespace a1deg {

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;

void require_prime(const Integer& p) {
    if (!is_prime(p)) throw DomainError(to_string(p) + " is not a prime");
}

Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    // Deterministic sequence of polynomial constants keeps results reproducible.
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto step = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer m = abs(n);
    thread_local std::map<Integer, std::vector<std::pair<Integer, unsigned>>> cache;
    if (m > Integer(kTrialDivisionBound) * kTrialDivisionBound) {
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    const Integer key = m;
    std::map<Integer, unsigned> found;
    for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++found[Integer(p)];
            m /= p;
        }
    }
    if (m > 1) {
        if (m <= Integer(kTrialDivisionBound) * kTrialDivisionBound) {
            ++found[m];
        } else {
            factor_large(m, found);
        }
    }
    std::vector<std::pair<Integer, unsigned>> result(found.begin(), found.end());
    if (key > Integer(kTrialDivisionBound) * kTrialDivisionBound) {
        if (cache.size() >= 4096) cache.clear();
        cache.emplace(key, result);
    }
    return result;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> primes;
    for (auto& [p, e] : factor(n)) primes.push_back(p);
    return primes;
}

Integer squarefree_part(const Rational& r) {
    if (r == 0) throw DomainError("zero has no square class");
    // r = n/d is in the square class of n*d; n and d are coprime.
    Integer s = 1;
    for (const Integer& part : {Integer(r.get_num()), Integer(r.get_den())}) {
        for (auto& [p, e] : factor(part)) {
            if (e % 2 == 1) s *= p;
        }
    }
    return sgn(r) < 0 ? Integer(-s) : s;
}

long padic_valuation(const Rational& r, const Integer& p) {
    if (r == 0) throw DomainError("valuation of zero is undefined");
    require_prime(p);
    auto val = [&](Integer v) {
        long k = 0;
        v = abs(v);
        while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
            v /= p;
            ++k;
        }
        return k;
    };
    return val(r.get_num()) - val(r.get_den());
}

int legendre_symbol(const Integer& a, const Integer& p) {
    Integer residue = a % p;
    if (residue < 0) residue += p;
    if (residue == 0) return 0;
    Integer e = (p - 1) / 2, result;
    mpz_powm(result.get_mpz_t(), residue.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return result == 1 ? 1 : -1;
}

bool is_rational_square(const Rational& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& r) {
    if (!is_rational_square(r)) throw DomainError(to_string(r) + " is not a rational square");
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
    return make_rational(num, den);
}

} // namespace a1deg
