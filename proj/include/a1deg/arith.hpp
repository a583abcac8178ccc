#pragma once

// Exact scalar arithmetic over the integers and rationals: factorization,
// square classes, p-adic valuations and Legendre symbols.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace a1deg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational; throws DomainError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0), primes ascending.
/// Trial division up to 10^6, Pollard-Brent rho above that.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

/// Distinct primes dividing |n|, ascending. Empty for n = +-1.
std::vector<Integer> prime_divisors(const Integer& n);

/// The squarefree integer s with r = s * t^2, t rational; sign(s) = sign(r).
Integer squarefree_part(const Rational& r);

/// nu_p(numerator) - nu_p(denominator).
long padic_valuation(const Rational& r, const Integer& p);

/// Euler's criterion a^((p-1)/2) mod p, mapped to {-1, 0, 1}.
int legendre_symbol(const Integer& a, const Integer& p);

/// True iff r is the square of a rational.
bool is_rational_square(const Rational& r);

/// Exact square root of a perfect rational square.
Rational rational_sqrt(const Rational& r);

} // namespace a1deg
