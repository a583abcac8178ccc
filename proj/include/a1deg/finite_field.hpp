#pragma once

// Finite fields GF(p^k), p odd. Elements are polynomials of degree < k over
// Z/p, packed into one machine word as base-p digits (digit i is the
// coefficient of a^i, where a is the class of t modulo the field modulus).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace a1deg {

class GaloisField {
public:
    /// `modulus` is monic of degree k, coefficients listed from t^0 up to t^k.
    /// Throws DomainError for p = 2, non-prime p, q >= 2^62 or a reducible modulus.
    GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// Image of an integer under Z -> Z/p -> GF(q).
    std::uint64_t from_int(long long n) const;
    std::uint64_t from_digits(const std::vector<std::uint64_t>& digits) const;
    std::vector<std::uint64_t> digits(std::uint64_t a) const;

    bool is_square(std::uint64_t a) const;
    /// Tonelli-Shanks; requires is_square(a).
    std::uint64_t sqrt(std::uint64_t a) const;
    /// Smallest packed value that is a nonsquare; the fixed nonsquare representative.
    std::uint64_t smallest_nonsquare() const { return nonsquare_; }

    /// "3" for prime fields, "a^2+2*a+1" style for extensions.
    std::string format(std::uint64_t a) const;
    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    bool operator==(const GaloisField& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

private:
    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t nonsquare_ = 0;
    std::uint64_t two_adic_exponent_ = 0; // q - 1 = 2^s * odd
    std::uint64_t odd_part_ = 0;
};

/// Monic irreducible degree-k polynomial over Z/p with the smallest packed
/// value sum c_i p^i, i.e. lexicographically smallest reading from t^(k-1) down.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k);

/// Rabin's irreducibility test over Z/p; coefficients from t^0 up.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p);

} // namespace a1deg
