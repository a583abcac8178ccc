#include "a1deg/finite_field.hpp"

#include "a1deg/arith.hpp"
#include "a1deg/error.hpp"

#include <limits>

namespace a1deg {

namespace {

using Coeffs = std::vector<std::uint64_t>;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

void trim(Coeffs& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g over Z/p; g nonzero.
Coeffs poly_rem(Coeffs f, const Coeffs& g, std::uint64_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint64_t lead_inv = mod_inv(g.back(), p);
    while (f.size() >= g.size()) {
        std::uint64_t c = mod_mul(f.back(), lead_inv, p);
        std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = (f[shift + i] + p - mod_mul(c, g[i], p)) % p;
        }
        trim(f);
    }
    return f;
}

Coeffs poly_mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + mod_mul(a[i], b[j], p)) % p;
        }
    }
    return poly_rem(std::move(prod), m, p);
}

Coeffs poly_pow_mod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p) {
    Coeffs result{1};
    base = poly_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) result = poly_mul_mod(result, base, m, p);
        base = poly_mul_mod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^i) mod f for i = 0..k.
std::vector<Coeffs> frobenius_powers(const Coeffs& f, std::uint64_t p, unsigned k) {
    std::vector<Coeffs> out;
    Coeffs x = poly_rem({0, 1}, f, p);
    out.push_back(x);
    for (unsigned i = 1; i <= k; ++i) out.push_back(poly_pow_mod(out.back(), p, f, p));
    return out;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
    Coeffs f = poly;
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    auto frob = frobenius_powers(f, p, k);
    Coeffs x = poly_rem({0, 1}, f, p);
    if (frob[k] != x) return false;
    for (const Integer& r : prime_divisors(Integer(k))) {
        unsigned i = k / static_cast<unsigned>(r.get_ui());
        Coeffs diff = frob[i];
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        Coeffs g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k) {
    if (k == 0) throw DomainError("extension degree must be positive");
    if (k == 1) return {0, 1};
    // Enumerate the lower coefficients as a base-p counter; the counter value is
    // the packed value sum c_i p^i, so the first hit is the smallest.
    Coeffs f(k + 1, 0);
    f[k] = 1;
    for (;;) {
        if (f[0] != 0 && is_irreducible_mod_p(f, p)) return f;
        unsigned i = 0;
        while (i < k && ++f[i] == p) f[i++] = 0;
        if (i == k) throw DomainError("no irreducible polynomial found");
    }
}

GaloisField::GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
    if (p == 2) throw DomainError("characteristic 2 unsupported");
    if (!is_prime(Integer(static_cast<unsigned long>(p)))) {
        throw DomainError(std::to_string(p) + " is not a prime");
    }
    if (p >= (1ULL << 31)) throw DomainError("characteristic too large");
    trim(modulus_);
    if (modulus_.size() < 2 || modulus_.back() != 1) throw DomainError("field modulus must be monic of positive degree");
    k_ = static_cast<unsigned>(modulus_.size() - 1);
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) {
        if (q_ > (std::numeric_limits<std::uint64_t>::max() >> 2) / p_) throw DomainError("field too large");
        q_ *= p_;
    }
    for (auto c : modulus_) {
        if (c >= p_) throw DomainError("field modulus coefficients must be reduced mod p");
    }
    if (!is_irreducible_mod_p(modulus_, p_)) throw DomainError("field modulus is not irreducible");

    odd_part_ = q_ - 1;
    while (odd_part_ % 2 == 0) {
        odd_part_ /= 2;
        ++two_adic_exponent_;
    }
    for (std::uint64_t v = 2; v < q_; ++v) {
        if (!is_square(v)) {
            nonsquare_ = v;
            break;
        }
    }
}

std::vector<std::uint64_t> GaloisField::digits(std::uint64_t a) const {
    std::vector<std::uint64_t> d(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

std::uint64_t GaloisField::from_digits(const std::vector<std::uint64_t>& digits) const {
    Coeffs f = digits;
    for (auto& c : f) c %= p_;
    f = poly_rem(std::move(f), modulus_, p_);
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * p_ + f[i];
    return v;
}

std::uint64_t GaloisField::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t GaloisField::add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint64_t v = 0, scale = 1;
    while (a || b) {
        v += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return v;
}

std::uint64_t GaloisField::neg(std::uint64_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint64_t v = 0, scale = 1;
    while (a) {
        std::uint64_t d = a % p_;
        v += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return v;
}

std::uint64_t GaloisField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t GaloisField::mulmod(std::uint64_t a, std::uint64_t b) const { return mod_mul(a, b, p_); }

std::uint64_t GaloisField::mul(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return mulmod(a, b);
    if (a == 0 || b == 0) return 0;
    auto da = digits(a), db = digits(b);
    Coeffs prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j])) % p_;
    }
    return from_digits(prod);
}

std::uint64_t GaloisField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t GaloisField::inv(std::uint64_t a) const {
    if (a == 0) throw DomainError("division by zero in " + name());
    return pow(a, q_ - 2);
}

bool GaloisField::is_square(std::uint64_t a) const {
    if (a == 0) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

std::uint64_t GaloisField::sqrt(std::uint64_t a) const {
    if (a == 0) return 0;
    if (!is_square(a)) throw DomainError(format(a) + " is not a square in " + name());
    std::uint64_t m = two_adic_exponent_;
    std::uint64_t c = pow(nonsquare_, odd_part_);
    std::uint64_t t = pow(a, odd_part_);
    std::uint64_t x = pow(a, (odd_part_ + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mul(tt, tt);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        x = mul(x, b);
        c = mul(b, b);
        t = mul(t, c);
        m = i;
    }
    return x;
}

std::string GaloisField::format(std::uint64_t a) const {
    if (k_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto d = digits(a);
    std::string out;
    for (unsigned i = k_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace a1deg
