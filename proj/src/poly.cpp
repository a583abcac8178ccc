#include "a1deg/poly.hpp"

#include "a1deg/error.hpp"
#include "a1deg/matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace a1deg {

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {
    degree = std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree > b.degree) return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    r.degree += b.degree;
    return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= a.exps[i];
    r.degree -= a.degree;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps[i], b.exps[i]);
    return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

// ---------------------------------------------------------------- rings

RingPtr PolyRing::make(FieldDesc field, std::vector<std::string> vars, std::size_t elimination_block) {
    if (!field.is_exact()) {
        throw DomainError("polynomial computations need an exact field (QQ or GF(q)); compute over QQ and base-change to " +
                          field.name());
    }
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw DomainError("empty variable name");
        if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
    }
    if (elimination_block > vars.size()) throw DomainError("elimination block larger than the variable list");
    return RingPtr(new PolyRing(std::move(field), std::move(vars), elimination_block));
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

namespace {

int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, bool whole) {
    std::uint32_t da = 0, db = 0;
    if (whole) {
        da = a.degree;
        db = b.degree;
    } else {
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.exps[i];
            db += b.exps[i];
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = vars_.size();
    if (elim_ == 0) return grevlex(a, b, 0, n, true);
    if (int c = grevlex(a, b, 0, elim_, false)) return c;
    return grevlex(a, b, elim_, n, false);
}

std::string PolyRing::format(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!out.empty()) out += "*";
        out += vars_[i];
        if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- polynomials

struct PolyAccess {
    static std::vector<Term>& terms(Polynomial& p) { return p.terms_; }
    static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }
};

namespace {

// a + sign * b on sorted term lists (b's coefficients optionally scaled and its
// monomials shifted). Starts b at index `b_from`.
std::vector<Term> merge_terms(const PolyRing& R, std::vector<Term>::const_iterator a_begin,
                              std::vector<Term>::const_iterator a_end, const std::vector<Term>& b, std::size_t b_from,
                              const Scalar* b_scale, const Monomial* b_shift, const Scalar* a_scale) {
    std::vector<Term> out;
    out.reserve(static_cast<std::size_t>(a_end - a_begin) + b.size());
    auto ai = a_begin;
    std::size_t bi = b_from;
    auto make_b = [&](std::size_t i) {
        Term t{b_shift ? b[i].mono * *b_shift : b[i].mono, b_scale ? b[i].coeff * *b_scale : b[i].coeff};
        return t;
    };
    auto make_a = [&](const Term& t) { return a_scale ? Term{t.mono, t.coeff * *a_scale} : t; };
    while (ai != a_end && bi < b.size()) {
        Term tb = make_b(bi);
        int c = R.compare(ai->mono, tb.mono);
        if (c > 0) {
            out.push_back(make_a(*ai++));
        } else if (c < 0) {
            out.push_back(std::move(tb));
            ++bi;
        } else {
            Term ta = make_a(*ai++);
            ta.coeff += tb.coeff;
            if (!ta.coeff.is_zero()) out.push_back(std::move(ta));
            ++bi;
        }
    }
    for (; ai != a_end; ++ai) out.push_back(make_a(*ai));
    for (; bi < b.size(); ++bi) out.push_back(make_b(bi));
    return out;
}

} // namespace

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b) throw DomainError("polynomial without a ring");
    if (a != b && !(*a == *b)) throw DomainError("ring mismatch");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    const PolyRing& R = *ring_;
    for (const auto& t : terms) {
        if (t.mono.exps.size() != R.nvars()) throw DomainError("exponent vector length does not match the ring");
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    return monomial(ring, Monomial::one(ring->nvars()), c);
}

Polynomial Polynomial::constant(const RingPtr& ring, long c) {
    return constant(ring, Scalar::from_integer(ring->field(), c));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
    Monomial m = Monomial::one(ring->nvars());
    m.exps.at(i) = 1;
    m.degree = 1;
    return monomial(ring, std::move(m), Scalar::one(ring->field()));
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name) {
    auto i = ring->index_of(name);
    if (!i) throw DomainError("unknown variable '" + name + "'");
    return variable(ring, *i);
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, Scalar c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree);
    return d;
}

std::uint32_t Polynomial::degree_in(std::size_t i) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exps[i]);
    return d;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(ring_->field())); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    terms_ = merge_terms(*ring_, terms_.cbegin(), terms_.cend(), o.terms_, 0, nullptr, nullptr, nullptr);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    Scalar minus_one = -Scalar::one(ring_->field());
    terms_ = merge_terms(*ring_, terms_.cbegin(), terms_.cend(), o.terms_, 0, &minus_one, nullptr, nullptr);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) prod.push_back(Term{ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Polynomial(a.ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(ring_->field());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool negative = t.coeff.is_rational() && t.coeff.sign() < 0;
        if (negative) c = c.substr(1);
        bool compound = !t.coeff.is_rational() && c.find_first_of("+a") != std::string::npos &&
                        !t.mono.is_one();
        if (compound) c = "(" + c + ")";
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (t.mono.is_one()) {
            out += c;
        } else {
            if (c != "1") out += c + "*";
            out += ring_->format(t.mono);
        }
    }
    return out;
}

// ---------------------------------------------------------------- division

namespace {

const Polynomial* find_divisor(const Monomial& m, const std::vector<Polynomial>& divisors) {
    for (const auto& g : divisors)
        if (divides(g.leading_monomial(), m)) return &g;
    return nullptr;
}

const Polynomial* find_divisor(const Monomial& m, const std::vector<const Polynomial*>& divisors) {
    for (const auto* g : divisors)
        if (divides(g->leading_monomial(), m)) return g;
    return nullptr;
}

// Full reduction of f. With `fraction_free` (integer coefficients over QQ) the
// result is a nonzero rational multiple of the field normal form.
template <class Divisors>
Polynomial reduce(const Polynomial& f, const Divisors& divisors, bool fraction_free) {
    const RingPtr& ring = f.ring();
    const PolyRing& R = *ring;
    std::vector<Term> cur = f.terms();
    std::vector<Term> rem;
    std::size_t pos = 0;
    while (pos < cur.size()) {
        const Polynomial* g = find_divisor(cur[pos].mono, divisors);
        if (!g) {
            rem.push_back(std::move(cur[pos]));
            ++pos;
            continue;
        }
        Monomial shift = quotient(cur[pos].mono, g->leading_monomial());
        const auto& gt = g->terms();
        if (fraction_free) {
            Integer a = g->leading_coeff().rational().get_num();
            Integer c = cur[pos].coeff.rational().get_num();
            Integer d = gcd(a, c);
            Scalar a_mul(Rational(a / d));
            Scalar b_mul(Rational(-(c / d)));
            cur = merge_terms(R, cur.cbegin() + static_cast<long>(pos) + 1, cur.cend(), gt, 1, &b_mul, &shift, &a_mul);
            if (!a_mul.is_one()) {
                for (auto& t : rem) t.coeff *= a_mul;
            }
        } else {
            Scalar factor = -(cur[pos].coeff / g->leading_coeff());
            cur = merge_terms(R, cur.cbegin() + static_cast<long>(pos) + 1, cur.cend(), gt, 1, &factor, &shift, nullptr);
        }
        pos = 0;
    }
    return PolyAccess::from_sorted(ring, std::move(rem));
}

// Integer primitive part for QQ; monic otherwise.
Polynomial normalize(const Polynomial& f) {
    if (f.is_zero()) return f;
    if (!f.ring()->field().has_rational_elements()) return f.monic();
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& t : f.terms()) {
        const Rational& c = t.coeff.rational();
        den_lcm = lcm(den_lcm, c.get_den());
        num_gcd = gcd(num_gcd, c.get_num());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (f.leading_coeff().sign() < 0) scale = -scale;
    return f.scaled(Scalar(scale));
}

} // namespace

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    const RingPtr& ring = f.ring();
    std::vector<Term> q;
    Polynomial r = f;
    while (!r.is_zero()) {
        const Term& lt = r.leading_term();
        if (!divides(g.leading_monomial(), lt.mono)) throw DomainError("inexact polynomial division");
        Term t{quotient(lt.mono, g.leading_monomial()), lt.coeff / g.leading_coeff()};
        r -= g.times_term(t.mono, t.coeff);
        q.push_back(std::move(t));
    }
    return PolyAccess::from_sorted(ring, std::move(q));
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<std::size_t>& var_map) {
    if (!(f.ring()->field() == target->field())) throw DomainError("ring mismatch");
    if (var_map.size() != f.ring()->nvars()) throw DomainError("variable map has the wrong length");
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (!t.mono.exps[i]) continue;
            if (var_map[i] >= e.size()) throw DomainError("variable '" + f.ring()->variables()[i] + "' has no image");
            e[var_map[i]] += t.mono.exps[i];
        }
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(target, std::move(terms));
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (!t.mono.exps[var]) continue;
        Monomial m = t.mono;
        --m.exps[var];
        --m.degree;
        terms.push_back(Term{std::move(m), t.coeff * Scalar::from_integer(f.ring()->field(), t.mono.exps[var])});
    }
    return Polynomial(f.ring(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, std::size_t var, const Scalar& c) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        Scalar coeff = t.coeff;
        for (std::uint32_t k = 0; k < t.mono.exps[var]; ++k) coeff *= c;
        m.degree -= m.exps[var];
        m.exps[var] = 0;
        terms.push_back(Term{std::move(m), std::move(coeff)});
    }
    return Polynomial(f.ring(), std::move(terms));
}

// ---------------------------------------------------------------- ideals

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring());
    if (gens_.empty()) gens_.push_back(Polynomial(ring_));
}

bool Ideal::is_zero() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_zero(); });
}

std::string Ideal::to_string() const {
    std::string out = "ideal(";
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string();
    return out + ")";
}

bool GroebnerBasis::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    require_same_ring(f.ring(), G.ring());
    return reduce(f, G.basis(), false);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    for (const auto& g : divisors) {
        require_same_ring(f.ring(), g.ring());
        if (g.is_zero()) throw DomainError("zero divisor polynomial");
    }
    return reduce(f, divisors, false);
}

namespace {

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
};

class Buchberger {
public:
    explicit Buchberger(const RingPtr& ring)
        : ring_(ring), fraction_free_(ring->field().has_rational_elements()) {}

    // Returns false once a nonzero constant shows up (unit ideal).
    bool add(Polynomial h) {
        h = normalize(h);
        if (h.is_zero()) return true;
        if (h.is_constant()) return false;
        polys_.push_back(std::move(h));
        active_.push_back(false);
        update(polys_.size() - 1);
        return true;
    }

    bool run() {
        while (!pairs_.empty()) {
            // Normal selection: smallest lcm first, ties by insertion.
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k) {
                if (ring_->compare(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
            }
            CriticalPair pair = std::move(pairs_[best]);
            pairs_.erase(pairs_.begin() + static_cast<long>(best));

            Polynomial s = spoly(polys_[pair.i], polys_[pair.j], pair.lcm);
            std::vector<const Polynomial*> divisors;
            for (std::size_t k = 0; k < polys_.size(); ++k)
                if (active_[k]) divisors.push_back(&polys_[k]);
            Polynomial r = reduce(s, divisors, fraction_free_);
            if (!add(std::move(r))) return false;
        }
        return true;
    }

    std::vector<Polynomial> reduced_basis() const {
        std::vector<Polynomial> g;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) g.push_back(polys_[k]);
        // Minimalize.
        std::vector<Polynomial> minimal;
        for (std::size_t a = 0; a < g.size(); ++a) {
            bool redundant = false;
            for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
                if (a == b) continue;
                if (divides(g[b].leading_monomial(), g[a].leading_monomial()) &&
                    (!(g[b].leading_monomial() == g[a].leading_monomial()) || b < a))
                    redundant = true;
            }
            if (!redundant) minimal.push_back(g[a].monic());
        }
        // Interreduce tails.
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            std::vector<const Polynomial*> others;
            for (std::size_t b = 0; b < minimal.size(); ++b)
                if (b != a) others.push_back(&minimal[b]);
            Polynomial tail = minimal[a];
            Term lead = tail.leading_term();
            PolyAccess::terms(tail).erase(PolyAccess::terms(tail).begin());
            Polynomial reduced = reduce(tail, others, false);
            minimal[a] = Polynomial::monomial(ring_, lead.mono, lead.coeff) + reduced;
        }
        std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& x, const Polynomial& y) {
            return ring_->compare(x.leading_monomial(), y.leading_monomial()) < 0;
        });
        return minimal;
    }

private:
    Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& l) const {
        Monomial uf = quotient(l, f.leading_monomial());
        Monomial ug = quotient(l, g.leading_monomial());
        if (fraction_free_) {
            const Integer& a = f.leading_coeff().rational().get_num();
            const Integer& b = g.leading_coeff().rational().get_num();
            Integer d = gcd(a, b);
            return f.times_term(uf, Scalar(Rational(b / d))) - g.times_term(ug, Scalar(Rational(a / d)));
        }
        return f.times_term(uf, f.leading_coeff().inverse()) - g.times_term(ug, g.leading_coeff().inverse());
    }

    // Gebauer-Moeller installation of the new element h.
    void update(std::size_t h) {
        const Monomial& lh = polys_[h].leading_monomial();
        std::vector<CriticalPair> candidates;
        for (std::size_t g = 0; g < polys_.size(); ++g) {
            if (g == h || !active_[g]) continue;
            candidates.push_back({g, h, lcm(polys_[g].leading_monomial(), lh)});
        }
        std::vector<CriticalPair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const auto& c = candidates[a];
            bool keep = coprime(polys_[c.i].leading_monomial(), lh);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
                    if (divides(candidates[b].lcm, c.lcm)) keep = false;
                for (const auto& d : kept)
                    if (keep && divides(d.lcm, c.lcm)) keep = false;
            }
            if (keep) kept.push_back(c);
        }
        std::vector<CriticalPair> next;
        for (auto& p : pairs_) {
            bool drop = divides(lh, p.lcm) && !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                        !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
            if (!drop) next.push_back(std::move(p));
        }
        for (auto& c : kept) {
            if (!coprime(polys_[c.i].leading_monomial(), lh)) next.push_back(std::move(c));
        }
        pairs_ = std::move(next);
        for (std::size_t g = 0; g < polys_.size(); ++g) {
            if (g != h && active_[g] && divides(lh, polys_[g].leading_monomial())) active_[g] = false;
        }
        active_[h] = true;
    }

    RingPtr ring_;
    bool fraction_free_;
    std::vector<Polynomial> polys_;
    std::vector<bool> active_;
    std::vector<CriticalPair> pairs_;
};

} // namespace

GroebnerBasis groebner_basis(const Ideal& I) {
    const RingPtr& ring = I.ring();
    Buchberger bb(ring);
    std::vector<Polynomial> gens = I.generators();
    // Deterministic input order: by leading monomial, then by text.
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    bool proper = true;
    for (auto& g : gens) {
        if (!bb.add(g)) {
            proper = false;
            break;
        }
    }
    if (proper) proper = bb.run();
    if (!proper) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    return GroebnerBasis(ring, bb.reduced_basis());
}

bool ideals_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    return groebner_basis(I) == groebner_basis(J);
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
    require_same_ring(big.ring(), small.ring());
    GroebnerBasis G = groebner_basis(big);
    return std::all_of(small.generators().begin(), small.generators().end(),
                       [&](const Polynomial& f) { return G.contains(f); });
}

namespace {

std::string fresh_name(const PolyRing& R) {
    std::string name = "t_aux";
    while (R.index_of(name)) name += "_";
    return name;
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    const RingPtr& R = I.ring();
    if (I.is_zero() || J.is_zero()) return Ideal(R, {Polynomial(R)});
    std::vector<std::string> vars{fresh_name(*R)};
    vars.insert(vars.end(), R->variables().begin(), R->variables().end());
    RingPtr T = PolyRing::make(R->field(), vars, 1);
    std::vector<std::size_t> up(R->nvars());
    std::iota(up.begin(), up.end(), std::size_t{1});
    std::vector<std::size_t> down(T->nvars(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 1; i < T->nvars(); ++i) down[i] = i - 1;

    Polynomial t = Polynomial::variable(T, 0);
    Polynomial one_minus_t = Polynomial::constant(T, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        if (!f.is_zero()) gens.push_back(t * map_variables(f, T, up));
    for (const auto& g : J.generators())
        if (!g.is_zero()) gens.push_back(one_minus_t * map_variables(g, T, up));
    GroebnerBasis G = groebner_basis(Ideal(T, gens));
    std::vector<Polynomial> out;
    for (const auto& g : G.basis())
        if (g.degree_in(0) == 0) out.push_back(map_variables(g, R, down));
    return Ideal(R, out);
}

namespace {

Ideal quotient_by_element(const Ideal& I, const Polynomial& g) {
    const RingPtr& R = I.ring();
    Ideal meet = intersect(I, Ideal(R, {g}));
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators())
        if (!h.is_zero()) gens.push_back(divide_exact(h, g));
    return Ideal(R, gens);
}

} // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    const RingPtr& R = I.ring();
    std::optional<Ideal> result;
    for (const auto& g : J.generators()) {
        if (g.is_zero()) continue;
        Ideal q = quotient_by_element(I, g);
        result = result ? intersect(*result, q) : q;
    }
    if (!result) return Ideal(R, {Polynomial::constant(R, 1)});
    Ideal out = groebner_basis(*result).ideal();
    if (!ideal_contains(out, I)) throw std::logic_error("ideal quotient does not contain the ideal");
    return out;
}

Ideal saturation(const Ideal& I, const Ideal& J) {
    GroebnerBasis current = groebner_basis(I);
    for (;;) {
        GroebnerBasis next = groebner_basis(ideal_quotient(current.ideal(), J));
        if (next == current) return current.ideal();
        current = std::move(next);
    }
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G) {
    const RingPtr& R = G.ring();
    const std::size_t n = R->nvars();
    if (G.is_unit()) return {};
    std::vector<std::uint32_t> bound(n, 0);
    for (const auto& g : G.basis()) {
        if (g.is_zero()) continue;
        const Monomial& m = g.leading_monomial();
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.exps[i]) {
                ++support;
                var = i;
            }
        if (support == 1 && (bound[var] == 0 || m.exps[var] < bound[var])) bound[var] = m.exps[var];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0) throw DomainError("zeros are not isolated");
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
        Monomial m(e);
        bool standard = std::none_of(G.basis().begin(), G.basis().end(),
                                     [&](const Polynomial& g) { return divides(g.leading_monomial(), m); });
        if (standard) out.push_back(std::move(m));
        std::size_t i = 0;
        while (i < n && ++e[i] == bound[i]) e[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return R->compare(a, b) < 0; });
    return out;
}

namespace {

// Coefficient vectors are listed from the highest formal power down.
Scalar sylvester_determinant(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const FieldDesc& F) {
    const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
    if (size == 0) return Scalar::one(F);
    Matrix<Scalar> S(size, size, Scalar::zero(F));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) S(r, r + k) = a[k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) S(n + r, r + k) = b[k];
    Scalar det = Scalar::one(F);
    for (std::size_t c = 0; c < size; ++c) {
        std::size_t pivot = c;
        while (pivot < size && S(pivot, c).is_zero()) ++pivot;
        if (pivot == size) return Scalar::zero(F);
        if (pivot != c) {
            S.swap_rows(pivot, c);
            det = -det;
        }
        det *= S(c, c);
        Scalar inv = S(c, c).inverse();
        for (std::size_t r = c + 1; r < size; ++r) {
            if (S(r, c).is_zero()) continue;
            Scalar factor = S(r, c) * inv;
            for (std::size_t k = c; k < size; ++k) S(r, k) -= factor * S(c, k);
        }
    }
    return det;
}

std::vector<Scalar> univariate_coefficients(const Polynomial& f, std::optional<std::size_t> var, unsigned degree) {
    std::vector<Scalar> c(degree + 1, Scalar::zero(f.ring()->field()));
    for (const auto& t : f.terms()) {
        unsigned e = var ? t.mono.exps[*var] : 0;
        c[degree - e] = t.coeff;
    }
    return c;
}

} // namespace

Scalar resultant_univariate(const Polynomial& f, const Polynomial& g, std::optional<unsigned> formal_deg_f,
                            std::optional<unsigned> formal_deg_g) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    std::optional<std::size_t> var;
    for (const Polynomial* p : {&f, &g}) {
        for (const auto& t : p->terms()) {
            for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
                if (!t.mono.exps[i]) continue;
                if (var && *var != i) throw DomainError("resultant_univariate needs polynomials in one common variable");
                var = i;
            }
        }
    }
    unsigned df = var ? f.degree_in(*var) : 0, dg = var ? g.degree_in(*var) : 0;
    if (formal_deg_f) {
        if (*formal_deg_f < df) throw DomainError("formal degree below the actual degree");
        df = *formal_deg_f;
    }
    if (formal_deg_g) {
        if (*formal_deg_g < dg) throw DomainError("formal degree below the actual degree");
        dg = *formal_deg_g;
    }
    return sylvester_determinant(univariate_coefficients(f, var, df), univariate_coefficients(g, var, dg),
                                 f.ring()->field());
}

Scalar resultant_binary_forms(const Polynomial& f, const Polynomial& g, std::size_t u, std::size_t v) {
    require_same_ring(f.ring(), g.ring());
    auto coefficients = [&](const Polynomial& p) {
        if (p.is_zero()) throw DomainError("resultant of a zero polynomial");
        unsigned d = p.total_degree();
        std::vector<Scalar> c(d + 1, Scalar::zero(p.ring()->field()));
        for (const auto& t : p.terms()) {
            if (t.mono.degree != d || t.mono.exps[u] + t.mono.exps[v] != d)
                throw DomainError("resultant_binary_forms needs homogeneous forms in the two given variables");
            c[t.mono.exps[v]] = t.coeff;
        }
        return c;
    };
    return sylvester_determinant(coefficients(f), coefficients(g), f.ring()->field());
}

} // namespace a1deg
