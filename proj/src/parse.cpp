#include "a1deg/parse.hpp"

#include "a1deg/error.hpp"

#include <cctype>

namespace a1deg {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Cursor {
public:
    Cursor(std::string_view text, std::size_t base) : s_(text), base_(base) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
    }
    std::string found() {
        skip_ws();
        if (pos_ >= s_.size()) return " but reached end of input";
        return std::string(" but found '") + s_[pos_] + "'";
    }
    std::string integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer" + found());
        return std::string(s_.substr(start, pos_ - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) fail("expected an identifier" + found());
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    std::size_t column() const { return base_ + pos_ + 1; }
    std::size_t offset() const { return pos_; }
    void set_offset(std::size_t p) { pos_ = p; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, column()); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t offset) const {
        throw ParseError(msg, base_ + offset + 1);
    }
    std::string_view text() const { return s_; }
    std::size_t base() const { return base_; }

private:
    std::string_view s_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

class PolyParser {
public:
    PolyParser(Cursor& c, const RingPtr& ring) : c_(c), ring_(ring) {}

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (c_.accept('+')) {
                acc += term();
            } else if (c_.accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

private:
    Polynomial term() {
        Polynomial acc = unary();
        while (c_.accept('*')) acc = acc * unary();
        return acc;
    }

    Polynomial unary() {
        if (c_.accept('-')) return -unary();
        if (c_.accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (c_.accept('^')) {
            std::size_t at = c_.offset();
            std::string e = c_.integer_literal();
            if (e.size() > 6) c_.fail_at("exponent too large", at);
            base = base.pow(static_cast<unsigned>(std::stoul(e)));
        }
        char next = c_.peek();
        if (next != '\0' && (is_ident_char(next) || next == '(')) {
            c_.fail("implicit multiplication is not allowed; write '*'");
        }
        return base;
    }

    Polynomial primary() {
        char ch = c_.peek();
        if (ch == '(') {
            c_.accept('(');
            Polynomial inner = expr();
            c_.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits = c_.integer_literal();
            return Polynomial::constant(ring_, Scalar::from_integer(ring_->field(), Integer(digits)));
        }
        if (is_ident_start(ch)) {
            std::size_t at = c_.offset();
            std::string name = c_.identifier();
            auto idx = ring_->index_of(name);
            if (!idx) c_.fail_at("unknown variable '" + name + "'", at);
            return Polynomial::variable(ring_, *idx);
        }
        c_.fail("expected a number, a variable or '('" + c_.found());
    }

    Cursor& c_;
    const RingPtr& ring_;
};

Polynomial parse_polynomial_at(std::string_view text, const RingPtr& ring, std::size_t base) {
    Cursor c(text, base);
    if (c.at_end()) c.fail("empty polynomial");
    Polynomial p = PolyParser(c, ring).expr();
    if (!c.at_end()) c.fail("unexpected character" + c.found());
    return p;
}

struct Piece {
    std::string_view text;
    std::size_t base;
};

// Splits on top-level separators (outside brackets).
std::vector<Piece> split_top_level(std::string_view text, std::size_t base, std::string_view seps) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        char ch = i < text.size() ? text[i] : '\0';
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (i == text.size() || (depth == 0 && seps.find(ch) != std::string_view::npos)) {
            out.push_back({text.substr(start, i - start), base + start});
            start = i + 1;
        }
    }
    return out;
}

bool blank(std::string_view s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

Scalar parse_scalar_at(std::string_view text, const FieldDesc& F, std::size_t base) {
    Cursor c(text, base);
    if (c.at_end()) c.fail("empty number");
    const bool generator = F.is_finite() && F.galois()->degree() > 1 &&
                           text.find('a') != std::string_view::npos;
    if (generator) {
        // Polynomial in the generator over Z, reduced into GF(p^k).
        RingPtr R = PolyRing::make(FieldDesc::rationals(), {"a"});
        Polynomial p = parse_polynomial_at(text, R, base);
        const auto& gf = F.galois();
        std::vector<std::uint64_t> digits(p.degree_in(0) + 1, 0);
        for (const auto& t : p.terms()) {
            Integer v = t.coeff.rational().get_num() % Integer(static_cast<unsigned long>(gf->characteristic()));
            if (v < 0) v += static_cast<unsigned long>(gf->characteristic());
            digits[t.mono.exps[0]] = v.get_ui();
        }
        return Scalar(FiniteFieldElement{gf, gf->from_digits(digits)});
    }
    bool negative = false;
    if (c.accept('-')) {
        negative = true;
    } else {
        c.accept('+');
    }
    if (c.peek() == '.' || (!std::isdigit(static_cast<unsigned char>(c.peek())))) {
        c.fail("expected an integer or a fraction" + c.found());
    }
    Integer num(c.integer_literal());
    Integer den = 1;
    if (c.peek() == '.') c.fail("decimal literals are not allowed; use a fraction a/b");
    if (c.accept('/')) {
        std::size_t den_at = c.offset();
        den = Integer(c.integer_literal());
        if (den == 0) c.fail_at("zero denominator", den_at);
    }
    if (!c.at_end()) c.fail("unexpected character" + c.found());
    Rational r = make_rational(negative ? Integer(-num) : num, den);
    try {
        return Scalar::from_rational(F, r);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), base + 1);
    }
}

} // namespace

FieldDesc parse_field(std::string_view text) {
    Cursor c(text, 0);
    std::string name = c.identifier();
    if (name == "QQ" || name == "RR" || name == "CC") {
        if (!c.at_end()) c.fail("unexpected character" + c.found());
        if (name == "QQ") return FieldDesc::rationals();
        if (name == "RR") return FieldDesc::reals();
        return FieldDesc::complexes();
    }
    if (name != "GF") c.fail_at("unknown field '" + name + "'; expected QQ, RR, CC or GF(q)", 0);
    c.expect('(');
    std::size_t at = c.offset();
    Integer q(c.integer_literal());
    c.expect(')');
    if (!c.at_end()) c.fail("unexpected character" + c.found());
    if (q < 2) c.fail_at("field order must be at least 2", at);
    auto factors = factor(q);
    if (factors.size() != 1) throw DomainError("GF(" + q.get_str() + "): order is not a prime power");
    const auto& [p, k] = factors.front();
    if (p == 2) throw DomainError("characteristic 2 unsupported");
    if (!p.fits_ulong_p()) throw DomainError("characteristic too large");
    return FieldDesc::finite(p.get_ui(), k);
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return parse_polynomial_at(text, ring, 0); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (const auto& piece : split_top_level(text, 0, ",;\n")) {
        if (blank(piece.text)) continue;
        out.push_back(parse_polynomial_at(piece.text, ring, piece.base));
    }
    if (out.empty()) throw ParseError("no polynomials given", 1);
    return out;
}

Scalar parse_scalar(std::string_view text, const FieldDesc& F) { return parse_scalar_at(text, F, 0); }

std::vector<Scalar> parse_scalar_list(std::string_view text, const FieldDesc& F) {
    std::size_t base = 0;
    std::size_t first = text.find_first_not_of(" \t\n");
    std::size_t last = text.find_last_not_of(" \t\n");
    if (first == std::string_view::npos) throw ParseError("empty list", 1);
    std::string_view inner = text.substr(first, last - first + 1);
    base = first;
    const char open = inner.front();
    if (open == '<' || open == '(' || open == '[') {
        const char close = open == '<' ? '>' : open == '(' ? ')' : ']';
        if (inner.back() != close) throw ParseError(std::string("expected closing '") + close + "'", base + inner.size());
        inner = inner.substr(1, inner.size() - 2);
        base += 1;
    }
    std::vector<Scalar> out;
    for (const auto& piece : split_top_level(inner, base, ",")) out.push_back(parse_scalar_at(piece.text, F, piece.base));
    return out;
}

Matrix<Scalar> parse_matrix(std::string_view text, const FieldDesc& F) {
    Cursor c(text, 0);
    std::vector<std::vector<Scalar>> rows;
    c.expect('[');
    do {
        c.expect('[');
        std::vector<Scalar> row;
        do {
            std::size_t start = c.offset();
            std::size_t end = start;
            while (end < text.size() && text[end] != ',' && text[end] != ']') ++end;
            row.push_back(parse_scalar_at(text.substr(start, end - start), F, start));
            c.set_offset(end);
        } while (c.accept(','));
        c.expect(']');
        if (!rows.empty() && row.size() != rows.front().size()) c.fail("rows have different lengths");
        rows.push_back(std::move(row));
    } while (c.accept(','));
    c.expect(']');
    if (!c.at_end()) c.fail("unexpected character" + c.found());
    Matrix<Scalar> m(rows.size(), rows.front().size(), Scalar::zero(F));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

std::vector<std::string> parse_variable_list(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& piece : split_top_level(text, 0, ",")) {
        Cursor c(piece.text, piece.base);
        out.push_back(c.identifier());
        if (!c.at_end()) c.fail("unexpected character" + c.found());
    }
    return out;
}

} // namespace a1deg
