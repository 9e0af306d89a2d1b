#include "aztec/ratfunc.hpp"

#include <cctype>
#include <cstddef>
#include <utility>
#include <vector>

namespace aztec {

namespace {

// Integer polynomials (index = degree, trailing coefficient nonzero) carry
// the gcd computation; the fraction-free primitive PRS keeps everything in Z.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int zcontent(const ZPoly& a) {
    Int g = 0;
    for (const Int& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // 0 for the zero polynomial, positive otherwise
}

ZPoly zprimitive(ZPoly a) {
    Int c = zcontent(a);
    if (c > 1)
        for (Int& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return a;
}

ZPoly zscale(ZPoly a, const Int& s) {
    for (Int& x : a) x *= s;
    return a;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k < a.size()) r[k] += a[k];
        if (k < b.size()) r[k] -= b[k];
    }
    ztrim(r);
    return r;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db) {
        const long da = static_cast<long>(a.size()) - 1;
        const Int lead = a.back();
        a = zscale(std::move(a), b.back());
        ZPoly shifted(da - db, Int(0));
        for (const Int& c : b) shifted.push_back(c * lead);
        a = zsub(a, shifted);
    }
    return a;
}

// Primitive PRS gcd; result is primitive with positive leading coefficient.
ZPoly zgcd(ZPoly a, ZPoly b) {
    a = zprimitive(std::move(a));
    b = zprimitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprimitive(pseudo_remainder(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (Int& c : a) c = -c;
    if (a.empty()) a.push_back(1);
    return a;
}

// Exact long division; the quotient is integral whenever b divides a.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
    const long db = static_cast<long>(b.size()) - 1;
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        const long da = static_cast<long>(a.size()) - 1;
        Int c;
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        q[da - db] = c;
        ZPoly shifted(da - db, Int(0));
        for (const Int& x : b) shifted.push_back(x * c);
        a = zsub(a, shifted);
    }
    return q;
}

Polynomial zpoly_to_polynomial(const ZPoly& a) {
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const Int& x : a) c.emplace_back(x);
    return Polynomial::from_coeffs(std::move(c));
}

}  // namespace

RationalFunction::RationalFunction() : num_(), den_(Polynomial(1)) {}

RationalFunction::RationalFunction(long v) : RationalFunction(Rat(v)) {}

RationalFunction::RationalFunction(const Rat& v)
    : RationalFunction(normalized(Polynomial(v), Polynomial(1))) {}

RationalFunction::RationalFunction(const Polynomial& poly)
    : RationalFunction(normalized(poly, Polynomial(1))) {}

RationalFunction RationalFunction::variable() {
    return normalized(Polynomial::variable(), Polynomial(1));
}

RationalFunction RationalFunction::normalized(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    RationalFunction r;
    if (num.is_zero()) return r;

    // Clear coefficient denominators jointly so the value is preserved.
    Int lcm = 1;
    for (const Rat& c : num.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const Rat& c : den.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    auto to_zpoly = [&](const Polynomial& poly) {
        ZPoly z;
        z.reserve(poly.coeffs().size());
        for (const Rat& c : poly.coeffs()) {
            Rat scaled = c * Rat(lcm);
            z.push_back(scaled.get_num());
        }
        return z;
    };
    ZPoly n = to_zpoly(num);
    ZPoly d = to_zpoly(den);

    ZPoly g = zgcd(n, d);
    if (g.size() > 1 || g[0] != 1) {
        n = zdiv_exact(std::move(n), g);
        d = zdiv_exact(std::move(d), g);
    }
    Int c;
    mpz_gcd(c.get_mpz_t(), zcontent(n).get_mpz_t(), zcontent(d).get_mpz_t());
    if (c > 1) {
        for (Int& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        for (Int& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    if (d.back() < 0) {
        for (Int& x : n) x = -x;
        for (Int& x : d) x = -x;
    }
    r.num_ = zpoly_to_polynomial(n);
    r.den_ = zpoly_to_polynomial(d);
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return normalized(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return normalized(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    return normalized(num_ * o.den_, den_ * o.num_);
}

Rat RationalFunction::eval(const Rat& p) const {
    Rat d = den_.eval(p);
    if (d == 0) throw std::domain_error("pole");
    Rat r = num_.eval(p) / d;
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::shifted(long k) const {
    return normalized(num_.shifted(k), den_.shifted(k));
}

std::string format_polynomial(const Polynomial& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
        const Rat& c = poly.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        Rat a = negative ? Rat(-c) : c;
        std::string term;
        if (k == 0) {
            term = a.get_num().get_str();
        } else {
            if (a != 1) term = a.get_num().get_str() + "*";
            term += "p";
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (first) {
            out = (negative ? "-" : "") + term;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out;
}

std::string RationalFunction::str() const {
    std::string out = "(" + format_polynomial(num_) + ")";
    if (!(den_.degree() == 0 && den_.coeff(0) == 1))
        out += "/(" + format_polynomial(den_) + ")";
    return out;
}

namespace {

struct Token {
    enum Kind { Integer, Var, Plus, Minus, Star, Caret, LParen, RParen, Slash, End } kind;
    Int value;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }
    const Token& tok() const { return tok_; }
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            tok_.kind = Token::Integer;
            tok_.value = Int(text_.substr(start, i_ - start));
            return;
        }
        ++i_;
        switch (c) {
            case 'p': tok_.kind = Token::Var; return;
            case '+': tok_.kind = Token::Plus; return;
            case '-': tok_.kind = Token::Minus; return;
            case '*': tok_.kind = Token::Star; return;
            case '^': tok_.kind = Token::Caret; return;
            case '(': tok_.kind = Token::LParen; return;
            case ')': tok_.kind = Token::RParen; return;
            case '/': tok_.kind = Token::Slash; return;
            default: throw ParseError("unexpected character", tok_.pos);
        }
    }

private:
    const std::string& text_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    RationalFunction parse() {
        Polynomial num = expr();
        Polynomial den(1);
        if (lex_.tok().kind == Token::Slash) {
            lex_.advance();
            den = expr();
        }
        if (lex_.tok().kind != Token::End)
            throw ParseError("unexpected trailing input", lex_.tok().pos);
        return RationalFunction::normalized(num, den);
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        while (lex_.tok().kind == Token::Plus || lex_.tok().kind == Token::Minus) {
            bool minus = lex_.tok().kind == Token::Minus;
            lex_.advance();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (lex_.tok().kind == Token::Star) {
            lex_.advance();
            acc = acc * unary();
        }
        return acc;
    }

    Polynomial unary() {
        bool negate = false;
        while (lex_.tok().kind == Token::Plus || lex_.tok().kind == Token::Minus) {
            if (lex_.tok().kind == Token::Minus) negate = !negate;
            lex_.advance();
        }
        Polynomial v = power();
        return negate ? -v : v;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (lex_.tok().kind == Token::Caret) {
            lex_.advance();
            if (lex_.tok().kind != Token::Integer)
                throw ParseError("expected nonnegative integer exponent", lex_.tok().pos);
            Int e = lex_.tok().value;
            if (e > 4096) throw ParseError("exponent too large", lex_.tok().pos);
            lex_.advance();
            Polynomial acc(1);
            for (long k = 0; k < e.get_si(); ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial atom() {
        const Token& t = lex_.tok();
        switch (t.kind) {
            case Token::Integer: {
                Polynomial v{Rat(t.value)};
                lex_.advance();
                return v;
            }
            case Token::Var:
                lex_.advance();
                return Polynomial::variable();
            case Token::LParen: {
                lex_.advance();
                Polynomial v = expr();
                if (lex_.tok().kind != Token::RParen)
                    throw ParseError("expected ')'", lex_.tok().pos);
                lex_.advance();
                return v;
            }
            default:
                throw ParseError("expected integer, 'p' or '('", t.pos);
        }
    }

    Lexer lex_;
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace aztec
