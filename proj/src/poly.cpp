#include "redlab/poly.hpp"

#include <algorithm>
#include <cctype>

namespace redlab {

namespace {

void sort_and_combine(std::vector<Term>& terms, std::uint32_t p, int nv) {
    std::sort(terms.begin(), terms.end(), [nv](const Term& a, const Term& b) {
        return cmp_degrevlex(a.mono, b.mono, nv) > 0;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Mono m = terms[i].mono;
        std::uint64_t acc = 0;
        while (i < terms.size() && terms[i].mono == m) {
            acc += terms[i].c;
            ++i;
        }
        std::uint32_t c = std::uint32_t(acc % p);
        if (c != 0) terms[out++] = Term{m, c};
    }
    terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(std::uint32_t p, int nvars, std::vector<Term> terms)
    : p_(p), nvars_(nvars), terms_(std::move(terms)) {
    for (auto& t : terms_) t.c %= p_;
    sort_and_combine(terms_, p_, nvars_);
}

Polynomial poly_from_sorted(std::uint32_t p, int nvars, std::vector<Term>&& terms) {
    Polynomial f(p, nvars);
    f.terms_ = std::move(terms);
    return f;
}

Polynomial Polynomial::constant(std::uint32_t p, int nvars, std::uint32_t c) {
    Polynomial f(p, nvars);
    c %= p;
    if (c != 0) f.terms_.push_back(Term{0, c});
    return f;
}

Polynomial Polynomial::variable(std::uint32_t p, int nvars, int index, std::uint32_t exp) {
    Polynomial f(p, nvars);
    if (index < 0 || index >= nvars)
        throw VariableMismatchError("variable index out of range");
    if (exp == 0) return constant(p, nvars, 1);
    f.terms_.push_back(Term{mono_set_exp(0, index, exp), 1 % p});
    return f;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : mono_deg(terms_.front().mono, nvars_);
}

std::uint32_t Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mono == 0) return terms_.back().c;
    return 0;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return poly_scale(*this, ff_inv(terms_.front().c, p_));
}

void check_same_context(const Polynomial& a, const Polynomial& b) {
    if (a.char_p() != b.char_p() || a.nvars() != b.nvars())
        throw VariableMismatchError("polynomials from different rings");
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    check_same_context(a, b);
    const int nv = a.nvars();
    const std::uint32_t p = a.char_p();
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    while (i < a.terms().size() && j < b.terms().size()) {
        int c = cmp_degrevlex(a.terms()[i].mono, b.terms()[j].mono, nv);
        if (c > 0) {
            out.push_back(a.terms()[i++]);
        } else if (c < 0) {
            out.push_back(b.terms()[j++]);
        } else {
            std::uint32_t s = ff_add(a.terms()[i].c, b.terms()[j].c, p);
            if (s != 0) out.push_back(Term{a.terms()[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
    for (; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
    return poly_from_sorted(p, nv, std::move(out));
}

Polynomial poly_neg(const Polynomial& a) {
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.c = ff_neg(t.c, a.char_p());
    return poly_from_sorted(a.char_p(), a.nvars(), std::move(out));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    return poly_add(a, poly_neg(b));
}

Polynomial poly_scale(const Polynomial& a, std::uint32_t c) {
    c %= a.char_p();
    if (c == 0) return Polynomial::zero(a.char_p(), a.nvars());
    if (c == 1) return a;
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.c = ff_mul(t.c, c, a.char_p());
    return poly_from_sorted(a.char_p(), a.nvars(), std::move(out));
}

Polynomial poly_mul_term(const Polynomial& a, Mono mono, std::uint32_t c) {
    c %= a.char_p();
    if (c == 0) return Polynomial::zero(a.char_p(), a.nvars());
    std::vector<Term> out = a.terms();
    for (auto& t : out) {
        t.mono = mono_mul(t.mono, mono);
        t.c = ff_mul(t.c, c, a.char_p());
    }
    return poly_from_sorted(a.char_p(), a.nvars(), std::move(out));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    check_same_context(a, b);
    const std::uint32_t p = a.char_p();
    std::vector<Term> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out.push_back(Term{mono_mul(ta.mono, tb.mono), ff_mul(ta.c, tb.c, p)});
    return Polynomial(p, a.nvars(), std::move(out));
}

Polynomial poly_pow(const Polynomial& a, std::uint32_t e) {
    Polynomial r = Polynomial::constant(a.char_p(), a.nvars(), 1);
    Polynomial base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return r;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    int line, col;
    Cursor(const std::string& s_, int line0, int col0) : s(s_), line(line0), col(col0) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }
};

std::uint64_t parse_nat(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        c.fail("expected a number");
    std::uint64_t v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = v * 10 + std::uint64_t(c.s[c.i] - '0');
        if (v > (std::uint64_t(1) << 62)) c.fail("number too large");
        c.advance();
    }
    return v;
}

std::string parse_ident(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() ||
        !(std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        c.fail("expected a variable name");
    std::string id;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_')) {
        id.push_back(c.s[c.i]);
        c.advance();
    }
    return id;
}

}  // namespace

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars,
                      std::uint32_t p, int line_offset, int col_offset) {
    if (int(vars.size()) > kMaxVars - 1)
        throw VariableMismatchError("at most 3 ring variables are supported");
    Cursor c(text, line_offset, col_offset);
    std::vector<Term> terms;
    bool first = true;
    std::uint32_t sign = 1;
    while (true) {
        if (first) {
            if (c.done()) c.fail("empty polynomial");
            if (c.peek() == '-') {
                c.advance();
                sign = p - 1;
            }
            first = false;
        } else {
            if (c.done()) break;
            char op = c.peek();
            if (op == '+') {
                sign = 1;
            } else if (op == '-') {
                sign = p - 1;
            } else {
                c.fail(std::string("unexpected character '") + op + "'");
            }
            c.advance();
        }
        // one term
        std::uint32_t coeff = sign;
        bool saw_factor = false;
        Mono mono = 0;
        c.skip_ws();
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            coeff = ff_mul(coeff, std::uint32_t(parse_nat(c) % p), p);
            saw_factor = true;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') {
                c.advance();
                saw_factor = false;
            }
        }
        while (!saw_factor ||
               (c.peek() == '*')) {
            if (c.peek() == '*') c.advance();
            std::string id = parse_ident(c);
            int idx = -1;
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (vars[k] == id) idx = int(k);
            if (idx < 0) c.fail("unknown variable '" + id + "'");
            std::uint64_t e = 1;
            if (c.peek() == '^') {
                c.advance();
                e = parse_nat(c);
                if (e > 10000) c.fail("exponent too large");
            }
            mono = mono_set_exp(mono, idx, mono_exp(mono, idx) + std::uint32_t(e));
            saw_factor = true;
            c.skip_ws();
            if (c.i >= c.s.size() || c.s[c.i] != '*') break;
        }
        terms.push_back(Term{mono, coeff});
    }
    return Polynomial(p, int(vars.size()), std::move(terms));
}

std::string format_poly(const Polynomial& f, const std::vector<std::string>& vars) {
    if (int(vars.size()) != f.nvars())
        throw VariableMismatchError("variable list does not match polynomial");
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const Term& t = f.terms()[i];
        if (i) out += " + ";
        std::string factors;
        for (int v = 0; v < f.nvars(); ++v) {
            std::uint32_t e = mono_exp(t.mono, v);
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars[v];
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += factors;
        } else {
            out += std::to_string(t.c) + "*" + factors;
        }
    }
    return out;
}

}  // namespace redlab
