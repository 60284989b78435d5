#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "redlab/field.hpp"
#include "redlab/monomial.hpp"

namespace redlab {

struct VariableMismatchError : std::runtime_error {
    explicit VariableMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

struct Term {
    Mono mono = 0;
    std::uint32_t c = 0;
};

// Sparse polynomial over F_p.  Terms are kept sorted in strictly descending
// degrevlex order, coefficients nonzero and reduced mod p.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::uint32_t p, int nvars) : p_(p), nvars_(nvars) {}
    Polynomial(std::uint32_t p, int nvars, std::vector<Term> terms);

    static Polynomial zero(std::uint32_t p, int nvars) { return Polynomial(p, nvars); }
    static Polynomial constant(std::uint32_t p, int nvars, std::uint32_t c);
    static Polynomial variable(std::uint32_t p, int nvars, int index, std::uint32_t exp = 1);

    std::uint32_t char_p() const { return p_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading() const;
    std::uint32_t total_degree() const;   // 0 for the zero polynomial
    std::uint32_t constant_term() const;

    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.p_ != b.p_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].c != b.terms_[i].c)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::uint32_t p_ = 2;
    int nvars_ = 0;
    std::vector<Term> terms_;
    friend Polynomial poly_from_sorted(std::uint32_t, int, std::vector<Term>&&);
};

// Trusts that `terms` is already sorted, combined and coefficient-reduced.
Polynomial poly_from_sorted(std::uint32_t p, int nvars, std::vector<Term>&& terms);

void check_same_context(const Polynomial& a, const Polynomial& b);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, std::uint32_t c);
// a * c * x^mono
Polynomial poly_mul_term(const Polynomial& a, Mono mono, std::uint32_t c);
Polynomial poly_pow(const Polynomial& a, std::uint32_t e);

// Grammar: poly := [-] term { (+|-) term }
//          term := nat | nat '*' factors | factors
//          factors := varpow { '*' varpow }
//          varpow := var [ '^' nat ]
// Whitespace is ignored; naturals are reduced mod p; '-' multiplies by p-1.
Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars,
                      std::uint32_t p, int line_offset = 1, int col_offset = 1);

std::string format_poly(const Polynomial& f, const std::vector<std::string>& vars);

}  // namespace redlab
