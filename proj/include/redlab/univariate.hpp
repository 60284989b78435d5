#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "redlab/poly.hpp"

namespace redlab {

struct NotCoprimeError : std::runtime_error {
    std::size_t i, j;
    NotCoprimeError(std::size_t i_, std::size_t j_)
        : std::runtime_error("moduli " + std::to_string(i_) + " and " + std::to_string(j_) +
                             " are not coprime"),
          i(i_), j(j_) {}
};

struct LengthMismatchError : std::runtime_error {
    LengthMismatchError() : std::runtime_error("residue and modulus lists differ in length") {}
};

// Dense univariate polynomial over F_p: coefficient of y^i at index i,
// no trailing zeros.  Degree of the zero polynomial is -1.
using UPoly = std::vector<std::uint32_t>;

int u_deg(const UPoly& f);
UPoly u_trim(UPoly f);
UPoly u_add(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly u_sub(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly u_mul(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly u_scale(const UPoly& a, std::uint32_t c, std::uint32_t p);
bool u_is_monic(const UPoly& f);
// quotient/remainder by a nonzero divisor
std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly u_mod(const UPoly& a, const UPoly& b, std::uint32_t p);
UPoly u_gcd(UPoly a, UPoly b, std::uint32_t p);  // monic gcd, or zero
// g = gcd(a,b) monic together with s,t such that s*a + t*b = g
struct UExtGcd { UPoly g, s, t; };
UExtGcd u_ext_gcd(const UPoly& a, const UPoly& b, std::uint32_t p);

bool u_is_irreducible(const UPoly& f, std::uint32_t p);  // trial division

// Monic univariate polynomials in (degree, ascending coefficient) order,
// skipping constants: y, y+1, ..., y^2, y^2+1, ...
UPoly u_nth_monic(std::uint64_t index, std::uint32_t p);
// First `count` monic irreducibles in that same order.
std::vector<UPoly> u_first_irreducibles(std::size_t count, std::uint32_t p);

// Simultaneous congruences x = residues[i] mod moduli[i] for monic pairwise
// coprime moduli; the result has degree < sum of the moduli degrees.
UPoly crt_univariate(const std::vector<UPoly>& residues, const std::vector<UPoly>& moduli,
                     std::uint32_t p);

// Conversions between the dense form and sparse one-variable Polynomials.
UPoly to_upoly(const Polynomial& f);
Polynomial from_upoly(const UPoly& f, std::uint32_t p);

}  // namespace redlab
