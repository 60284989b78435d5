#include "redlab/univariate.hpp"

#include <algorithm>

namespace redlab {

int u_deg(const UPoly& f) { return int(f.size()) - 1; }

UPoly u_trim(UPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

UPoly u_add(const UPoly& a, const UPoly& b, std::uint32_t p) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = ff_add(x, y, p);
    }
    return u_trim(std::move(r));
}

UPoly u_sub(const UPoly& a, const UPoly& b, std::uint32_t p) {
    UPoly nb = b;
    for (auto& c : nb) c = ff_neg(c, p);
    return u_add(a, nb, p);
}

UPoly u_mul(const UPoly& a, const UPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = ff_add(r[i + j], ff_mul(a[i], b[j], p), p);
    }
    return u_trim(std::move(r));
}

UPoly u_scale(const UPoly& a, std::uint32_t c, std::uint32_t p) {
    c %= p;
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x = ff_mul(x, c, p);
    return r;
}

bool u_is_monic(const UPoly& f) { return !f.empty() && f.back() == 1; }

std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b, std::uint32_t p) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    UPoly rem = a, q;
    int db = u_deg(b);
    std::uint32_t inv_lead = ff_inv(b.back(), p);
    while (u_deg(rem) >= db) {
        int shift = u_deg(rem) - db;
        std::uint32_t c = ff_mul(rem.back(), inv_lead, p);
        if (int(q.size()) < shift + 1) q.resize(shift + 1, 0);
        q[shift] = ff_add(q[shift], c, p);
        for (int i = 0; i <= db; ++i)
            rem[i + shift] = ff_sub(rem[i + shift], ff_mul(c, b[i], p), p);
        rem = u_trim(std::move(rem));
    }
    return {u_trim(std::move(q)), rem};
}

UPoly u_mod(const UPoly& a, const UPoly& b, std::uint32_t p) {
    return u_divmod(a, b, p).second;
}

UPoly u_gcd(UPoly a, UPoly b, std::uint32_t p) {
    while (!b.empty()) {
        UPoly r = u_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = u_scale(a, ff_inv(a.back(), p), p);
    return a;
}

UExtGcd u_ext_gcd(const UPoly& a, const UPoly& b, std::uint32_t p) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = {1}, s1 = {};
    UPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = u_divmod(r0, r1, p);
        UPoly s2 = u_sub(s0, u_mul(q, s1, p), p);
        UPoly t2 = u_sub(t0, u_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.empty()) {
        std::uint32_t inv = ff_inv(r0.back(), p);
        r0 = u_scale(r0, inv, p);
        s0 = u_scale(s0, inv, p);
        t0 = u_scale(t0, inv, p);
    }
    return {r0, s0, t0};
}

bool u_is_irreducible(const UPoly& f, std::uint32_t p) {
    int d = u_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            UPoly g(dd + 1, 0);
            g[dd] = 1;
            std::uint64_t w = v;
            for (int i = 0; i < dd; ++i) {
                g[i] = std::uint32_t(w % p);
                w /= p;
            }
            if (u_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

UPoly u_nth_monic(std::uint64_t index, std::uint32_t p) {
    int d = 1;
    std::uint64_t block = p;  // monic polynomials of degree d
    while (index >= block) {
        index -= block;
        ++d;
        block *= p;
    }
    UPoly g(d + 1, 0);
    g[d] = 1;
    std::uint64_t w = index;
    for (int i = 0; i < d; ++i) {
        g[i] = std::uint32_t(w % p);
        w /= p;
    }
    return g;
}

std::vector<UPoly> u_first_irreducibles(std::size_t count, std::uint32_t p) {
    std::vector<UPoly> out;
    for (std::uint64_t idx = 0; out.size() < count; ++idx) {
        UPoly g = u_nth_monic(idx, p);
        if (u_is_irreducible(g, p)) out.push_back(std::move(g));
    }
    return out;
}

UPoly crt_univariate(const std::vector<UPoly>& residues, const std::vector<UPoly>& moduli,
                     std::uint32_t p) {
    if (residues.size() != moduli.size()) throw LengthMismatchError();
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (!u_is_monic(moduli[i]) || u_deg(moduli[i]) < 1)
            throw std::invalid_argument("modulus " + std::to_string(i) + " is not monic nonconstant");
        if (u_deg(residues[i]) >= u_deg(moduli[i]))
            throw std::invalid_argument("residue " + std::to_string(i) + " not reduced");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (u_deg(u_gcd(moduli[i], moduli[j], p)) != 0) throw NotCoprimeError(i, j);

    UPoly M = {1};
    for (const auto& m : moduli) M = u_mul(M, m, p);
    UPoly x = {};
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        UPoly Mi = u_divmod(M, moduli[i], p).first;
        // Mi is invertible mod moduli[i] by pairwise coprimality.
        UExtGcd e = u_ext_gcd(u_mod(Mi, moduli[i], p), moduli[i], p);
        UPoly term = u_mul(u_mul(residues[i], e.s, p), Mi, p);
        x = u_add(x, term, p);
    }
    x = u_mod(x, M, p);
    // The construction is verified, not trusted.
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (u_mod(u_sub(x, residues[i], p), moduli[i], p) != UPoly{})
            throw std::logic_error("crt result failed residue verification");
    return x;
}

UPoly to_upoly(const Polynomial& f) {
    if (f.nvars() != 1) throw VariableMismatchError("expected a univariate polynomial");
    UPoly r;
    for (const auto& t : f.terms()) {
        std::uint32_t e = mono_exp(t.mono, 0);
        if (r.size() < e + 1) r.resize(e + 1, 0);
        r[e] = t.c;
    }
    return u_trim(std::move(r));
}

Polynomial from_upoly(const UPoly& f, std::uint32_t p) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) terms.push_back(Term{mono_set_exp(0, 0, std::uint32_t(i)), f[i]});
    return Polynomial(p, 1, std::move(terms));
}

}  // namespace redlab
