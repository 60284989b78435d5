#pragma once

#include <cassert>
#include <cstdint>

namespace redlab {

// A monomial is an exponent vector packed into one 64-bit word, 16 bits per
// variable, variable 0 in the low lanes.  Four lanes are enough for three ring
// variables plus the auxiliary variable used during elimination.
using Mono = std::uint64_t;

constexpr int kMaxVars = 4;
constexpr unsigned kLaneBits = 16;
constexpr Mono kLaneMask = 0xffffu;

inline std::uint32_t mono_exp(Mono m, int i) {
    return std::uint32_t((m >> (kLaneBits * i)) & kLaneMask);
}

inline Mono mono_set_exp(Mono m, int i, std::uint32_t e) {
    Mono cleared = m & ~(kLaneMask << (kLaneBits * i));
    return cleared | (Mono(e & kLaneMask) << (kLaneBits * i));
}

inline std::uint32_t mono_deg(Mono m, int nv) {
    std::uint32_t d = 0;
    for (int i = 0; i < nv; ++i) d += mono_exp(m, i);
    return d;
}

inline Mono mono_mul(Mono a, Mono b) {
    // Valid while no lane overflows; degrees stay far below 2^16 here.
    return a + b;
}

inline bool mono_divides(Mono a, Mono b) {
    // a | b, i.e. every exponent of a is <= that of b.
    for (int i = 0; i < kMaxVars; ++i)
        if (mono_exp(a, i) > mono_exp(b, i)) return false;
    return true;
}

inline Mono mono_div(Mono b, Mono a) {
    assert(mono_divides(a, b));
    return b - a;
}

inline Mono mono_lcm(Mono a, Mono b) {
    Mono r = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        std::uint32_t e = mono_exp(a, i) > mono_exp(b, i) ? mono_exp(a, i) : mono_exp(b, i);
        r = mono_set_exp(r, i, e);
    }
    return r;
}

inline bool mono_coprime(Mono a, Mono b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (mono_exp(a, i) > 0 && mono_exp(b, i) > 0) return false;
    return true;
}

// Graded reverse lexicographic: higher total degree wins; on ties the
// monomial with the smaller exponent in the last differing variable wins.
inline int cmp_degrevlex(Mono a, Mono b, int nv) {
    if (a == b) return 0;
    std::uint32_t da = mono_deg(a, nv), db = mono_deg(b, nv);
    if (da != db) return da < db ? -1 : 1;
    for (int i = nv - 1; i >= 0; --i) {
        std::uint32_t ea = mono_exp(a, i), eb = mono_exp(b, i);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

inline int cmp_lex(Mono a, Mono b, int nv) {
    for (int i = 0; i < nv; ++i) {
        std::uint32_t ea = mono_exp(a, i), eb = mono_exp(b, i);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

// Order used by ideal operations.  `elim_lane >= 0` selects a block order
// that eliminates that one lane ahead of a degrevlex tail on the others.
struct TermOrder {
    enum Kind { kDegrevlex, kLex } kind = kDegrevlex;
    int nvars = 2;
    int elim_lane = -1;

    int cmp(Mono a, Mono b) const {
        if (elim_lane >= 0) {
            std::uint32_t ea = mono_exp(a, elim_lane), eb = mono_exp(b, elim_lane);
            if (ea != eb) return ea < eb ? -1 : 1;
            Mono ra = mono_set_exp(a, elim_lane, 0), rb = mono_set_exp(b, elim_lane, 0);
            return cmp_degrevlex(ra, rb, nvars);
        }
        return kind == kDegrevlex ? cmp_degrevlex(a, b, nvars) : cmp_lex(a, b, nvars);
    }
    bool less(Mono a, Mono b) const { return cmp(a, b) < 0; }
};

}  // namespace redlab
