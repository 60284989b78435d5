#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redlab {

struct ZeroInverseError : std::runtime_error {
    ZeroInverseError() : std::runtime_error("inverse of zero in F_p") {}
};

// Coefficients live in [0, p).  p is a prime < 2^31, so products fit in 64 bits.
inline std::uint32_t ff_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p) s -= p;
    return std::uint32_t(s);
}

inline std::uint32_t ff_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t ff_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return ff_add(a, ff_neg(b, p), p);
}

inline std::uint32_t ff_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t((std::uint64_t(a) * b) % p);
}

inline std::uint32_t ff_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    std::uint32_t base = a % p;
    while (e) {
        if (e & 1) r = ff_mul(r, base, p);
        base = ff_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t ff_inv(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw ZeroInverseError();
    return ff_pow(a, p - 2, p);   // p prime
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace redlab
