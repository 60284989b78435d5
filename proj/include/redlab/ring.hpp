#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "redlab/poly.hpp"

namespace redlab {

struct RingMismatchError : std::runtime_error {
    RingMismatchError() : std::runtime_error("ideals live over different rings") {}
};

// Ambient polynomial ring F_p[vars] modulo the `defining` ideal, always read
// locally at the origin.  `equidimensional` is a caller-supplied promise that
// enables the multiplicity-based certificate; it is never verified here.
class RingSpec {
public:
    RingSpec(std::uint32_t p, std::vector<std::string> vars, std::vector<Polynomial> defining,
             bool equidimensional);

    std::uint32_t char_p() const { return p_; }
    int nvars() const { return int(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& defining() const { return defining_; }
    bool local_at_origin() const { return true; }
    bool equidimensional() const { return equidim_; }

    bool same_as(const RingSpec& other) const;

    // Memo slot for the Krull dimension of the ring itself (-9 = unset).
    mutable std::atomic<int> dim_memo{-9};

private:
    std::uint32_t p_;
    std::vector<std::string> vars_;
    std::vector<Polynomial> defining_;
    bool equidim_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::uint32_t p, const std::vector<std::string>& vars,
                  const std::vector<std::string>& defining_texts, bool equidimensional);
RingPtr make_ring(std::uint32_t p, const std::vector<std::string>& vars,
                  std::vector<Polynomial> defining, bool equidimensional);

}  // namespace redlab
