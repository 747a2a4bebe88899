#pragma once

#include <cstdint>

#include "nsk/field.hpp"

namespace nsk {

/// Deterministic 64-bit stream (splitmix64). Used instead of the standard
/// distributions so identical seeds give identical fields on every platform.
class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [-1, 1).
    double next_symmetric() {
        return 2.0 * (next_u64() >> 11) * 0x1.0p-53 - 1.0;
    }

  private:
    std::uint64_t state_;
};

/// Smooth random field built from modes |m_i| <= max_mode with seeded
/// coefficients, normalized to unit max norm. The construction is
/// resolution-independent: the same seed yields samples of the same
/// trigonometric polynomial on any grid, which is what refinement studies
/// compare against.
ScalarField band_limited_random(const Grid& g, int max_mode, std::uint64_t seed);

} // namespace nsk
