#pragma once

#include <cstdint>

namespace orbitmat {

// Indices into the local domain {1..n} and values of the local function
// (0 is the absorbing "outside" value). n is capped so everything fits.
using index_t = std::uint32_t;

inline constexpr index_t kMaxDomain = 0x7fffffff;

// Dense exact-arithmetic verification is O(n^3); keep it off the hot path.
inline constexpr index_t kDefaultOracleBound = 512;

// Sparsity plots get unwieldy past this edge length.
inline constexpr index_t kMaxSvgDim = 4096;

}  // namespace orbitmat
