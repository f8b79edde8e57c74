#pragma once

#include <cstddef>

namespace lkh {

// Guard on the total Hilbert-space dimension accepted by the dense O(n^3)
// kernels (eigensolve, kron). Overridable at startup (CLI --max-dim).
std::size_t max_total_dim();
void set_max_total_dim(std::size_t n);

inline constexpr std::size_t kDefaultMaxTotalDim = 512;

}  // namespace lkh
