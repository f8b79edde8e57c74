#include "lkh/config.hpp"

#include <atomic>

namespace lkh {

namespace {
std::atomic<std::size_t> g_max_total_dim{kDefaultMaxTotalDim};
}

std::size_t max_total_dim() { return g_max_total_dim.load(std::memory_order_relaxed); }

void set_max_total_dim(std::size_t n) { g_max_total_dim.store(n, std::memory_order_relaxed); }

}  // namespace lkh
