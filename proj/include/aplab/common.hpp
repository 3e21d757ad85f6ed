#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aplab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Thrown when an internal exactness self-check fails.  This is never a
// recoverable user error: it means the kernel itself is wrong.
struct KernelBug : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void kernel_check(bool cond, const std::string& msg) {
  if (!cond) throw KernelBug(msg);
}

}  // namespace aplab
