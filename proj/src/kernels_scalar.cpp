#include "reesfb/kernels.hpp"

namespace reesfb::kernels::scalar {

  void eval_segments(std::uint32_t const* table,
                     std::uint32_t        order,
                     std::uint32_t const* consts,
                     std::size_t          nconsts,
                     std::uint32_t const* images,
                     std::size_t          count,
                     std::uint32_t*       out) {
    std::size_t const n = order;
    for (std::size_t j = 0; j < count; ++j) {
      std::uint32_t acc = consts[0];
      std::uint32_t x   = images[j];
      for (std::size_t i = 1; i < nconsts; ++i) {
        acc = table[acc * n + x];
        acc = table[acc * n + consts[i]];
      }
      out[j] = acc;
    }
  }

  std::size_t first_mismatch(std::uint32_t const* a, std::uint32_t const* b, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
      if (a[j] != b[j]) {
        return j;
      }
    }
    return count;
  }

}  // namespace reesfb::kernels::scalar
