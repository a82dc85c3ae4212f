#include "reesfb/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace reesfb::kernels {

  namespace {
    bool cpu_has_avx2() {
#if defined(REESFB_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    }

    Isa detect() {
      return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    }

    std::atomic<int>& forced() {
      static std::atomic<int> value{-1};
      return value;
    }
  }  // namespace

  char const* name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
  }

  bool available(Isa isa) {
    return isa == Isa::scalar || cpu_has_avx2();
  }

  Isa active() {
    int f = forced().load(std::memory_order_relaxed);
    if (f >= 0) {
      return static_cast<Isa>(f);
    }
    static Isa const best = detect();
    return best;
  }

  void force(std::optional<Isa> isa) {
    if (isa && !available(*isa)) {
      throw std::invalid_argument(std::string("kernel variant not available: ") + name(*isa));
    }
    forced().store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
  }

  void eval_segments(std::uint32_t const* table,
                     std::uint32_t        order,
                     std::uint32_t const* consts,
                     std::size_t          nconsts,
                     std::uint32_t const* images,
                     std::size_t          count,
                     std::uint32_t*       out) {
    if (active() == Isa::avx2) {
      avx2::eval_segments(table, order, consts, nconsts, images, count, out);
    } else {
      scalar::eval_segments(table, order, consts, nconsts, images, count, out);
    }
  }

  std::size_t first_mismatch(std::uint32_t const* a, std::uint32_t const* b, std::size_t count) {
    return active() == Isa::avx2 ? avx2::first_mismatch(a, b, count)
                                 : scalar::first_mismatch(a, b, count);
  }

}  // namespace reesfb::kernels
