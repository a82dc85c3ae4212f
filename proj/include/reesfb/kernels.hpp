// Batched Cayley-table kernels used by the exhaustive satisfaction loop.
//
// The last variable of an identity is evaluated for many candidate images at
// once: with every other variable fixed, a side reads c0 x c1 x ... x cm for
// constants ci, and eval_segments computes it for each image of x.
//
// Scalar versions are the reference; AVX2 versions are picked at runtime when
// the CPU supports them.

#ifndef REESFB_KERNELS_HPP_
#define REESFB_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

namespace reesfb::kernels {

  enum class Isa { scalar, avx2 };

  char const* name(Isa isa);
  // Compiled in and supported by this CPU.
  bool available(Isa isa);
  // The variant used by the dispatching entry points.
  Isa active();
  // Pins a variant (tests), or restores automatic selection with nullopt.
  void force(std::optional<Isa> isa);

  // out[j] = c0 . x . c1 . x ... x . c_{n-1} with x = images[j], n = nconsts >= 1,
  // products looked up in the row-major table of the given order.
  void eval_segments(std::uint32_t const* table,
                     std::uint32_t        order,
                     std::uint32_t const* consts,
                     std::size_t          nconsts,
                     std::uint32_t const* images,
                     std::size_t          count,
                     std::uint32_t*       out);

  // Least j with a[j] != b[j], or count.
  std::size_t first_mismatch(std::uint32_t const* a, std::uint32_t const* b, std::size_t count);

  namespace scalar {
    void        eval_segments(std::uint32_t const* table,
                              std::uint32_t        order,
                              std::uint32_t const* consts,
                              std::size_t          nconsts,
                              std::uint32_t const* images,
                              std::size_t          count,
                              std::uint32_t*       out);
    std::size_t first_mismatch(std::uint32_t const* a, std::uint32_t const* b, std::size_t count);
  }  // namespace scalar

  namespace avx2 {
    void        eval_segments(std::uint32_t const* table,
                              std::uint32_t        order,
                              std::uint32_t const* consts,
                              std::size_t          nconsts,
                              std::uint32_t const* images,
                              std::size_t          count,
                              std::uint32_t*       out);
    std::size_t first_mismatch(std::uint32_t const* a, std::uint32_t const* b, std::size_t count);
  }  // namespace avx2

}  // namespace reesfb::kernels

#endif  // REESFB_KERNELS_HPP_
