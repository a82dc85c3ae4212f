#include "reesfb/kernels.hpp"

#include <stdexcept>

#if defined(REESFB_BUILD_AVX2)
#include <immintrin.h>
#endif

namespace reesfb::kernels::avx2 {

#if defined(REESFB_BUILD_AVX2)

  void eval_segments(std::uint32_t const* table,
                     std::uint32_t        order,
                     std::uint32_t const* consts,
                     std::size_t          nconsts,
                     std::uint32_t const* images,
                     std::size_t          count,
                     std::uint32_t*       out) {
    // Table indices acc * order + b stay below 2^31 for supported orders, so
    // the signed 32-bit gather is safe.
    auto const* base   = reinterpret_cast<int const*>(table);
    __m256i     vorder = _mm256_set1_epi32(static_cast<int>(order));
    std::size_t j      = 0;
    for (; j + 8 <= count; j += 8) {
      __m256i x   = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(images + j));
      __m256i acc = _mm256_set1_epi32(static_cast<int>(consts[0]));
      for (std::size_t i = 1; i < nconsts; ++i) {
        __m256i row = _mm256_mullo_epi32(acc, vorder);
        acc         = _mm256_i32gather_epi32(base, _mm256_add_epi32(row, x), 4);
        row         = _mm256_mullo_epi32(acc, vorder);
        acc         = _mm256_i32gather_epi32(
            base, _mm256_add_epi32(row, _mm256_set1_epi32(static_cast<int>(consts[i]))), 4);
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), acc);
    }
    if (j < count) {
      scalar::eval_segments(table, order, consts, nconsts, images + j, count - j, out + j);
    }
  }

  std::size_t first_mismatch(std::uint32_t const* a, std::uint32_t const* b, std::size_t count) {
    std::size_t j = 0;
    for (; j + 8 <= count; j += 8) {
      __m256i va   = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + j));
      __m256i vb   = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + j));
      auto    mask = static_cast<unsigned>(
          _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
      if (mask != 0xFFu) {
        return j + static_cast<std::size_t>(__builtin_ctz(~mask & 0xFFu));
      }
    }
    return j + scalar::first_mismatch(a + j, b + j, count - j);
  }

#else

  void eval_segments(std::uint32_t const*,
                     std::uint32_t,
                     std::uint32_t const*,
                     std::size_t,
                     std::uint32_t const*,
                     std::size_t,
                     std::uint32_t*) {
    throw std::logic_error("AVX2 kernels were not compiled in");
  }

  std::size_t first_mismatch(std::uint32_t const*, std::uint32_t const*, std::size_t) {
    throw std::logic_error("AVX2 kernels were not compiled in");
  }

#endif

}  // namespace reesfb::kernels::avx2
