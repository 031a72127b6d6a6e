#include "kernels_impl.hpp"

#ifdef MAGLAB_HAVE_AVX2_KERNELS

#include <immintrin.h>

// Compiled with per-function target attributes so the rest of the library
// keeps the baseline ISA and no inline STL code is emitted with AVX2.
#define MAGLAB_AVX2 __attribute__((target("avx2,popcnt")))

namespace maglab::kernels::detail {

namespace {

MAGLAB_AVX2 inline std::uint64_t hsum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Nonzero lanes where x is outside the int32 range.
MAGLAB_AVX2 inline __m256i out_of_i32(__m256i x) {
  const __m256i bias = _mm256_set1_epi64x(0x80000000LL);
  return _mm256_srli_epi64(_mm256_add_epi64(x, bias), 32);
}

}  // namespace

MAGLAB_AVX2 std::int64_t sum_avx2(const std::int64_t* w, std::size_t n) {
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_epi64(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i)));
    acc1 = _mm256_add_epi64(acc1, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i + 4)));
  }
  std::uint64_t acc = hsum(_mm256_add_epi64(acc0, acc1));
  for (; i < n; ++i) acc += static_cast<std::uint64_t>(w[i]);
  return static_cast<std::int64_t>(acc);
}

MAGLAB_AVX2 std::uint64_t sum_sq_dev_avx2(const std::int64_t* w, std::size_t n,
                                          std::int64_t center) {
  const __m256i c = _mm256_set1_epi64x(center);
  __m256i acc = _mm256_setzero_si256();
  __m256i overflow = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d =
        _mm256_sub_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i)), c);
    overflow = _mm256_or_si256(overflow, out_of_i32(d));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(d, d));
  }
  if (!_mm256_testz_si256(overflow, overflow)) return sum_sq_dev_scalar(w, n, center);
  std::uint64_t total = hsum(acc);
  for (; i < n; ++i) {
    const auto d = static_cast<std::uint64_t>(w[i]) - static_cast<std::uint64_t>(center);
    total += d * d;
  }
  return total;
}

MAGLAB_AVX2 std::size_t count_adjacent_equal_avx2(const std::int64_t* w, std::size_t n) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 < n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i + 1));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(a, b)));
    count += static_cast<std::size_t>(_mm_popcnt_u32(static_cast<unsigned>(mask)));
  }
  for (; i + 1 < n; ++i) count += w[i] == w[i + 1];
  return count;
}

MAGLAB_AVX2 std::uint64_t sum_sq_gap_dev_avx2(const std::int64_t* w, std::size_t n,
                                              std::int64_t step) {
  const __m256i s = _mm256_set1_epi64x(step);
  __m256i acc = _mm256_setzero_si256();
  __m256i overflow = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 < n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i + 1));
    const __m256i d = _mm256_sub_epi64(_mm256_sub_epi64(b, a), s);
    overflow = _mm256_or_si256(overflow, out_of_i32(d));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(d, d));
  }
  if (!_mm256_testz_si256(overflow, overflow)) return sum_sq_gap_dev_scalar(w, n, step);
  std::uint64_t total = hsum(acc);
  for (; i + 1 < n; ++i) {
    const auto d = static_cast<std::uint64_t>(w[i + 1]) - static_cast<std::uint64_t>(w[i]) -
                   static_cast<std::uint64_t>(step);
    total += d * d;
  }
  return total;
}

}  // namespace maglab::kernels::detail

#endif  // MAGLAB_HAVE_AVX2_KERNELS
