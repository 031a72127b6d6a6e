#pragma once

#include <cstddef>
#include <cstdint>

namespace maglab::kernels::detail {

std::int64_t sum_scalar(const std::int64_t* w, std::size_t n);
std::uint64_t sum_sq_dev_scalar(const std::int64_t* w, std::size_t n, std::int64_t center);
std::size_t count_adjacent_equal_scalar(const std::int64_t* w, std::size_t n);
std::uint64_t sum_sq_gap_dev_scalar(const std::int64_t* w, std::size_t n, std::int64_t step);

#if defined(__x86_64__) && !defined(MAGLAB_DISABLE_SIMD)
#define MAGLAB_HAVE_AVX2_KERNELS 1
std::int64_t sum_avx2(const std::int64_t* w, std::size_t n);
std::uint64_t sum_sq_dev_avx2(const std::int64_t* w, std::size_t n, std::int64_t center);
std::size_t count_adjacent_equal_avx2(const std::int64_t* w, std::size_t n);
std::uint64_t sum_sq_gap_dev_avx2(const std::int64_t* w, std::size_t n, std::int64_t step);
#endif

}  // namespace maglab::kernels::detail
