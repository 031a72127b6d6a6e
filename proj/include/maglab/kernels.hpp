#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Integer reductions over weight vectors used by the objective functions.
//
// Every variant computes bit-identical results: sums wrap modulo 2^64 exactly
// like the scalar reference. Vector variants fall back to the scalar
// reference when a squared term would not fit their 32x32->64 multiply.
namespace maglab::kernels {

struct KernelTable {
  std::string_view isa;
  /// sum of w
  std::int64_t (*sum)(const std::int64_t* w, std::size_t n);
  /// sum of (w[i] - center)^2
  std::uint64_t (*sum_sq_dev)(const std::int64_t* w, std::size_t n, std::int64_t center);
  /// number of i with w[i] == w[i+1]
  std::size_t (*count_adjacent_equal)(const std::int64_t* w, std::size_t n);
  /// sum of (w[i+1] - w[i] - step)^2
  std::uint64_t (*sum_sq_gap_dev)(const std::int64_t* w, std::size_t n, std::int64_t step);
};

const KernelTable& scalar();
/// nullptr when the CPU or the build lacks AVX2.
const KernelTable* avx2();
/// Best table for this CPU, chosen once at first use.
const KernelTable& active();

inline std::int64_t sum(std::span<const std::int64_t> w) { return active().sum(w.data(), w.size()); }
inline std::uint64_t sum_sq_dev(std::span<const std::int64_t> w, std::int64_t center) {
  return active().sum_sq_dev(w.data(), w.size(), center);
}
inline std::size_t count_adjacent_equal(std::span<const std::int64_t> w) {
  return active().count_adjacent_equal(w.data(), w.size());
}
inline std::uint64_t sum_sq_gap_dev(std::span<const std::int64_t> w, std::int64_t step) {
  return active().sum_sq_gap_dev(w.data(), w.size(), step);
}

}  // namespace maglab::kernels
