#include "kernels_impl.hpp"

namespace maglab::kernels::detail {

std::int64_t sum_scalar(const std::int64_t* w, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::uint64_t>(w[i]);
  return static_cast<std::int64_t>(acc);
}

std::uint64_t sum_sq_dev_scalar(const std::int64_t* w, std::size_t n, std::int64_t center) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = static_cast<std::uint64_t>(w[i]) - static_cast<std::uint64_t>(center);
    acc += d * d;
  }
  return acc;
}

std::size_t count_adjacent_equal_scalar(const std::int64_t* w, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) count += w[i] == w[i + 1];
  return count;
}

std::uint64_t sum_sq_gap_dev_scalar(const std::int64_t* w, std::size_t n, std::int64_t step) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto d = static_cast<std::uint64_t>(w[i + 1]) - static_cast<std::uint64_t>(w[i]) -
                   static_cast<std::uint64_t>(step);
    acc += d * d;
  }
  return acc;
}

}  // namespace maglab::kernels::detail
