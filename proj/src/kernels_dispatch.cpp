#include "maglab/kernels.hpp"

#include "kernels_impl.hpp"

namespace maglab::kernels {

namespace {

constexpr KernelTable kScalar{
    "scalar",
    detail::sum_scalar,
    detail::sum_sq_dev_scalar,
    detail::count_adjacent_equal_scalar,
    detail::sum_sq_gap_dev_scalar,
};

#ifdef MAGLAB_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{
    "avx2",
    detail::sum_avx2,
    detail::sum_sq_dev_avx2,
    detail::count_adjacent_equal_avx2,
    detail::sum_sq_gap_dev_avx2,
};
#endif

}  // namespace

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() {
#ifdef MAGLAB_HAVE_AVX2_KERNELS
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* table = avx2() ? avx2() : &kScalar;
  return *table;
}

}  // namespace maglab::kernels
