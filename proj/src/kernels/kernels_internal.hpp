#pragma once

// Scalar entry points reused by vector variants for their tails.

#include "graphlab/kernels.hpp"

namespace graphlab::kernels::detail {

void scalar_fill_distance_row(SubsetMask mask, std::span<const SubsetMask> masks, std::span<std::uint8_t> out);
std::size_t scalar_count_comparable(SubsetMask mask, std::span<const SubsetMask> masks);
CloserCounts scalar_count_closer(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
std::uint64_t scalar_row_sum(std::span<const std::uint8_t> row);

#if defined(GRAPHLAB_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace graphlab::kernels::detail
