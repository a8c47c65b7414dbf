#include "graphlab/kernels.hpp"

#include "kernels_internal.hpp"

namespace graphlab::kernels {

namespace {

void fill_distance_row(SubsetMask mask, std::span<const SubsetMask> masks, std::span<std::uint8_t> out) {
  for (std::size_t j = 0; j < masks.size(); ++j) {
    const SubsetMask common = mask & masks[j];
    const bool comparable = common == mask || common == masks[j];
    out[j] = masks[j] == mask ? 0 : (comparable ? 1 : 2);
  }
}

std::size_t count_comparable(SubsetMask mask, std::span<const SubsetMask> masks) {
  std::size_t count = 0;
  for (const SubsetMask other : masks) {
    const SubsetMask common = mask & other;
    if (other != mask && (common == mask || common == other)) {
      ++count;
    }
  }
  return count;
}

CloserCounts count_closer(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  CloserCounts counts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    counts.first += a[i] < b[i] ? 1 : 0;
    counts.second += b[i] < a[i] ? 1 : 0;
  }
  return counts;
}

std::uint64_t row_sum(std::span<const std::uint8_t> row) {
  std::uint64_t sum = 0;
  for (const std::uint8_t value : row) {
    sum += value;
  }
  return sum;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", fill_distance_row, count_comparable, count_closer, row_sum};
  return table;
}

namespace detail {

void scalar_fill_distance_row(SubsetMask mask, std::span<const SubsetMask> masks, std::span<std::uint8_t> out) {
  fill_distance_row(mask, masks, out);
}

std::size_t scalar_count_comparable(SubsetMask mask, std::span<const SubsetMask> masks) {
  return count_comparable(mask, masks);
}

CloserCounts scalar_count_closer(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  return count_closer(a, b);
}

std::uint64_t scalar_row_sum(std::span<const std::uint8_t> row) { return row_sum(row); }

}  // namespace detail
}  // namespace graphlab::kernels
