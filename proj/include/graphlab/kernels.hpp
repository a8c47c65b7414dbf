#pragma once

// Data-parallel inner loops shared by graph_core and metric. Every kernel has
// a scalar reference implementation; an AVX2 variant is compiled on x86-64
// and picked at runtime when the CPU supports it. Variants must agree
// bit-for-bit with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace graphlab {

/// Bit i set means the (i+1)-th prime of the basis divides the vertex.
using SubsetMask = std::uint32_t;

namespace kernels {

struct CloserCounts {
  std::size_t first = 0;   // entries where a[w] < b[w]
  std::size_t second = 0;  // entries where b[w] < a[w]

  friend bool operator==(const CloserCounts&, const CloserCounts&) = default;
};

struct KernelTable {
  std::string_view name;

  /// out[j] = 0 if masks[j] == mask, 1 if one strictly contains the other,
  /// 2 otherwise. out.size() must equal masks.size().
  void (*fill_distance_row)(SubsetMask mask, std::span<const SubsetMask> masks,
                            std::span<std::uint8_t> out);

  /// Number of masks[j] != mask that are subsets or supersets of mask.
  std::size_t (*count_comparable)(SubsetMask mask, std::span<const SubsetMask> masks);

  /// Element-wise strict comparison counts of two equally sized rows.
  CloserCounts (*count_closer)(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

  std::uint64_t (*row_sum)(std::span<const std::uint8_t> row);
};

const KernelTable& scalar();

/// nullptr when AVX2 was not compiled in or the CPU lacks it.
const KernelTable* avx2();

/// Table used by the library. Chosen once: GRAPHLAB_KERNELS=scalar|avx2
/// forces a variant (falling back to scalar if unavailable), otherwise the
/// widest supported variant wins.
const KernelTable& active();

}  // namespace kernels
}  // namespace graphlab
