// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "kernels_internal.hpp"

namespace graphlab::kernels {

namespace {

// 2 + (-1 if comparable) + (-1 if equal), per 32-bit lane.
inline __m256i distance_lanes(__m256i mask, __m256i other) {
  const __m256i common = _mm256_and_si256(mask, other);
  const __m256i sub = _mm256_cmpeq_epi32(common, mask);
  const __m256i super = _mm256_cmpeq_epi32(common, other);
  const __m256i same = _mm256_cmpeq_epi32(mask, other);
  const __m256i comparable = _mm256_or_si256(sub, super);
  return _mm256_add_epi32(_mm256_set1_epi32(2), _mm256_add_epi32(comparable, same));
}

void fill_distance_row(SubsetMask mask, std::span<const SubsetMask> masks, std::span<std::uint8_t> out) {
  const __m256i broadcast = _mm256_set1_epi32(static_cast<int>(mask));
  // packs/packus interleave 128-bit lanes; this restores source order.
  const __m256i unshuffle = _mm256_setr_epi32(0, 4, 1, 5, 2, 6, 3, 7);
  const std::size_t n = masks.size();
  std::size_t j = 0;
  for (; j + 32 <= n; j += 32) {
    const auto* src = reinterpret_cast<const __m256i*>(masks.data() + j);
    const __m256i d0 = distance_lanes(broadcast, _mm256_loadu_si256(src + 0));
    const __m256i d1 = distance_lanes(broadcast, _mm256_loadu_si256(src + 1));
    const __m256i d2 = distance_lanes(broadcast, _mm256_loadu_si256(src + 2));
    const __m256i d3 = distance_lanes(broadcast, _mm256_loadu_si256(src + 3));
    const __m256i w01 = _mm256_packs_epi32(d0, d1);
    const __m256i w23 = _mm256_packs_epi32(d2, d3);
    const __m256i bytes = _mm256_permutevar8x32_epi32(_mm256_packus_epi16(w01, w23), unshuffle);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + j), bytes);
  }
  detail::scalar_fill_distance_row(mask, masks.subspan(j), out.subspan(j));
}

std::size_t count_comparable(SubsetMask mask, std::span<const SubsetMask> masks) {
  const __m256i broadcast = _mm256_set1_epi32(static_cast<int>(mask));
  const std::size_t n = masks.size();
  std::size_t count = 0;
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    const __m256i other = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + j));
    const __m256i common = _mm256_and_si256(broadcast, other);
    const __m256i comparable =
        _mm256_or_si256(_mm256_cmpeq_epi32(common, broadcast), _mm256_cmpeq_epi32(common, other));
    const __m256i strict = _mm256_andnot_si256(_mm256_cmpeq_epi32(broadcast, other), comparable);
    count += static_cast<std::size_t>(std::popcount(
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(strict)))));
  }
  return count + detail::scalar_count_comparable(mask, masks.subspan(j));
}

CloserCounts count_closer(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  // Unsigned byte compare via sign flip.
  const __m256i flip = _mm256_set1_epi8(static_cast<char>(0x80));
  const std::size_t n = a.size();
  CloserCounts counts;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i)), flip);
    const __m256i vb = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i)), flip);
    const auto a_less = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(vb, va)));
    const auto b_less = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(va, vb)));
    counts.first += static_cast<std::size_t>(std::popcount(a_less));
    counts.second += static_cast<std::size_t>(std::popcount(b_less));
  }
  const CloserCounts tail = detail::scalar_count_closer(a.subspan(i), b.subspan(i));
  counts.first += tail.first;
  counts.second += tail.second;
  return counts;
}

std::uint64_t row_sum(std::span<const std::uint8_t> row) {
  const std::size_t n = row.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i bytes = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3] + detail::scalar_row_sum(row.subspan(i));
}

}  // namespace

namespace detail {

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", fill_distance_row, count_comparable, count_closer, row_sum};
  return table;
}

}  // namespace detail
}  // namespace graphlab::kernels
