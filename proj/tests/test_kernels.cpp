#include <random>
#include <vector>

#include "doctest.h"
#include "graphlab/kernels.hpp"

using namespace graphlab;

namespace {

std::vector<const kernels::KernelTable*> variants() {
  std::vector<const kernels::KernelTable*> out{&kernels::scalar()};
  if (const auto* wide = kernels::avx2()) {
    out.push_back(wide);
  }
  return out;
}

std::vector<SubsetMask> random_masks(std::mt19937& rng, std::size_t n, unsigned bits) {
  std::vector<SubsetMask> masks(n);
  for (auto& m : masks) {
    m = static_cast<SubsetMask>(rng()) & ((1U << bits) - 1U);
  }
  return masks;
}

std::vector<std::uint8_t> random_row(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint8_t> row(n);
  for (auto& x : row) {
    // Full byte range to exercise the unsigned comparison.
    x = static_cast<std::uint8_t>(rng());
  }
  return row;
}

}  // namespace

TEST_CASE("scalar reference on small inputs") {
  const auto& k = kernels::scalar();
  const std::vector<SubsetMask> masks{0b000, 0b001, 0b010, 0b011, 0b111};
  std::vector<std::uint8_t> out(masks.size());
  k.fill_distance_row(0b001, masks, out);
  CHECK(out == std::vector<std::uint8_t>{1, 0, 2, 1, 1});
  CHECK(k.count_comparable(0b001, masks) == 3);
  CHECK(k.count_comparable(0b000, masks) == 4);
  const std::vector<std::uint8_t> a{0, 1, 2, 2};
  const std::vector<std::uint8_t> b{1, 0, 2, 1};
  CHECK(k.count_closer(a, b) == kernels::CloserCounts{1, 2});
  CHECK(k.row_sum(a) == 5);
  CHECK(k.row_sum({}) == 0);
}

TEST_CASE("active table is one of the variants") {
  const auto& active = kernels::active();
  bool found = false;
  for (const auto* v : variants()) {
    found = found || v == &active;
  }
  CHECK(found);
}

TEST_CASE("variants agree with the scalar reference") {
  std::mt19937 rng(12345);
  const auto& reference = kernels::scalar();
  for (const auto* variant : variants()) {
    CAPTURE(variant->name);
    for (std::size_t n : {0U, 1U, 7U, 8U, 9U, 31U, 32U, 33U, 63U, 64U, 65U, 100U, 255U, 1000U, 1027U}) {
      CAPTURE(n);
      for (unsigned bits : {1U, 3U, 10U, 20U, 32U}) {
        const auto masks = random_masks(rng, n, bits == 32 ? 31 : bits);
        const SubsetMask pivot = n > 0 && rng() % 2 ? masks[rng() % n] : static_cast<SubsetMask>(rng() & 0xFF);
        std::vector<std::uint8_t> expected(n);
        std::vector<std::uint8_t> actual(n, 0xEE);
        reference.fill_distance_row(pivot, masks, expected);
        variant->fill_distance_row(pivot, masks, actual);
        REQUIRE(actual == expected);
        REQUIRE(variant->count_comparable(pivot, masks) == reference.count_comparable(pivot, masks));
      }
      const auto a = random_row(rng, n);
      const auto b = random_row(rng, n);
      REQUIRE(variant->count_closer(a, b) == reference.count_closer(a, b));
      REQUIRE(variant->count_closer(a, a) == kernels::CloserCounts{0, 0});
      REQUIRE(variant->row_sum(a) == reference.row_sum(a));
    }
  }
}

TEST_CASE("variants agree on the complete Boolean lattice") {
  std::vector<SubsetMask> masks(1U << 10);
  for (SubsetMask m = 0; m < masks.size(); ++m) {
    masks[m] = m;
  }
  const auto& reference = kernels::scalar();
  for (const auto* variant : variants()) {
    std::vector<std::uint8_t> expected(masks.size());
    std::vector<std::uint8_t> actual(masks.size());
    for (SubsetMask pivot = 0; pivot < masks.size(); pivot += 37) {
      reference.fill_distance_row(pivot, masks, expected);
      variant->fill_distance_row(pivot, masks, actual);
      REQUIRE(actual == expected);
      REQUIRE(variant->row_sum(actual) == reference.row_sum(expected));
    }
  }
}
