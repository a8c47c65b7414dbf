#include <gmpxx.h>

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "graphlab/exact_arith.hpp"

using namespace graphlab;

namespace {

// Independent squarefree test: no prime square divides m.
bool naive_squarefree(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) {
      return false;
    }
  }
  return true;
}

// 1/sqrt(q) squared, computed through the radical product.
RadicalSum square(const RadicalSum& r) { return r * r; }

// Evaluates a radical sum with mpf at the given precision.
mpf_class evaluate(const RadicalSum& r, mp_bitcnt_t bits) {
  mpf_class total(0, bits);
  for (const auto& [radicand, coefficient] : r.terms()) {
    mpf_class root(radicand, bits);
    root = sqrt(root);
    mpf_class c(coefficient.raw(), bits);
    total += c * root;
  }
  return total;
}

}  // namespace

TEST_CASE("BigRational normalizes and orders") {
  const BigRational half(BigInt(2), BigInt(4));
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);
  CHECK(BigRational(BigInt(3), BigInt(-6)) == BigRational(BigInt(-1), BigInt(2)));
  CHECK(BigRational(1) / BigRational(3) + BigRational(2) / BigRational(3) == BigRational(1));
  CHECK(BigRational(BigInt(1), BigInt(3)) < BigRational(BigInt(1), BigInt(2)));
  CHECK(BigRational(BigInt(47), BigInt(2)).to_string() == "47/2");
  CHECK(BigRational(-5).to_string() == "-5");
  CHECK(BigRational(6).is_integer());
  CHECK_FALSE(half.is_integer());
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("squarefree decomposition") {
  CHECK(sqf_decompose(1) == SquarefreeSplit{1, 1});
  CHECK(sqf_decompose(12) == SquarefreeSplit{2, 3});
  CHECK(sqf_decompose(72) == SquarefreeSplit{6, 2});
  CHECK(sqf_decompose(4851) == SquarefreeSplit{21, 11});
  CHECK(sqf_decompose(18446744073709551557ULL) == SquarefreeSplit{1, 18446744073709551557ULL});
  CHECK(sqf_decompose(4294967291ULL * 4294967291ULL) == SquarefreeSplit{4294967291ULL, 1});
  CHECK_THROWS_AS(sqf_decompose(0), std::invalid_argument);
}

TEST_CASE("squarefree decomposition agrees with naive check up to 10^6") {
  std::uint64_t failures = 0;
  for (std::uint64_t m = 1; m <= 1000000; ++m) {
    const SquarefreeSplit s = sqf_decompose(m);
    const bool ok = s.square_root_part * s.square_root_part * s.squarefree_part == m &&
                    naive_squarefree(s.squarefree_part) && is_squarefree(m) == naive_squarefree(m);
    failures += ok ? 0 : 1;
  }
  CHECK(failures == 0);
}

TEST_CASE("RadicalSum canonical form") {
  const RadicalSum r = RadicalSum::from_terms({{BigRational(1), 12}, {BigRational(3), 3}, {BigRational(-5), 3}});
  // sqrt(12) = 2 sqrt(3); 2 + 3 - 5 = 0
  CHECK(r.is_zero());
  CHECK(r.to_string() == "0");

  const RadicalSum s = RadicalSum::from_terms({{BigRational(BigInt(23), BigInt(14)), 1}, {BigRational(BigInt(6), BigInt(7)), 7}});
  CHECK(s.to_string() == "23/14 + 6/7*sqrt(7)");
  CHECK(RadicalSum::term(BigRational(1), 4) == RadicalSum::rational(BigRational(2)));
  CHECK(RadicalSum::term(BigRational(-1), 2).to_string() == "-sqrt(2)");
  CHECK(s.rational_part() == BigRational(BigInt(23), BigInt(14)));
  CHECK_FALSE(s.is_rational());
  CHECK(RadicalSum::rational(BigRational(5)).is_rational());
  CHECK_THROWS_AS(RadicalSum::term(BigRational(1), 0), std::invalid_argument);
}

TEST_CASE("RadicalSum arithmetic properties") {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> coefficient(-9, 9);
  std::uniform_int_distribution<std::uint64_t> radicand(1, 60);
  auto random_sum = [&] {
    std::vector<std::pair<BigRational, std::uint64_t>> terms;
    for (int i = 0; i < 4; ++i) {
      terms.emplace_back(BigRational(BigInt(coefficient(rng)), BigInt(1 + (rng() % 7))), radicand(rng));
    }
    return RadicalSum::from_terms(terms);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const RadicalSum a = random_sum();
    const RadicalSum b = random_sum();
    const RadicalSum c = random_sum();
    CHECK(a.canonicalize() == a);
    CHECK(a.canonicalize().canonicalize() == a.canonicalize());
    CHECK(radsum_add(a, b) == radsum_add(b, a));
    CHECK(radsum_add(radsum_add(a, b), c) == radsum_add(a, radsum_add(b, c)));
    CHECK(a * b == b * a);
    CHECK(radsum_scale(a, BigRational(0)).is_zero());
    CHECK(radsum_add(a, radsum_scale(a, BigRational(-1))).is_zero());
    for (const auto& [d, coeff] : a.terms()) {
      CHECK(is_squarefree(d));
      CHECK_FALSE(coeff.is_zero());
    }
  }
}

TEST_CASE("inv_sqrt squares back to the reciprocal") {
  CHECK(inv_sqrt(BigRational(4)).to_string() == "1/2");
  CHECK(inv_sqrt(BigRational(12)).to_string() == "1/6*sqrt(3)");
  CHECK(inv_sqrt(BigRational(BigInt(2), BigInt(3))).to_string() == "1/2*sqrt(6)");
  for (long a = 1; a <= 40; ++a) {
    for (long b = 1; b <= 40; ++b) {
      const BigRational q{BigInt(a), BigInt(b)};
      const RadicalSum r = inv_sqrt(q);
      REQUIRE(square(r) == RadicalSum::rational(BigRational(1) / q));
    }
  }
  CHECK_THROWS_AS(inv_sqrt(BigRational(0)), std::domain_error);
  CHECK_THROWS_AS(inv_sqrt(BigRational(-3)), std::domain_error);
  const BigInt big("18446744073709551557");
  CHECK_THROWS_AS(inv_sqrt(BigRational(big, big + 2)), std::overflow_error);
}

TEST_CASE("IndexValue collapses to the narrowest kind") {
  CHECK(IndexValue(BigRational(BigInt(4), BigInt(2))).kind() == IndexValue::Kind::integer);
  CHECK(IndexValue(BigRational(BigInt(1), BigInt(2))).kind() == IndexValue::Kind::rational);
  CHECK(IndexValue(RadicalSum::rational(BigRational(3))).kind() == IndexValue::Kind::integer);
  CHECK(IndexValue(RadicalSum::term(BigRational(1), 9)).kind() == IndexValue::Kind::integer);
  CHECK(IndexValue(RadicalSum::term(BigRational(1), 2)).kind() == IndexValue::Kind::radical);
  CHECK(IndexValue(7) == IndexValue(RadicalSum::rational(BigRational(7))));
  CHECK_FALSE(IndexValue(7) == IndexValue(BigRational(BigInt(7), BigInt(2))));
  CHECK(IndexValue(BigRational(BigInt(3), BigInt(2))).to_radical() == RadicalSum::rational(BigRational(BigInt(3), BigInt(2))));
  CHECK(kind_name(IndexValue::Kind::radical) == "radical");
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(to_decimal(IndexValue(37), 6) == "37");
  CHECK(to_decimal(BigRational(BigInt(47), BigInt(2)), 6) == "23.500000");
  CHECK(rational_to_decimal(BigRational(BigInt(1), BigInt(8)), 2) == "0.12");
  CHECK(rational_to_decimal(BigRational(BigInt(3), BigInt(8)), 2) == "0.38");
  CHECK(rational_to_decimal(BigRational(BigInt(-1), BigInt(8)), 2) == "-0.12");
  CHECK(rational_to_decimal(BigRational(BigInt(-1), BigInt(3)), 3) == "-0.333");
  CHECK(rational_to_decimal(BigRational(BigInt(2), BigInt(3)), 1) == "0.7");
  const RadicalSum randic3 = RadicalSum::from_terms({{BigRational(BigInt(23), BigInt(14)), 1}, {BigRational(BigInt(6), BigInt(7)), 7}});
  CHECK(to_decimal(randic3, 6) == "3.910644");
  CHECK(to_decimal(RadicalSum::term(BigRational(1), 2), 10) == "1.4142135624");
  CHECK(to_decimal(RadicalSum::term(BigRational(-1), 2), 3) == "-1.414");
  CHECK_THROWS_AS(to_decimal(IndexValue(1), 0), std::invalid_argument);
}

TEST_CASE("50-digit decimals agree with a high-precision float recomputation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<BigRational, std::uint64_t>> terms;
    for (int i = 0; i < 3; ++i) {
      terms.emplace_back(BigRational(BigInt(static_cast<long>(rng() % 2001) - 1000), BigInt(1 + static_cast<long>(rng() % 97))),
                         1 + rng() % 5000);
    }
    const RadicalSum r = RadicalSum::from_terms(terms);
    if (r.is_rational()) {
      continue;
    }
    const std::string text = to_decimal(r, 50);
    const mpf_class exact_text(text, 512);
    const mpf_class reference = evaluate(r, 512);
    const mpf_class gap = abs(exact_text - reference);
    // Correct rounding to 50 places leaves at most half a unit in the last place.
    CHECK(gap <= mpf_class("0.51e-50", 512));
  }
}
