#include <stdexcept>

#include "doctest.h"
#include "graphlab/closed_forms.hpp"

using namespace graphlab;

namespace {

BigInt pow_ui(unsigned base, unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

}  // namespace

TEST_CASE("order and size") {
  for (unsigned k = 0; k <= 20; ++k) {
    CHECK(order_formula(k) == pow_ui(2, k));
    CHECK(size_formula(k) == pow_ui(3, k) - pow_ui(2, k));
  }
  BigInt total = 0;
  for (unsigned j = 0; j <= 7; ++j) {
    total += count_by_omega(7, j);
  }
  CHECK(total == 128);
  CHECK(count_by_omega(5, 2) == 10);
  CHECK(count_by_omega(3, 4) == 0);
}

TEST_CASE("degree formula and branch coincidence") {
  CHECK(degree_formula(3, 0) == 7);
  CHECK(degree_formula(3, 1) == 4);
  CHECK(degree_formula(3, 3) == 7);
  CHECK(degree_formula(0, 0) == 0);
  for (unsigned k = 0; k <= 12; ++k) {
    for (unsigned w = 0; w <= k; ++w) {
      const BigInt general = pow_ui(2, w) + pow_ui(2, k - w) - 2;
      CHECK(degree_formula(k, w) == general);
    }
    CHECK(degree_formula(k, 0) == pow_ui(2, k) - 1);
    CHECK(degree_formula(k, k) == pow_ui(2, k) - 1);
  }
  CHECK_THROWS_AS(degree_formula(3, 4), std::invalid_argument);
}

TEST_CASE("recursive size lemma for k = 1..12") {
  for (unsigned k = 1; k <= 12; ++k) {
    CHECK(size_recursive(k) == pow_ui(3, k) - pow_ui(2, k));
  }
  CHECK_THROWS_AS(size_recursive(0), std::invalid_argument);
}

TEST_CASE("index closed forms at k = 3") {
  CHECK(wiener_formula(3) == IndexValue(37));
  CHECK(hyper_wiener_formula(3) == IndexValue(46));
  CHECK(harary_formula(3) == IndexValue(BigRational(BigInt(47), BigInt(2))));
  CHECK(zagreb1_formula(3) == IndexValue(194));
  CHECK(wiener_formula(0) == IndexValue(0));
  CHECK(harary_formula(0) == IndexValue(0));
  CHECK(zagreb1_formula(1) == IndexValue(2));
}

TEST_CASE("cross_check passes for k = 0..10") {
  for (unsigned k = 0; k <= 10; ++k) {
    CAPTURE(k);
    const auto checks = cross_check(k);
    CHECK(checks.size() == (k == 0 ? kAllFormulas.size() - 1 : kAllFormulas.size()));
    for (const FormulaCheck& c : checks) {
      CAPTURE(c.describe());
      CHECK(c.pass);
      CHECK(c.k == k);
    }
  }
}

TEST_CASE("describe format") {
  for (const FormulaCheck& c : cross_check(3)) {
    if (c.id == FormulaId::wiener) {
      CHECK(c.describe() == "[k=3] wiener: formula 37 == oracle 37");
    }
  }
  CHECK(formula_name(FormulaId::size_recursive) == "size_recursive");
}
