#include "graphlab/closed_forms.hpp"

#include <stdexcept>

#include "graphlab/graph_core.hpp"
#include "graphlab/indices.hpp"
#include "graphlab/metric.hpp"

namespace graphlab {

namespace {

BigInt power(unsigned long base, unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

// 2^(k-1) as an exact rational (1/2 at k = 0).
BigRational half_power_of_two(unsigned k) {
  return k == 0 ? BigRational(BigInt(1), BigInt(2)) : BigRational(power(2, k - 1));
}

}  // namespace

std::string_view formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::order:
      return "order";
    case FormulaId::degree:
      return "degree";
    case FormulaId::size:
      return "size";
    case FormulaId::size_recursive:
      return "size_recursive";
    case FormulaId::count_by_omega:
      return "count_by_omega";
    case FormulaId::wiener:
      return "wiener";
    case FormulaId::hyper_wiener:
      return "hyper_wiener";
    case FormulaId::harary:
      return "harary";
    case FormulaId::zagreb1:
      return "zagreb1";
  }
  return "unknown";
}

BigInt order_formula(unsigned k) { return power(2, k); }

BigInt size_formula(unsigned k) { return power(3, k) - power(2, k); }

BigInt count_by_omega(unsigned k, unsigned j) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), k, j);
  return out;
}

BigInt degree_formula(unsigned k, unsigned omega) {
  if (omega > k) {
    throw std::invalid_argument("degree_formula: omega exceeds k");
  }
  if (omega == 0 || omega == k) {
    return power(2, k) - 1;
  }
  return power(2, omega) + power(2, k - omega) - 2;
}

BigInt size_recursive(unsigned k) {
  if (k == 0) {
    throw std::invalid_argument("size_recursive: k must be at least 1");
  }
  BigInt size = 0;
  for (unsigned level = 1; level <= k; ++level) {
    // Each vertex v of Γ_{level-1} gains a partner v * p_level that
    // contributes deg(v) + 1 new edges.
    const unsigned previous = level - 1;
    for (unsigned omega = 0; omega <= previous; ++omega) {
      size += count_by_omega(previous, omega) * (degree_formula(previous, omega) + 1);
    }
  }
  return size;
}

IndexValue wiener_formula(unsigned k) { return BigInt(power(2, 2 * k) - power(3, k)); }

IndexValue hyper_wiener_formula(unsigned k) {
  const BigRational bracket(BigInt(power(2, k + 1) + power(2, k) + 1));
  return half_power_of_two(k) * bracket - BigRational(BigInt(2 * power(3, k)));
}

IndexValue harary_formula(unsigned k) {
  const BigRational numerator =
      half_power_of_two(k) * BigRational(BigInt(power(2, k) - 3)) + BigRational(power(3, k));
  return numerator / BigRational(2);
}

IndexValue zagreb1_formula(unsigned k) {
  const BigInt outer = power(2, k) - 1;
  BigInt sum = 2 * outer * outer;
  for (unsigned j = 1; j + 1 <= k; ++j) {
    const BigInt deg = power(2, j) + power(2, k - j) - 2;
    sum += count_by_omega(k, j) * deg * deg;
  }
  return sum;
}

std::string FormulaCheck::describe() const {
  return "[k=" + std::to_string(k) + "] " + std::string(formula_name(id)) + ": formula " + formula +
         (pass ? " == " : " != ") + "oracle " + oracle;
}

std::vector<FormulaCheck> cross_check(unsigned k) {
  const DprimeGraph g = build_gamma(k);
  const SimpleGraph plain = g.to_simple();
  // Distances by BFS, degrees by adjacency count: nothing here reuses the
  // formulas under test.
  const IndexEngine engine(plain);
  std::vector<FormulaCheck> out;

  auto add = [&](FormulaId id, const std::string& formula, const std::string& oracle) {
    out.push_back({id, k, formula, oracle, formula == oracle});
  };

  add(FormulaId::order, order_formula(k).get_str(), std::to_string(g.order()));

  {
    const auto degrees = g.degree_sequence();
    std::size_t agree = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (degree_formula(k, g.vertex(v).omega()) == BigInt(static_cast<unsigned long>(degrees[v]))) {
        ++agree;
      }
    }
    // Both branches of the formula must coincide at omega = 0 and omega = k.
    const BigInt general_branch_at_zero = power(2, 0) + power(2, k) - 2;
    const bool branches =
        degree_formula(k, 0) == degree_formula(k, k) && degree_formula(k, 0) == general_branch_at_zero;
    const std::string expected = std::to_string(g.order()) + "/" + std::to_string(g.order()) + " vertices";
    const std::string observed = std::to_string(agree) + "/" + std::to_string(g.order()) + " vertices";
    out.push_back({FormulaId::degree, k, expected, observed, agree == g.order() && branches});
  }

  const std::string edge_count = std::to_string(g.edges().size());
  add(FormulaId::size, size_formula(k).get_str(), edge_count);
  if (k >= 1) {
    add(FormulaId::size_recursive, size_recursive(k).get_str(), edge_count);
  }

  {
    std::string formula;
    std::string oracle;
    std::vector<std::size_t> layer(k + 1, 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
      ++layer[g.vertex(v).omega()];
    }
    for (unsigned j = 0; j <= k; ++j) {
      formula += (j == 0 ? "" : ",") + count_by_omega(k, j).get_str();
      oracle += (j == 0 ? "" : ",") + std::to_string(layer[j]);
    }
    add(FormulaId::count_by_omega, "[" + formula + "]", "[" + oracle + "]");
  }

  add(FormulaId::wiener, wiener_formula(k).to_string(), wiener(engine).to_string());
  add(FormulaId::hyper_wiener, hyper_wiener_formula(k).to_string(), hyper_wiener(engine).to_string());
  add(FormulaId::harary, harary_formula(k).to_string(), harary(engine).to_string());
  add(FormulaId::zagreb1, zagreb1_formula(k).to_string(), zagreb1(engine).to_string());
  return out;
}

}  // namespace graphlab
