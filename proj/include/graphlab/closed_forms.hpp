#pragma once

// Closed-form and recursive formulas for Γ_k as functions of k alone, plus a
// cross-check of each formula against the definition-level computation.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "graphlab/exact_arith.hpp"

namespace graphlab {

enum class FormulaId {
  order,
  degree,
  size,
  size_recursive,
  count_by_omega,
  wiener,
  hyper_wiener,
  harary,
  zagreb1,
};

inline constexpr std::array<FormulaId, 9> kAllFormulas = {
    FormulaId::order,   FormulaId::degree,       FormulaId::size,   FormulaId::size_recursive, FormulaId::count_by_omega,
    FormulaId::wiener,  FormulaId::hyper_wiener, FormulaId::harary, FormulaId::zagreb1,
};

std::string_view formula_name(FormulaId id);

/// 2^k
BigInt order_formula(unsigned k);
/// 3^k - 2^k
BigInt size_formula(unsigned k);
/// C(k, j); zero when j > k.
BigInt count_by_omega(unsigned k, unsigned j);
/// 2^k - 1 for omega in {0, k}, else 2^omega + 2^(k - omega) - 2.
/// Throws std::invalid_argument when omega > k.
BigInt degree_formula(unsigned k, unsigned omega);
/// |E(Γ_{k-1})| + sum over Γ_{k-1} of (deg + 1), seeded with |E(Γ_0)| = 0.
/// Throws std::invalid_argument for k == 0.
BigInt size_recursive(unsigned k);

/// 2^(2k) - 3^k
IndexValue wiener_formula(unsigned k);
/// 2^(k-1) (2^(k+1) + 2^k + 1) - 2 * 3^k
IndexValue hyper_wiener_formula(unsigned k);
/// (2^(k-1) (2^k - 3) + 3^k) / 2
IndexValue harary_formula(unsigned k);
/// 2 (2^k - 1)^2 + sum_{j=1}^{k-1} C(k, j) (2^j + 2^(k-j) - 2)^2
IndexValue zagreb1_formula(unsigned k);

struct FormulaCheck {
  FormulaId id;
  unsigned k;
  std::string formula;  // exact value (or summary) from the closed form
  std::string oracle;   // exact value (or summary) from enumeration
  bool pass;

  /// "[k=3] wiener: formula 37 == oracle 37"
  std::string describe() const;
};

/// Every formula at one k, each compared against the graph built by
/// build_gamma and measured by adjacency enumeration, breadth-first
/// distances and the index definitions.
std::vector<FormulaCheck> cross_check(unsigned k);

}  // namespace graphlab
