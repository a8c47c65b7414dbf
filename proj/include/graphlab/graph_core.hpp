#pragma once

// Divisor function graphs: Γ_k over the subsets of k distinct primes, and
// G_D(n) over all divisors of an arbitrary n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphlab/exact_arith.hpp"
#include "graphlab/kernels.hpp"

namespace graphlab {

/// Largest k accepted by build_gamma.
inline constexpr unsigned kMaxGammaK = 20;

/// Default cap on the number of divisors of n accepted by build_general.
inline constexpr std::size_t kDefaultMaxDivisors = 4096;

struct Edge {
  std::uint32_t u;
  std::uint32_t v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered list of distinct primes p_1..p_k.
class PrimeBasis {
 public:
  /// Throws std::invalid_argument if an entry is not prime or repeats.
  explicit PrimeBasis(std::vector<BigInt> primes);

  /// 2, 3, 5, ... (the first k primes).
  static PrimeBasis first(unsigned k);

  std::size_t size() const { return primes_.size(); }
  const std::vector<BigInt>& primes() const { return primes_; }
  const BigInt& operator[](std::size_t i) const { return primes_[i]; }

 private:
  std::vector<BigInt> primes_;
};

struct Divisor {
  SubsetMask subset = 0;
  std::optional<BigInt> value;

  unsigned omega() const;

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.subset == b.subset; }
};

unsigned omega(const Divisor& v);

/// Plain undirected graph with sorted adjacency lists. Used for general
/// divisor graphs and as the input of the breadth-first oracle.
class SimpleGraph {
 public:
  /// Throws std::invalid_argument on out-of-range endpoints, loops, or
  /// duplicate edges.
  SimpleGraph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels = {});

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<std::uint32_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Each edge once, (lower index, higher index), lexicographic.
  std::vector<Edge> edges() const;
  const std::string& label(std::size_t v) const { return labels_[v]; }

 private:
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t size_ = 0;
};

/// Γ_k. Vertices are prime-index subsets in canonical order: by ω ascending,
/// then by bitmask ascending. Adjacency is strict subset containment.
class DprimeGraph {
 public:
  unsigned k() const { return k_; }
  std::size_t order() const { return masks_.size(); }
  const std::optional<PrimeBasis>& basis() const { return basis_; }

  /// Canonical vertex order.
  std::span<const SubsetMask> masks() const { return masks_; }
  SubsetMask mask(std::size_t index) const { return masks_[index]; }
  std::size_t index_of(SubsetMask mask) const { return position_[mask]; }

  Divisor vertex(std::size_t index) const;
  /// Concrete value when a basis is present, else "1" or "p1p3".
  std::string label(std::size_t index) const;

  bool adjacent(std::size_t u, std::size_t v) const;
  /// Counted over all vertices, not taken from the closed form.
  std::size_t degree(std::size_t index) const;
  std::vector<std::size_t> degree_sequence() const;
  /// Enumerated by adjacency tests; (lower canonical index, higher).
  std::vector<Edge> edges() const;

  SimpleGraph to_simple() const;

 private:
  friend DprimeGraph build_gamma(unsigned k, std::optional<PrimeBasis> basis);

  unsigned k_ = 0;
  std::optional<PrimeBasis> basis_;
  std::vector<SubsetMask> masks_;
  std::vector<std::uint32_t> position_;
};

/// Throws std::invalid_argument when the basis length differs from k, and
/// std::length_error when k > kMaxGammaK.
DprimeGraph build_gamma(unsigned k, std::optional<PrimeBasis> basis = std::nullopt);

bool adjacent(const DprimeGraph& g, const Divisor& u, const Divisor& v);
std::size_t degree(const DprimeGraph& g, const Divisor& v);
std::vector<Edge> edges(const DprimeGraph& g);
std::vector<std::size_t> degree_sequence(const DprimeGraph& g);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// G_D(n): all divisors of n ascending, u ~ v iff u != v and one divides the
/// other.
class GeneralDivisorGraph {
 public:
  std::uint64_t n() const { return n_; }
  const std::vector<PrimePower>& factorization() const { return factorization_; }
  const std::vector<std::uint64_t>& divisors() const { return divisors_; }
  std::size_t order() const { return divisors_.size(); }
  const SimpleGraph& graph() const { return graph_; }
  bool squarefree() const;

  /// For squarefree n: the prime-index subset of divisor `index` (bit i for
  /// the i-th smallest prime factor). Throws std::logic_error otherwise.
  SubsetMask subset_of(std::size_t index) const;

 private:
  friend GeneralDivisorGraph build_general(std::uint64_t n, std::size_t max_divisors);

  GeneralDivisorGraph(std::uint64_t n, std::vector<PrimePower> factorization, std::vector<std::uint64_t> divisors,
                      SimpleGraph graph);

  std::uint64_t n_;
  std::vector<PrimePower> factorization_;
  std::vector<std::uint64_t> divisors_;
  SimpleGraph graph_;
};

/// Throws std::invalid_argument for n == 0 and std::length_error when n has
/// more than max_divisors divisors.
GeneralDivisorGraph build_general(std::uint64_t n, std::size_t max_divisors = kDefaultMaxDivisors);

std::vector<PrimePower> factorize(std::uint64_t n);

}  // namespace graphlab
