#include "graphlab/graph_core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "factor.hpp"

namespace graphlab {

// ---------------------------------------------------------------------------
// PrimeBasis

PrimeBasis::PrimeBasis(std::vector<BigInt> primes) : primes_(std::move(primes)) {
  std::set<BigInt> seen;
  for (const BigInt& p : primes_) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
      throw std::invalid_argument("prime basis entry " + p.get_str() + " is not prime");
    }
    if (!seen.insert(p).second) {
      throw std::invalid_argument("prime basis entry " + p.get_str() + " is repeated");
    }
  }
}

PrimeBasis PrimeBasis::first(unsigned k) {
  std::vector<BigInt> primes;
  BigInt p = 2;
  for (unsigned i = 0; i < k; ++i) {
    primes.push_back(p);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return PrimeBasis(std::move(primes));
}

// ---------------------------------------------------------------------------
// Divisor

unsigned Divisor::omega() const { return static_cast<unsigned>(std::popcount(subset)); }

unsigned omega(const Divisor& v) { return v.omega(); }

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(order), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(order);
    for (std::size_t v = 0; v < order; ++v) {
      labels_.push_back(std::to_string(v));
    }
  } else if (labels_.size() != order) {
    throw std::invalid_argument("SimpleGraph: label count does not match order");
  }
  for (const Edge& e : edges) {
    if (e.u >= order || e.v >= order) {
      throw std::invalid_argument("SimpleGraph: edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("SimpleGraph: self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("SimpleGraph: duplicate edge");
    }
  }
  size_ = edges.size();
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(v));
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::uint32_t u = 0; u < adjacency_.size(); ++u) {
    for (const std::uint32_t v : adjacency_[u]) {
      if (u < v) {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DprimeGraph

DprimeGraph build_gamma(unsigned k, std::optional<PrimeBasis> basis) {
  if (k > kMaxGammaK) {
    throw std::length_error("build_gamma: k = " + std::to_string(k) + " exceeds the supported maximum " +
                            std::to_string(kMaxGammaK));
  }
  if (basis && basis->size() != k) {
    throw std::invalid_argument("build_gamma: basis has " + std::to_string(basis->size()) + " primes, expected " +
                                std::to_string(k));
  }
  DprimeGraph g;
  g.k_ = k;
  g.basis_ = std::move(basis);
  const std::size_t count = std::size_t{1} << k;
  g.masks_.resize(count);
  std::iota(g.masks_.begin(), g.masks_.end(), SubsetMask{0});
  std::stable_sort(g.masks_.begin(), g.masks_.end(),
                   [](SubsetMask a, SubsetMask b) { return std::popcount(a) < std::popcount(b); });
  g.position_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    g.position_[g.masks_[i]] = static_cast<std::uint32_t>(i);
  }
  return g;
}

Divisor DprimeGraph::vertex(std::size_t index) const {
  Divisor d{masks_[index], std::nullopt};
  if (basis_) {
    BigInt value = 1;
    for (unsigned i = 0; i < k_; ++i) {
      if ((d.subset >> i) & 1U) {
        value *= (*basis_)[i];
      }
    }
    d.value = value;
  }
  return d;
}

std::string DprimeGraph::label(std::size_t index) const {
  const Divisor d = vertex(index);
  if (d.value) {
    return d.value->get_str();
  }
  if (d.subset == 0) {
    return "1";
  }
  std::string out;
  for (unsigned i = 0; i < k_; ++i) {
    if ((d.subset >> i) & 1U) {
      out += "p" + std::to_string(i + 1);
    }
  }
  return out;
}

bool DprimeGraph::adjacent(std::size_t u, std::size_t v) const {
  const SubsetMask a = masks_[u];
  const SubsetMask b = masks_[v];
  const SubsetMask common = a & b;
  return a != b && (common == a || common == b);
}

std::size_t DprimeGraph::degree(std::size_t index) const {
  return kernels::active().count_comparable(masks_[index], masks_);
}

std::vector<std::size_t> DprimeGraph::degree_sequence() const {
  std::vector<std::size_t> out(order());
  const auto& table = kernels::active();
  for (std::size_t v = 0; v < order(); ++v) {
    out[v] = table.count_comparable(masks_[v], masks_);
  }
  return out;
}

std::vector<Edge> DprimeGraph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < order(); ++u) {
    for (std::uint32_t v = u + 1; v < order(); ++v) {
      if (adjacent(u, v)) {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

SimpleGraph DprimeGraph::to_simple() const {
  std::vector<std::string> labels;
  labels.reserve(order());
  for (std::size_t v = 0; v < order(); ++v) {
    labels.push_back(label(v));
  }
  const auto list = edges();
  return SimpleGraph(order(), list, std::move(labels));
}

bool adjacent(const DprimeGraph& g, const Divisor& u, const Divisor& v) {
  return g.adjacent(g.index_of(u.subset), g.index_of(v.subset));
}

std::size_t degree(const DprimeGraph& g, const Divisor& v) { return g.degree(g.index_of(v.subset)); }

std::vector<Edge> edges(const DprimeGraph& g) { return g.edges(); }

std::vector<std::size_t> degree_sequence(const DprimeGraph& g) { return g.degree_sequence(); }

// ---------------------------------------------------------------------------
// GeneralDivisorGraph

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("factorize: n must be positive");
  }
  std::vector<PrimePower> out;
  for (const auto& [prime, exponent] : detail::factor_u64(n)) {
    out.push_back({prime, exponent});
  }
  return out;
}

GeneralDivisorGraph::GeneralDivisorGraph(std::uint64_t n, std::vector<PrimePower> factorization,
                                         std::vector<std::uint64_t> divisors, SimpleGraph graph)
    : n_(n), factorization_(std::move(factorization)), divisors_(std::move(divisors)), graph_(std::move(graph)) {}

bool GeneralDivisorGraph::squarefree() const {
  return std::all_of(factorization_.begin(), factorization_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

SubsetMask GeneralDivisorGraph::subset_of(std::size_t index) const {
  if (!squarefree()) {
    throw std::logic_error("subset_of: n = " + std::to_string(n_) + " is not squarefree");
  }
  SubsetMask mask = 0;
  for (std::size_t i = 0; i < factorization_.size(); ++i) {
    if (divisors_[index] % factorization_[i].prime == 0) {
      mask |= SubsetMask{1} << i;
    }
  }
  return mask;
}

GeneralDivisorGraph build_general(std::uint64_t n, std::size_t max_divisors) {
  if (n == 0) {
    throw std::invalid_argument("build_general: n must be positive");
  }
  auto factorization = factorize(n);
  std::size_t count = 1;
  for (const auto& pp : factorization) {
    count *= pp.exponent + 1;
    if (count > max_divisors) {
      throw std::length_error("build_general: n = " + std::to_string(n) + " has more than " +
                              std::to_string(max_divisors) + " divisors");
    }
  }
  std::vector<std::uint64_t> divisors{1};
  for (const auto& [prime, exponent] : factorization) {
    const std::size_t existing = divisors.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) {
        divisors.push_back(divisors[i] * power);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());

  std::vector<Edge> edge_list;
  for (std::uint32_t u = 0; u < divisors.size(); ++u) {
    for (std::uint32_t v = u + 1; v < divisors.size(); ++v) {
      if (divisors[v] % divisors[u] == 0) {
        edge_list.push_back({u, v});
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(divisors.size());
  for (const auto d : divisors) {
    labels.push_back(std::to_string(d));
  }
  SimpleGraph graph(divisors.size(), edge_list, std::move(labels));
  return GeneralDivisorGraph(n, std::move(factorization), std::move(divisors), std::move(graph));
}

}  // namespace graphlab
