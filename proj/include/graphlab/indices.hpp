#pragma once

// Definition-level evaluation of the fourteen topological indices. Every
// value is exact; sums are accumulated in integers or grouped by key before
// any rational or radical arithmetic, so the result does not depend on
// iteration order.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "graphlab/exact_arith.hpp"
#include "graphlab/graph_core.hpp"
#include "graphlab/metric.hpp"

namespace graphlab {

enum class IndexId {
  wiener,
  hyper_wiener,
  harary,
  zagreb1,
  zagreb2,
  degree_distance,
  gutman,
  balaban,
  harmonic,
  randic,
  r1,
  r2,
  r3,
  mostar,
};

inline constexpr std::array<IndexId, 14> kAllIndices = {
    IndexId::wiener,  IndexId::hyper_wiener, IndexId::harary, IndexId::zagreb1, IndexId::zagreb2,
    IndexId::degree_distance, IndexId::gutman, IndexId::balaban, IndexId::harmonic, IndexId::randic,
    IndexId::r1,      IndexId::r2,           IndexId::r3,     IndexId::mostar,
};

std::string_view index_name(IndexId id);
std::optional<IndexId> parse_index_name(std::string_view name);

/// Degrees, edges and distances of one connected graph, computed once and
/// shared by every index function.
class IndexEngine {
 public:
  /// Distances from subset comparability.
  explicit IndexEngine(const DprimeGraph& g);
  /// Distances by breadth-first search.
  explicit IndexEngine(const SimpleGraph& g);
  explicit IndexEngine(const GeneralDivisorGraph& g);

  std::size_t order() const { return degrees_.size(); }
  std::span<const std::uint64_t> degrees() const { return degrees_; }
  std::span<const Edge> edges() const { return edges_; }
  const DistanceMatrix& distances() const { return distances_; }
  std::span<const std::uint64_t> transmissions() const { return transmissions_; }

 private:
  IndexEngine(std::vector<std::uint64_t> degrees, std::vector<Edge> edges, DistanceMatrix distances);

  std::vector<std::uint64_t> degrees_;
  std::vector<Edge> edges_;
  DistanceMatrix distances_;
  std::vector<std::uint64_t> transmissions_;
};

IndexValue wiener(const IndexEngine& g);
IndexValue hyper_wiener(const IndexEngine& g);
IndexValue harary(const IndexEngine& g);
IndexValue zagreb1(const IndexEngine& g);
IndexValue zagreb2(const IndexEngine& g);
IndexValue degree_distance(const IndexEngine& g);
IndexValue gutman(const IndexEngine& g);
/// (m / (mu + 1)) * sum over edges of (D_u D_v)^(-1/2), D = transmission,
/// mu = m - n + 1.
IndexValue balaban(const IndexEngine& g);
IndexValue harmonic(const IndexEngine& g);
IndexValue randic(const IndexEngine& g);

/// S_v = (sum of all degrees) - deg v; M_v = (product of all degrees) / deg v.
/// For deg v = 0 the product over the other vertices is used (empty product 1).
struct RDegree {
  BigInt sum_degree;
  BigInt product_degree;

  BigInt r() const { return sum_degree + product_degree; }
};

RDegree r_degree(const IndexEngine& g, std::size_t v);
std::vector<RDegree> r_degrees(const IndexEngine& g);

IndexValue r1(const IndexEngine& g);
IndexValue r2(const IndexEngine& g);
IndexValue r3(const IndexEngine& g);
IndexValue mostar(const IndexEngine& g);

/// Sum over unordered vertex pairs of deg u * deg v (and deg u + deg v).
/// Used by the diameter-two identities.
BigInt pair_degree_product_sum(const IndexEngine& g);
BigInt pair_degree_sum(const IndexEngine& g);

IndexValue compute_index(const IndexEngine& g, IndexId id);

using IndexReport = std::map<IndexId, IndexValue>;

IndexReport compute_report(const IndexEngine& g, std::span<const IndexId> ids = kAllIndices);

}  // namespace graphlab
