#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphlab/graph_core.hpp"

namespace graphlab {

/// Largest vertex count for which a dense distance matrix is built.
inline constexpr std::size_t kMaxDistanceVertices = 8192;

/// Dense symmetric matrix of shortest-path lengths, indexed in the graph's
/// vertex order.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order);

  std::size_t order() const { return order_; }
  std::uint8_t at(std::size_t u, std::size_t v) const { return cells_[u * order_ + v]; }
  std::uint8_t& at(std::size_t u, std::size_t v) { return cells_[u * order_ + v]; }
  std::span<const std::uint8_t> row(std::size_t u) const { return {cells_.data() + u * order_, order_}; }
  std::span<std::uint8_t> row(std::size_t u) { return {cells_.data() + u * order_, order_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Thrown by the breadth-first oracle for graphs that are not connected.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(std::size_t from, std::size_t to, const std::string& message)
      : std::runtime_error(message), from_(from), to_(to) {}

  std::size_t from() const { return from_; }
  std::size_t to() const { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

/// 0 if u == v, 1 if adjacent, 2 otherwise.
unsigned distance_fast(const DprimeGraph& g, std::size_t u, std::size_t v);
unsigned distance_fast(const DprimeGraph& g, const Divisor& u, const Divisor& v);

/// Γ_k distances straight from subset comparability.
DistanceMatrix distance_matrix_fast(const DprimeGraph& g);

/// Breadth-first search from every vertex. Throws DisconnectedGraphError
/// naming the first unreachable pair, and std::length_error if a distance
/// exceeds 254 or the graph is too large for a dense matrix.
DistanceMatrix distance_matrix_bfs(const SimpleGraph& g);

/// D_u = sum of d(u, v) over all v.
std::uint64_t transmission(const DistanceMatrix& d, std::size_t u);
std::vector<std::uint64_t> transmissions(const DistanceMatrix& d);
unsigned diameter(const DistanceMatrix& d);

/// n_u counts vertices strictly closer to u than to v (u itself included).
struct EdgeCloserCounts {
  std::size_t n_u = 0;
  std::size_t n_v = 0;

  friend bool operator==(const EdgeCloserCounts&, const EdgeCloserCounts&) = default;
};

/// Throws std::invalid_argument if uv is not an edge of the graph behind d.
EdgeCloserCounts mostar_counts(const DistanceMatrix& d, Edge uv);

}  // namespace graphlab
