#include "graphlab/metric.hpp"

#include <algorithm>
#include <limits>

#include "graphlab/kernels.hpp"

namespace graphlab {

namespace {

constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

void check_dense_size(std::size_t order) {
  if (order > kMaxDistanceVertices) {
    throw std::length_error("distance matrix for " + std::to_string(order) + " vertices exceeds the limit of " +
                            std::to_string(kMaxDistanceVertices));
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t order) : order_(order), cells_(order * order, 0) {}

unsigned distance_fast(const DprimeGraph& g, std::size_t u, std::size_t v) {
  if (u == v) {
    return 0;
  }
  return g.adjacent(u, v) ? 1 : 2;
}

unsigned distance_fast(const DprimeGraph& g, const Divisor& u, const Divisor& v) {
  return distance_fast(g, g.index_of(u.subset), g.index_of(v.subset));
}

DistanceMatrix distance_matrix_fast(const DprimeGraph& g) {
  check_dense_size(g.order());
  DistanceMatrix d(g.order());
  const auto& table = kernels::active();
  for (std::size_t u = 0; u < g.order(); ++u) {
    table.fill_distance_row(g.mask(u), g.masks(), d.row(u));
  }
  return d;
}

DistanceMatrix distance_matrix_bfs(const SimpleGraph& g) {
  const std::size_t n = g.order();
  check_dense_size(n);
  DistanceMatrix d(n);
  std::vector<std::uint32_t> queue(n);
  for (std::size_t source = 0; source < n; ++source) {
    auto row = d.row(source);
    std::fill(row.begin(), row.end(), kUnreached);
    row[source] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = static_cast<std::uint32_t>(source);
    while (head < tail) {
      const std::uint32_t u = queue[head++];
      for (const std::uint32_t w : g.neighbors(u)) {
        if (row[w] != kUnreached) {
          continue;
        }
        if (row[u] + 1 >= kUnreached) {
          throw std::length_error("distance_matrix_bfs: distance exceeds 254");
        }
        row[w] = static_cast<std::uint8_t>(row[u] + 1);
        queue[tail++] = w;
      }
    }
    if (tail != n) {
      const auto missing = static_cast<std::size_t>(std::find(row.begin(), row.end(), kUnreached) - row.begin());
      throw DisconnectedGraphError(source, missing,
                                   "graph is disconnected: vertex " + g.label(missing) +
                                       " is unreachable from vertex " + g.label(source));
    }
  }
  return d;
}

std::uint64_t transmission(const DistanceMatrix& d, std::size_t u) { return kernels::active().row_sum(d.row(u)); }

std::vector<std::uint64_t> transmissions(const DistanceMatrix& d) {
  std::vector<std::uint64_t> out(d.order());
  const auto& table = kernels::active();
  for (std::size_t u = 0; u < d.order(); ++u) {
    out[u] = table.row_sum(d.row(u));
  }
  return out;
}

unsigned diameter(const DistanceMatrix& d) {
  unsigned best = 0;
  for (std::size_t u = 0; u < d.order(); ++u) {
    const auto row = d.row(u);
    if (!row.empty()) {
      best = std::max<unsigned>(best, *std::max_element(row.begin(), row.end()));
    }
  }
  return best;
}

EdgeCloserCounts mostar_counts(const DistanceMatrix& d, Edge uv) {
  if (uv.u >= d.order() || uv.v >= d.order() || d.at(uv.u, uv.v) != 1) {
    throw std::invalid_argument("mostar_counts: (" + std::to_string(uv.u) + ", " + std::to_string(uv.v) +
                                ") is not an edge");
  }
  // d is symmetric, so row u holds d(w, u) for every w.
  const auto counts = kernels::active().count_closer(d.row(uv.u), d.row(uv.v));
  return {counts.first, counts.second};
}

}  // namespace graphlab
