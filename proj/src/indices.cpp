#include "graphlab/indices.hpp"

#include <array>
#include <utility>

#include "graphlab/kernels.hpp"

namespace graphlab {

namespace {

__extension__ using Wide = unsigned __int128;

BigInt to_big(Wide value) {
  const auto high = static_cast<std::uint64_t>(value >> 64);
  const auto low = static_cast<std::uint64_t>(value);
  BigInt out = static_cast<unsigned long>(high);
  out <<= 64;
  out += static_cast<unsigned long>(low);
  return out;
}

BigInt to_big(std::uint64_t value) { return BigInt(static_cast<unsigned long>(value)); }

// Number of unordered pairs at each distance.
std::array<std::uint64_t, 256> pair_distance_histogram(const DistanceMatrix& d) {
  std::array<std::uint64_t, 256> histogram{};
  for (std::size_t u = 0; u < d.order(); ++u) {
    const auto row = d.row(u);
    for (std::size_t v = u + 1; v < d.order(); ++v) {
      ++histogram[row[v]];
    }
  }
  return histogram;
}

// Edge count per unordered key pair, e.g. (deg u, deg v).
template <typename KeyOf>
std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> group_edges(std::span<const Edge> edges,
                                                                             KeyOf key_of) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> groups;
  for (const Edge& e : edges) {
    auto a = key_of(e.u);
    auto b = key_of(e.v);
    if (b < a) {
      std::swap(a, b);
    }
    ++groups[{a, b}];
  }
  return groups;
}

std::vector<std::uint64_t> adjacency_degrees(const DprimeGraph& g) {
  const auto sequence = g.degree_sequence();
  return {sequence.begin(), sequence.end()};
}

std::vector<std::uint64_t> adjacency_degrees(const SimpleGraph& g) {
  std::vector<std::uint64_t> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    out[v] = g.degree(v);
  }
  return out;
}

}  // namespace

std::string_view index_name(IndexId id) {
  switch (id) {
    case IndexId::wiener:
      return "wiener";
    case IndexId::hyper_wiener:
      return "hyper_wiener";
    case IndexId::harary:
      return "harary";
    case IndexId::zagreb1:
      return "zagreb1";
    case IndexId::zagreb2:
      return "zagreb2";
    case IndexId::degree_distance:
      return "degree_distance";
    case IndexId::gutman:
      return "gutman";
    case IndexId::balaban:
      return "balaban";
    case IndexId::harmonic:
      return "harmonic";
    case IndexId::randic:
      return "randic";
    case IndexId::r1:
      return "r1";
    case IndexId::r2:
      return "r2";
    case IndexId::r3:
      return "r3";
    case IndexId::mostar:
      return "mostar";
  }
  return "unknown";
}

std::optional<IndexId> parse_index_name(std::string_view name) {
  for (const IndexId id : kAllIndices) {
    if (index_name(id) == name) {
      return id;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// IndexEngine

IndexEngine::IndexEngine(std::vector<std::uint64_t> degrees, std::vector<Edge> edges, DistanceMatrix distances)
    : degrees_(std::move(degrees)),
      edges_(std::move(edges)),
      distances_(std::move(distances)),
      transmissions_(graphlab::transmissions(distances_)) {}

IndexEngine::IndexEngine(const DprimeGraph& g)
    : IndexEngine(adjacency_degrees(g), g.edges(), distance_matrix_fast(g)) {}

IndexEngine::IndexEngine(const SimpleGraph& g)
    : IndexEngine(adjacency_degrees(g), g.edges(), distance_matrix_bfs(g)) {}

IndexEngine::IndexEngine(const GeneralDivisorGraph& g) : IndexEngine(g.graph()) {}

// ---------------------------------------------------------------------------
// Distance-based indices

IndexValue wiener(const IndexEngine& g) {
  const auto histogram = pair_distance_histogram(g.distances());
  Wide sum = 0;
  for (std::size_t d = 1; d < histogram.size(); ++d) {
    sum += Wide{histogram[d]} * d;
  }
  return to_big(sum);
}

IndexValue hyper_wiener(const IndexEngine& g) {
  const auto histogram = pair_distance_histogram(g.distances());
  Wide sum = 0;
  for (std::size_t d = 1; d < histogram.size(); ++d) {
    sum += Wide{histogram[d]} * (d + d * d);
  }
  return BigRational(to_big(sum), 2);
}

IndexValue harary(const IndexEngine& g) {
  const auto histogram = pair_distance_histogram(g.distances());
  BigRational sum;
  for (std::size_t d = 1; d < histogram.size(); ++d) {
    if (histogram[d] != 0) {
      sum += BigRational(to_big(histogram[d]), to_big(std::uint64_t{d}));
    }
  }
  return sum;
}

IndexValue degree_distance(const IndexEngine& g) {
  const auto& d = g.distances();
  const auto deg = g.degrees();
  Wide sum = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto row = d.row(u);
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      sum += Wide{deg[u] + deg[v]} * row[v];
    }
  }
  return to_big(sum);
}

IndexValue gutman(const IndexEngine& g) {
  const auto& d = g.distances();
  const auto deg = g.degrees();
  Wide sum = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto row = d.row(u);
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      sum += Wide{deg[u] * deg[v]} * row[v];
    }
  }
  return to_big(sum);
}

BigInt pair_degree_product_sum(const IndexEngine& g) {
  const auto deg = g.degrees();
  Wide sum = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      sum += Wide{deg[u]} * deg[v];
    }
  }
  return to_big(sum);
}

BigInt pair_degree_sum(const IndexEngine& g) {
  const auto deg = g.degrees();
  Wide sum = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      sum += Wide{deg[u]} + deg[v];
    }
  }
  return to_big(sum);
}

IndexValue balaban(const IndexEngine& g) {
  const auto trans = g.transmissions();
  const auto groups = group_edges(g.edges(), [&](std::uint32_t v) { return trans[v]; });
  RadicalSum sum;
  for (const auto& [key, count] : groups) {
    const BigInt product = to_big(key.first) * to_big(key.second);
    sum += inv_sqrt(BigRational(product)).scaled(BigRational(to_big(count)));
  }
  const auto m = static_cast<long>(g.edges().size());
  const auto cyclomatic = m - static_cast<long>(g.order()) + 1;
  return sum.scaled(BigRational(BigInt(m), BigInt(cyclomatic + 1)));
}

// ---------------------------------------------------------------------------
// Degree-based indices

IndexValue zagreb1(const IndexEngine& g) {
  Wide sum = 0;
  for (const std::uint64_t deg : g.degrees()) {
    sum += Wide{deg} * deg;
  }
  return to_big(sum);
}

IndexValue zagreb2(const IndexEngine& g) {
  const auto deg = g.degrees();
  Wide sum = 0;
  for (const Edge& e : g.edges()) {
    sum += Wide{deg[e.u]} * deg[e.v];
  }
  return to_big(sum);
}

IndexValue harmonic(const IndexEngine& g) {
  const auto deg = g.degrees();
  std::map<std::uint64_t, std::uint64_t> by_degree_sum;
  for (const Edge& e : g.edges()) {
    ++by_degree_sum[deg[e.u] + deg[e.v]];
  }
  BigRational sum;
  for (const auto& [degree_sum, count] : by_degree_sum) {
    sum += BigRational(to_big(2 * count), to_big(degree_sum));
  }
  return sum;
}

IndexValue randic(const IndexEngine& g) {
  const auto deg = g.degrees();
  const auto groups = group_edges(g.edges(), [&](std::uint32_t v) { return deg[v]; });
  RadicalSum sum;
  for (const auto& [key, count] : groups) {
    const BigInt product = to_big(key.first) * to_big(key.second);
    sum += inv_sqrt(BigRational(product)).scaled(BigRational(to_big(count)));
  }
  return sum;
}

std::vector<RDegree> r_degrees(const IndexEngine& g) {
  const auto deg = g.degrees();
  BigInt total = 0;
  BigInt product = 1;
  std::size_t zero_degrees = 0;
  for (const std::uint64_t d : deg) {
    total += to_big(d);
    if (d == 0) {
      ++zero_degrees;
    } else {
      product *= to_big(d);
    }
  }
  // r depends on v only through deg v; compute once per distinct degree.
  std::map<std::uint64_t, RDegree> cache;
  std::vector<RDegree> out;
  out.reserve(deg.size());
  for (const std::uint64_t d : deg) {
    auto it = cache.find(d);
    if (it == cache.end()) {
      RDegree r;
      r.sum_degree = total - to_big(d);
      if (d == 0) {
        // Product over the other vertices; zero if another vertex is isolated.
        r.product_degree = zero_degrees > 1 ? BigInt(0) : product;
      } else {
        r.product_degree = zero_degrees > 0 ? BigInt(0) : BigInt(product / to_big(d));
      }
      it = cache.emplace(d, std::move(r)).first;
    }
    out.push_back(it->second);
  }
  return out;
}

RDegree r_degree(const IndexEngine& g, std::size_t v) { return r_degrees(g).at(v); }

IndexValue r1(const IndexEngine& g) {
  BigInt sum = 0;
  for (const RDegree& r : r_degrees(g)) {
    const BigInt value = r.r();
    sum += value * value;
  }
  return sum;
}

IndexValue r2(const IndexEngine& g) {
  const auto rs = r_degrees(g);
  const auto deg = g.degrees();
  std::map<std::uint64_t, BigInt> r_of_degree;
  for (std::size_t v = 0; v < rs.size(); ++v) {
    r_of_degree.try_emplace(deg[v], rs[v].r());
  }
  const auto groups = group_edges(g.edges(), [&](std::uint32_t v) { return deg[v]; });
  BigInt sum = 0;
  for (const auto& [key, count] : groups) {
    sum += r_of_degree.at(key.first) * r_of_degree.at(key.second) * to_big(count);
  }
  return sum;
}

IndexValue r3(const IndexEngine& g) {
  const auto rs = r_degrees(g);
  BigInt sum = 0;
  for (const Edge& e : g.edges()) {
    sum += rs[e.u].r() + rs[e.v].r();
  }
  return sum;
}

IndexValue mostar(const IndexEngine& g) {
  std::uint64_t sum = 0;
  for (const Edge& e : g.edges()) {
    const auto counts = mostar_counts(g.distances(), e);
    sum += counts.n_u > counts.n_v ? counts.n_u - counts.n_v : counts.n_v - counts.n_u;
  }
  return to_big(sum);
}

// ---------------------------------------------------------------------------

IndexValue compute_index(const IndexEngine& g, IndexId id) {
  switch (id) {
    case IndexId::wiener:
      return wiener(g);
    case IndexId::hyper_wiener:
      return hyper_wiener(g);
    case IndexId::harary:
      return harary(g);
    case IndexId::zagreb1:
      return zagreb1(g);
    case IndexId::zagreb2:
      return zagreb2(g);
    case IndexId::degree_distance:
      return degree_distance(g);
    case IndexId::gutman:
      return gutman(g);
    case IndexId::balaban:
      return balaban(g);
    case IndexId::harmonic:
      return harmonic(g);
    case IndexId::randic:
      return randic(g);
    case IndexId::r1:
      return r1(g);
    case IndexId::r2:
      return r2(g);
    case IndexId::r3:
      return r3(g);
    case IndexId::mostar:
      return mostar(g);
  }
  return {};
}

IndexReport compute_report(const IndexEngine& g, std::span<const IndexId> ids) {
  IndexReport report;
  for (const IndexId id : ids) {
    if (!report.contains(id)) {
      report.emplace(id, compute_index(g, id));
    }
  }
  return report;
}

}  // namespace graphlab
