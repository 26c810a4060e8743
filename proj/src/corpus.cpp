#include "lexmetric/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lexmetric {

namespace {

std::string vertex_name(std::size_t i) { return std::string(1, char('a' + i)); }

using EdgeMask = std::uint32_t;

struct EdgeIndex {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<std::vector<std::size_t>> slot;  // slot[u][v] = edge number
  explicit EdgeIndex(std::size_t n) : slot(n, std::vector<std::size_t>(n)) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        slot[u][v] = slot[v][u] = ends.size();
        ends.emplace_back(u, v);
      }
  }
};

bool connected(std::size_t n, const EdgeIndex& idx, EdgeMask mask) {
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (comp[a] != a) a = comp[a] = comp[comp[a]];
    return a;
  };
  for (std::size_t e = 0; e < idx.ends.size(); ++e)
    if (mask >> e & 1u) comp[find(idx.ends[e].first)] = find(idx.ends[e].second);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// Smallest relabeled edge mask over all vertex permutations.
EdgeMask canonical(std::size_t n, const EdgeIndex& idx, EdgeMask mask) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  EdgeMask best = ~EdgeMask{0};
  do {
    EdgeMask m = 0;
    for (std::size_t e = 0; e < idx.ends.size(); ++e) {
      if (!(mask >> e & 1u)) continue;
      m |= EdgeMask{1} << idx.slot[perm[idx.ends[e].first]][perm[idx.ends[e].second]];
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

FiniteMetricSpace table_space(std::vector<PointId> labels,
                              std::vector<std::vector<double>> table) {
  return FiniteMetricSpace(std::move(labels), std::move(table));
}

}  // namespace

std::vector<NamedSpace> connected_graphs(std::size_t max_vertices) {
  std::vector<NamedSpace> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    const EdgeIndex idx(n);
    std::set<EdgeMask> seen;
    std::vector<EdgeMask> reps;
    for (EdgeMask mask = 0; mask < (EdgeMask{1} << idx.ends.size()); ++mask) {
      if (!connected(n, idx, mask)) continue;
      if (seen.insert(canonical(n, idx, mask)).second) reps.push_back(mask);
    }
    // Fewer edges first, so paths and trees precede denser graphs.
    std::stable_sort(reps.begin(), reps.end(), [](EdgeMask a, EdgeMask b) {
      return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (EdgeMask mask : reps) {
      Graph g;
      std::string name = "n" + std::to_string(n) + ":";
      for (std::size_t v = 0; v < n; ++v) g.add_vertex(vertex_name(v));
      bool first = true;
      for (std::size_t e = 0; e < idx.ends.size(); ++e) {
        if (!(mask >> e & 1u)) continue;
        const auto [u, v] = idx.ends[e];
        g.add_edge(vertex_name(u), vertex_name(v));
        name += (first ? "" : ",") + vertex_name(u) + vertex_name(v);
        first = false;
      }
      out.push_back({name, graph_metric(g)});
    }
  }
  return out;
}

std::vector<NamedSpace> weighted_fibers() {
  return {
      {"pair-0.5", table_space({"p", "q"}, {{0, 0.5}, {0.5, 0}})},
      {"line-1-2", table_space({"p", "q", "r"},
                               {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}})},
      {"iso-0.5-1.5", table_space({"p", "q", "r"},
                                  {{0, 0.5, 1.5}, {0.5, 0, 1.5}, {1.5, 1.5, 0}})},
  };
}

SmallCorpus small_corpus() {
  SmallCorpus c;
  c.bases = connected_graphs(4);
  c.fibers = connected_graphs(3);
  for (auto& f : weighted_fibers()) c.fibers.push_back(std::move(f));
  return c;
}

std::size_t RandomSpaces::uniform(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

Graph RandomSpaces::connected_graph(std::size_t n, bool weighted) {
  static constexpr double kWeights[] = {0.5, 1.0, 1.0, 1.5, 2.0, 3.0};
  auto weight = [&] { return weighted ? kWeights[uniform(0, 5)] : 1.0; };

  Graph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex(vertex_name(v));
  std::set<std::pair<std::size_t, std::size_t>> present;
  // Random spanning tree, then extra edges with probability ~1/3.
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = uniform(0, v - 1);
    present.emplace(u, v);
    g.add_edge(vertex_name(u), vertex_name(v), weight());
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (present.count({u, v}) || uniform(0, 2) != 0) continue;
      g.add_edge(vertex_name(u), vertex_name(v), weight());
    }
  }
  return g;
}

FiniteMetricSpace RandomSpaces::unweighted_metric(std::size_t n) {
  return graph_metric(connected_graph(n, false));
}

FiniteMetricSpace RandomSpaces::weighted_metric(std::size_t n) {
  return graph_metric(connected_graph(n, true));
}

std::pair<FiniteMetricSpace, FiniteMetricSpace> RandomSpaces::weighted_pair(
    std::size_t max_product_points, std::size_t max_side) {
  const std::size_t nx = uniform(2, std::min(max_side, max_product_points / 2));
  const std::size_t ny = uniform(2, std::min(max_side, max_product_points / nx));
  auto m = weighted_metric(nx);
  auto m2 = weighted_metric(ny);
  return {std::move(m), std::move(m2)};
}

}  // namespace lexmetric
