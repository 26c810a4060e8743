#include "lexmetric/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>

namespace lexmetric {

void Graph::add_vertex(const PointId& v) {
  if (std::find(vertices_.begin(), vertices_.end(), v) == vertices_.end()) {
    vertices_.push_back(v);
  }
}

void Graph::add_edge(const PointId& u, const PointId& v, double weight) {
  if (u == v) throw MetricError("self-loop on vertex '" + u + "'");
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw MetricError("edge " + u + "-" + v + " must have a positive weight");
  }
  add_vertex(u);
  add_vertex(v);
  edges_.push_back({u, v, weight});
}

namespace {

constexpr double kUnreached = std::numeric_limits<double>::infinity();

using Adjacency = std::vector<std::vector<std::pair<std::size_t, double>>>;

std::vector<double> bfs(const Adjacency& adj, std::size_t source) {
  std::vector<double> dist(adj.size(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0.0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [v, w] : adj[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1.0;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<double> dijkstra(const Adjacency& adj, std::size_t source) {
  std::vector<double> dist(adj.size(), kUnreached);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        heap.emplace(dist[v], v);
      }
    }
  }
  return dist;
}

FiniteMetricSpace map_distances(const FiniteMetricSpace& space,
                                const std::function<double(double)>& f) {
  auto table = space.table();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      if (i != j) table[i][j] = f(table[i][j]);
  return FiniteMetricSpace(space.points(), std::move(table), space.tolerance());
}

}  // namespace

FiniteMetricSpace graph_metric(const Graph& g, double tolerance) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::unordered_map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vs[i], i);

  Adjacency adj(n);
  bool unit = true;
  for (const Edge& e : g.edges()) {
    const std::size_t u = index.at(e.u);
    const std::size_t v = index.at(e.v);
    adj[u].emplace_back(v, e.weight);
    adj[v].emplace_back(u, e.weight);
    unit = unit && e.weight == 1.0;
  }

  std::vector<std::vector<double>> table;
  table.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto row = unit ? bfs(adj, s) : dijkstra(adj, s);
    for (std::size_t t = 0; t < n; ++t) {
      if (row[t] == kUnreached) {
        throw MetricError("graph is disconnected: no path from '" + vs[s] +
                          "' to '" + vs[t] + "'");
      }
    }
    table.push_back(std::move(row));
  }
  return FiniteMetricSpace(vs, std::move(table), tolerance);
}

FiniteMetricSpace discrete_metric(std::size_t n, double tolerance) {
  if (n < 2) throw MetricError("discrete metric needs n >= 2");
  std::vector<PointId> labels;
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    table[i][i] = 0.0;
  }
  return FiniteMetricSpace(std::move(labels), std::move(table), tolerance);
}

FiniteMetricSpace gravitational(const FiniteMetricSpace& space, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw MetricError("gravitation parameter t must be positive");
  }
  const double cap = 2.0 * t;
  return map_distances(space, [cap](double d) { return std::min(cap, d); });
}

FiniteMetricSpace squash(double eta, const FiniteMetricSpace& space) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw MetricError("squash parameter eta must be positive");
  }
  return map_distances(space,
                       [eta](double d) { return eta * d / (eta + d); });
}

std::string product_label(const PointId& x, const PointId& y) {
  return x + kProductSeparator + y;
}

namespace {

FiniteMetricSpace build_product(const FiniteMetricSpace& base,
                                const FiniteMetricSpace& fib) {
  const std::size_t nx = base.size();
  const std::size_t ny = fib.size();
  const double eta_min = nearness(base);
  if (!(eta_min > 0.0)) {
    throw MetricError("lexicographic product requires a base with positive nearness");
  }
  std::vector<double> caps(nx);
  for (std::size_t x = 0; x < nx; ++x) caps[x] = 2.0 * nearness_point(base, x);

  std::vector<PointId> labels;
  labels.reserve(nx * ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      labels.push_back(product_label(base.label(x), fib.label(y)));

  std::vector<std::vector<double>> table(nx * ny, std::vector<double>(nx * ny));
  for (std::size_t p = 0; p < nx * ny; ++p) {
    const std::size_t x = p / ny, y = p % ny;
    for (std::size_t q = 0; q < nx * ny; ++q) {
      const std::size_t x2 = q / ny, y2 = q % ny;
      table[p][q] = x != x2 ? base.distance(x, x2)
                            : std::min(caps[x], fib.distance(y, y2));
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(table),
                           std::max(base.tolerance(), fib.tolerance()));
}

}  // namespace

ProductSpace::ProductSpace(FiniteMetricSpace base, FiniteMetricSpace fiber_space)
    : base_(std::move(base)),
      fiber_space_(std::move(fiber_space)),
      space_(build_product(base_, fiber_space_)) {}

ProductSpace lexicographic(const FiniteMetricSpace& base,
                           const FiniteMetricSpace& fiber_space) {
  return ProductSpace(base, fiber_space);
}

FiberSpace fiber(const ProductSpace& product, const PointId& x) {
  const std::size_t xi = product.base().index_of(x);
  const auto& ys = product.fiber_space();
  std::vector<std::vector<double>> table(ys.size(), std::vector<double>(ys.size()));
  for (std::size_t a = 0; a < ys.size(); ++a)
    for (std::size_t b = 0; b < ys.size(); ++b)
      table[a][b] = product.space().distance(product.point_index(xi, a),
                                             product.point_index(xi, b));
  return {x, FiniteMetricSpace(ys.points(), std::move(table),
                               product.space().tolerance())};
}

}  // namespace lexmetric
