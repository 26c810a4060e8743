#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lexmetric/metric_space.hpp"

namespace lexmetric {

struct Edge {
  PointId u;
  PointId v;
  double weight = 1.0;
};

/// Undirected graph with positive edge weights. Vertex order is insertion
/// order; add_edge declares unseen endpoints.
class Graph {
 public:
  Graph() = default;

  void add_vertex(const PointId& v);
  void add_edge(const PointId& u, const PointId& v, double weight = 1.0);

  const std::vector<PointId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<PointId> vertices_;
  std::vector<Edge> edges_;
};

/// All-pairs shortest-path metric. Unit-weight graphs use breadth-first
/// search, anything else a binary-heap Dijkstra from every source.
FiniteMetricSpace graph_metric(const Graph& g,
                               double tolerance = kDefaultTolerance);

/// Discrete metric on points "v0".."v{n-1}".
FiniteMetricSpace discrete_metric(std::size_t n,
                                  double tolerance = kDefaultTolerance);

/// Truncation d_t = min{2t, d}.
FiniteMetricSpace gravitational(const FiniteMetricSpace& space, double t);

/// Bounded transform d* = eta * d / (eta + d). Strictly increasing in d and
/// bounded above by eta.
FiniteMetricSpace squash(double eta, const FiniteMetricSpace& space);

/// Reserved separator between base and fiber labels in product points.
inline constexpr char kProductSeparator = '|';

/// Lexicographic product M o M'. Points are ordered base-major
/// (x0|y0, x0|y1, ..., x1|y0, ...).
class ProductSpace {
 public:
  ProductSpace(FiniteMetricSpace base, FiniteMetricSpace fiber_space);

  const FiniteMetricSpace& space() const { return space_; }
  const FiniteMetricSpace& base() const { return base_; }
  const FiniteMetricSpace& fiber_space() const { return fiber_space_; }

  std::size_t base_index(std::size_t p) const { return p / fiber_space_.size(); }
  std::size_t fiber_index(std::size_t p) const { return p % fiber_space_.size(); }
  std::size_t point_index(std::size_t x, std::size_t y) const {
    return x * fiber_space_.size() + y;
  }

  const PointId& base_of(const PointId& p) const {
    return base_.label(base_index(space_.index_of(p)));
  }
  const PointId& fiber_of(const PointId& p) const {
    return fiber_space_.label(fiber_index(space_.index_of(p)));
  }

 private:
  FiniteMetricSpace base_;
  FiniteMetricSpace fiber_space_;
  FiniteMetricSpace space_;
};

ProductSpace lexicographic(const FiniteMetricSpace& base,
                           const FiniteMetricSpace& fiber_space);

std::string product_label(const PointId& x, const PointId& y);

/// The subspace {x} x Y of a product, relabeled with the fiber labels.
struct FiberSpace {
  PointId base;  // the x this fiber sits over
  FiniteMetricSpace space;
};

FiberSpace fiber(const ProductSpace& product, const PointId& x);

}  // namespace lexmetric
