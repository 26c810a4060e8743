#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lexmetric/constructions.hpp"
#include "lexmetric/metric_space.hpp"

namespace lexmetric {

struct NamedSpace {
  std::string name;
  FiniteMetricSpace space;
};

/// Every connected unweighted graph on 2..max_vertices vertices, one per
/// isomorphism class. Vertices are labeled a, b, c, ...
std::vector<NamedSpace> connected_graphs(std::size_t max_vertices);

/// Hand-built weighted fibers: a pair at 0.5, a collinear triple 1-2-3 and
/// an isosceles triple (0.5, 1.5, 1.5).
std::vector<NamedSpace> weighted_fibers();

/// The small verification corpus: bases are connected graphs on <= 4
/// vertices; fibers are connected graphs on <= 3 vertices plus
/// weighted_fibers().
struct SmallCorpus {
  std::vector<NamedSpace> bases;
  std::vector<NamedSpace> fibers;
};
SmallCorpus small_corpus();

/// Seeded generator for random connected graphs and weighted metrics.
/// Weights are drawn from a small dyadic set so sums are exact and ties
/// (and therefore twins) occur.
class RandomSpaces {
 public:
  explicit RandomSpaces(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive

  Graph connected_graph(std::size_t n, bool weighted);
  FiniteMetricSpace unweighted_metric(std::size_t n);
  FiniteMetricSpace weighted_metric(std::size_t n);

  /// Two weighted spaces with |X|, |Y| >= 2 and |X| * |Y| <= max_product_points.
  std::pair<FiniteMetricSpace, FiniteMetricSpace> weighted_pair(
      std::size_t max_product_points, std::size_t max_side = 6);

 private:
  std::mt19937_64 rng_;
};

}  // namespace lexmetric
