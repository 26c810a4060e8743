#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lexmetric/metric_space.hpp"

namespace lexmetric {

using PointSet = std::vector<PointId>;

/// A computation refused because its input exceeds a configured size guard.
class LimitError : public std::runtime_error {
 public:
  LimitError(const std::string& guard, std::size_t limit, std::size_t actual);

  const std::string& guard() const { return guard_; }
  std::size_t limit() const { return limit_; }
  std::size_t actual() const { return actual_; }

 private:
  std::string guard_;
  std::size_t limit_;
  std::size_t actual_;
};

enum class DimensionSolver {
  kBranchAndBound,  // minimum hitting set over the pair table
  kEnumeration,     // increasing-cardinality subset scan
};

struct ResolveOptions {
  bool enumerate_all = false;
  std::size_t max_enumeration_points = 16;
  DimensionSolver solver = DimensionSolver::kBranchAndBound;
};

struct ResolveResult {
  std::size_t dimension = 0;
  PointSet basis;  // lexicographically least metric basis, labels sorted
  std::optional<std::vector<PointSet>> all_bases;
};

/// For every unordered pair {u, v} (u < v by point index), the points w with
/// |d(u,w) - d(v,w)| > tolerance.
struct PairTable {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<boost::dynamic_bitset<>> distinguishers;

  const boost::dynamic_bitset<>& of(std::size_t u, std::size_t v) const;
  std::size_t point_count = 0;
};

PairTable pair_table(const FiniteMetricSpace& space);

/// Distance vector from x to each landmark, in landmark order.
std::vector<double> coordinates(const FiniteMetricSpace& space,
                                std::span<const PointId> landmarks,
                                const PointId& x);

bool resolves(const FiniteMetricSpace& space, std::span<const PointId> subset);
bool resolves(const FiniteMetricSpace& space,
              std::span<const std::size_t> subset);

ResolveResult metric_dimension(const FiniteMetricSpace& space,
                               const ResolveOptions& options = {});

/// Set-cover greedy over the pair table; ties go to the smallest label.
PointSet greedy_generator(const FiniteMetricSpace& space);

/// Sorts labels by the space's label order.
PointSet sorted_by_label(PointSet labels);

}  // namespace lexmetric
