#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lexmetric {

using PointId = std::string;

inline constexpr double kDefaultTolerance = 1e-9;

/// Raised for structural problems: malformed tables, unknown point ids,
/// out-of-range parameters.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A labeled finite point set with a full n x n distance table.
///
/// Construction only checks structure (square table, n >= 2, unique labels,
/// finite entries). Whether the table is actually a metric is answered by
/// validate(), which reports every violated axiom.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<PointId> points,
                    std::vector<std::vector<double>> table,
                    double tolerance = kDefaultTolerance);

  std::size_t size() const { return points_.size(); }
  const std::vector<PointId>& points() const { return points_; }
  const PointId& label(std::size_t i) const { return points_.at(i); }
  double tolerance() const { return tolerance_; }

  double distance(std::size_t i, std::size_t j) const {
    return dist_[i * points_.size() + j];
  }
  double distance(const PointId& a, const PointId& b) const {
    return distance(index_of(a), index_of(b));
  }

  bool contains(const PointId& id) const { return index_.count(id) != 0; }
  std::size_t index_of(const PointId& id) const;

  /// Equality of two distances at this space's tolerance.
  bool same(double a, double b) const { return std::abs(a - b) <= tolerance_; }

  std::vector<std::vector<double>> table() const;

  /// Point indices ordered by label; this is the tie-breaking order used by
  /// every solver.
  const std::vector<std::size_t>& label_order() const { return label_order_; }

  friend bool operator==(const FiniteMetricSpace& a,
                         const FiniteMetricSpace& b) {
    return a.points_ == b.points_ && a.dist_ == b.dist_ &&
           a.tolerance_ == b.tolerance_;
  }

 private:
  std::vector<PointId> points_;
  std::vector<double> dist_;
  double tolerance_;
  std::unordered_map<PointId, std::size_t> index_;
  std::vector<std::size_t> label_order_;
};

struct Violation {
  std::string axiom;  // "zero-diagonal", "symmetry", "identity", "triangle"
  std::array<PointId, 3> points;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const FiniteMetricSpace& space);

struct SpaceStats {
  std::vector<std::pair<PointId, double>> nearness_per_point;
  double nearness = 0.0;
  double slack = 0.0;
  double diameter = 0.0;
};

double nearness_point(const FiniteMetricSpace& space, std::size_t x);
double nearness_point(const FiniteMetricSpace& space, const PointId& x);
double nearness(const FiniteMetricSpace& space);
double slack(const FiniteMetricSpace& space);
double diameter(const FiniteMetricSpace& space);
SpaceStats stats(const FiniteMetricSpace& space);

/// Open ball {x : d(center, x) < radius}, in point order. A distance within
/// tolerance of the radius counts as on the boundary. The center is always
/// included.
std::vector<PointId> ball(const FiniteMetricSpace& space,
                          const PointId& center, double radius);

}  // namespace lexmetric
