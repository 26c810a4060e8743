#include "lexmetric/metric_space.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lexmetric {

FiniteMetricSpace::FiniteMetricSpace(std::vector<PointId> points,
                                     std::vector<std::vector<double>> table,
                                     double tolerance)
    : points_(std::move(points)), tolerance_(tolerance) {
  const std::size_t n = points_.size();
  if (n < 2) {
    throw MetricError("a metric space needs at least two points, got " +
                      std::to_string(n));
  }
  if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_)) {
    throw MetricError("tolerance must be a finite nonnegative number");
  }
  if (table.size() != n) {
    throw MetricError("distance table has " + std::to_string(table.size()) +
                      " rows for " + std::to_string(n) + " points");
  }
  dist_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw MetricError("distance table row " + std::to_string(i) + " has " +
                        std::to_string(table[i].size()) +
                        " entries, expected " + std::to_string(n));
    }
    for (double d : table[i]) {
      if (!std::isfinite(d)) {
        throw MetricError("distance table row " + std::to_string(i) +
                          " contains a non-finite entry");
      }
      dist_.push_back(d);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(points_[i], i).second) {
      throw MetricError("duplicate point label '" + points_[i] + "'");
    }
  }
  label_order_.resize(n);
  std::iota(label_order_.begin(), label_order_.end(), std::size_t{0});
  std::sort(label_order_.begin(), label_order_.end(),
            [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
}

std::size_t FiniteMetricSpace::index_of(const PointId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw MetricError("unknown point '" + id + "'");
  return it->second;
}

std::vector<std::vector<double>> FiniteMetricSpace::table() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = distance(i, j);
  return out;
}

ValidationReport validate(const FiniteMetricSpace& space) {
  ValidationReport report;
  const std::size_t n = space.size();
  const double tol = space.tolerance();
  auto add = [&](const char* axiom, std::size_t a, std::size_t b, std::size_t c,
                 double lhs, double rhs) {
    report.violations.push_back(
        {axiom, {space.label(a), space.label(b), space.label(c)}, lhs, rhs});
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(space.distance(i, i)) > tol) {
      add("zero-diagonal", i, i, i, space.distance(i, i), 0.0);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i < j && !space.same(space.distance(i, j), space.distance(j, i))) {
        add("symmetry", i, j, j, space.distance(i, j), space.distance(j, i));
      }
      if (!(space.distance(i, j) > tol)) {
        add("identity", i, j, j, space.distance(i, j), tol);
      }
    }
  }
  // Triple is reported in path order (start, via, end).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double lhs = space.distance(i, j);
        const double rhs = space.distance(i, k) + space.distance(k, j);
        if (lhs > rhs + tol) add("triangle", i, k, j, lhs, rhs);
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

double nearness_point(const FiniteMetricSpace& space, std::size_t x) {
  if (x >= space.size()) throw MetricError("point index out of range");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (y != x) best = std::min(best, space.distance(x, y));
  }
  return best;
}

double nearness_point(const FiniteMetricSpace& space, const PointId& x) {
  return nearness_point(space, space.index_of(x));
}

double nearness(const FiniteMetricSpace& space) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < space.size(); ++x)
    best = std::min(best, nearness_point(space, x));
  return best;
}

double slack(const FiniteMetricSpace& space) {
  double best = 0.0;
  for (std::size_t x = 0; x < space.size(); ++x)
    best = std::max(best, nearness_point(space, x));
  return best;
}

double diameter(const FiniteMetricSpace& space) {
  double best = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      best = std::max(best, space.distance(i, j));
  return best;
}

SpaceStats stats(const FiniteMetricSpace& space) {
  SpaceStats out;
  out.nearness = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < space.size(); ++x) {
    const double eta = nearness_point(space, x);
    out.nearness_per_point.emplace_back(space.label(x), eta);
    out.nearness = std::min(out.nearness, eta);
    out.slack = std::max(out.slack, eta);
  }
  out.diameter = diameter(space);
  return out;
}

std::vector<PointId> ball(const FiniteMetricSpace& space,
                          const PointId& center, double radius) {
  if (!(radius > 0.0)) throw MetricError("ball radius must be positive");
  const std::size_t c = space.index_of(center);
  std::vector<PointId> out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (x == c || space.distance(c, x) < radius - space.tolerance()) {
      out.push_back(space.label(x));
    }
  }
  return out;
}

}  // namespace lexmetric
