#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lexmetric/metric_space.hpp"
#include "lexmetric/resolving.hpp"

namespace lexmetric {

struct TwinClass {
  PointSet members;  // in point order
  // Present for non-singleton classes: the common pairwise distance and the
  // common nearness of the members.
  std::optional<double> gap;
  std::optional<double> class_nearness;

  bool singleton() const { return members.size() == 1; }
};

struct TwinPartition {
  std::vector<TwinClass> classes;  // ordered by first member's point index
};

/// u and v are twins iff d(u,w) = d(v,w) (within tolerance) for every third
/// point w. Any two points of a 2-point space are twins.
bool are_twins(const FiniteMetricSpace& space, std::size_t u, std::size_t v);

/// Throws MetricError if the pairwise relation fails to be transitive at the
/// space's tolerance.
TwinPartition twin_classes(const FiniteMetricSpace& space);

bool is_twins_free(const FiniteMetricSpace& space);

/// One metric basis S_x of a member's fiber and the point z at capped
/// distance exactly gap from every element of S_x, if any.
struct BasisCheck {
  PointSet basis;
  std::optional<PointId> witness;
};

struct MemberCheck {
  PointId member;
  double nearness = 0.0;
  std::size_t fiber_dimension = 0;
  std::vector<BasisCheck> bases;
};

struct SpecialClassEntry {
  TwinClass twin_class;
  bool special = false;
  std::vector<MemberCheck> members;
};

/// The non-singleton twin classes of M, each with its full membership trace
/// for the special-class test.
struct SpecialClassSet {
  std::vector<SpecialClassEntry> entries;

  std::vector<PointSet> member_classes() const;
  /// Sum of (|class| - 1) over the special classes.
  std::size_t extra_landmarks() const;
};

/// Classes C of M such that for every x in C and every metric basis S of
/// gravitational(M2, nearness(x)) some z in M2 sits at capped distance
/// exactly gap(C) from all of S. Every member is checked.
SpecialClassSet special_classes(const FiniteMetricSpace& m,
                                const FiniteMetricSpace& m2,
                                std::size_t max_enumeration_points = 16);

}  // namespace lexmetric
