#include "lexmetric/twins.hpp"

#include <algorithm>
#include <numeric>

#include "lexmetric/constructions.hpp"

namespace lexmetric {

bool are_twins(const FiniteMetricSpace& space, std::size_t u, std::size_t v) {
  if (u == v) return true;
  for (std::size_t w = 0; w < space.size(); ++w) {
    if (w == u || w == v) continue;
    if (!space.same(space.distance(u, w), space.distance(v, w))) return false;
  }
  return true;
}

TwinPartition twin_classes(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (are_twins(space, u, v)) parent[find(v)] = find(u);

  TwinPartition partition;
  std::vector<std::size_t> slot(n, n);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t root = find(u);
    if (slot[root] == n) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(u);
  }

  for (const auto& g : groups) {
    TwinClass c;
    for (std::size_t i = 0; i < g.size(); ++i) {
      c.members.push_back(space.label(g[i]));
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (!are_twins(space, g[i], g[j])) {
          throw MetricError("twin relation is not transitive at tolerance: '" +
                            space.label(g[i]) + "' and '" + space.label(g[j]) +
                            "' are joined through other twins");
        }
      }
    }
    if (g.size() > 1) {
      c.gap = space.distance(g[0], g[1]);
      c.class_nearness = nearness_point(space, g[0]);
    }
    partition.classes.push_back(std::move(c));
  }
  return partition;
}

bool is_twins_free(const FiniteMetricSpace& space) {
  const auto p = twin_classes(space);
  return std::all_of(p.classes.begin(), p.classes.end(),
                     [](const TwinClass& c) { return c.singleton(); });
}

std::vector<PointSet> SpecialClassSet::member_classes() const {
  std::vector<PointSet> out;
  for (const auto& e : entries)
    if (e.special) out.push_back(e.twin_class.members);
  return out;
}

std::size_t SpecialClassSet::extra_landmarks() const {
  std::size_t total = 0;
  for (const auto& e : entries)
    if (e.special) total += e.twin_class.members.size() - 1;
  return total;
}

namespace {

MemberCheck check_member(const FiniteMetricSpace& m, std::size_t x,
                         const FiniteMetricSpace& m2, double gap,
                         std::size_t max_enumeration_points) {
  MemberCheck check;
  check.member = m.label(x);
  check.nearness = nearness_point(m, x);

  const double cap = 2.0 * check.nearness;
  const auto capped = gravitational(m2, check.nearness);
  const FiniteMetricSpace fiber_space(
      capped.points(), capped.table(),
      std::max(m.tolerance(), m2.tolerance()));

  ResolveOptions options;
  options.enumerate_all = true;
  options.max_enumeration_points = max_enumeration_points;
  const ResolveResult bases = metric_dimension(fiber_space, options);
  check.fiber_dimension = bases.dimension;

  for (const PointSet& basis : *bases.all_bases) {
    BasisCheck bc{basis, std::nullopt};
    std::size_t matches = 0;
    for (std::size_t z = 0; z < m2.size(); ++z) {
      const bool all_at_gap =
          std::all_of(basis.begin(), basis.end(), [&](const PointId& s) {
            const double d = std::min(cap, m2.distance(z, m2.index_of(s)));
            return fiber_space.same(d, gap);
          });
      if (all_at_gap) {
        ++matches;
        if (!bc.witness) bc.witness = m2.label(z);
      }
    }
    if (matches > 1) {
      throw std::logic_error("special-class witness for member '" + check.member +
                             "' is not unique");
    }
    check.bases.push_back(std::move(bc));
  }
  return check;
}

}  // namespace

SpecialClassSet special_classes(const FiniteMetricSpace& m,
                                const FiniteMetricSpace& m2,
                                std::size_t max_enumeration_points) {
  if (m2.size() > max_enumeration_points) {
    throw LimitError("max-enumeration-points", max_enumeration_points, m2.size());
  }
  SpecialClassSet result;
  for (const TwinClass& c : twin_classes(m).classes) {
    if (c.singleton()) continue;
    SpecialClassEntry entry{c, true, {}};
    for (const PointId& member : c.members) {
      MemberCheck mc = check_member(m, m.index_of(member), m2, *c.gap,
                                    max_enumeration_points);
      const bool all_witnessed =
          std::all_of(mc.bases.begin(), mc.bases.end(),
                      [](const BasisCheck& b) { return b.witness.has_value(); });
      entry.special = entry.special && all_witnessed;
      entry.members.push_back(std::move(mc));
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

}  // namespace lexmetric
