#include "lexmetric/resolving.hpp"

#include <algorithm>
#include <limits>

namespace lexmetric {

LimitError::LimitError(const std::string& guard, std::size_t limit,
                       std::size_t actual)
    : std::runtime_error(guard + " exceeded: " + std::to_string(actual) +
                         " points, limit " + std::to_string(limit)),
      guard_(guard),
      limit_(limit),
      actual_(actual) {}

namespace {

std::size_t pair_slot(std::size_t u, std::size_t v, std::size_t n) {
  if (u > v) std::swap(u, v);
  // Row-major index into the strict upper triangle.
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

bool distinguishes(const FiniteMetricSpace& s, std::size_t u, std::size_t v,
                   std::size_t w) {
  return !s.same(s.distance(u, w), s.distance(v, w));
}

}  // namespace

const boost::dynamic_bitset<>& PairTable::of(std::size_t u,
                                             std::size_t v) const {
  if (u == v || u >= point_count || v >= point_count) {
    throw MetricError("pair table lookup needs two distinct points");
  }
  return distinguishers[pair_slot(u, v, point_count)];
}

PairTable pair_table(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  PairTable table;
  table.point_count = n;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      boost::dynamic_bitset<> bits(n);
      for (std::size_t w = 0; w < n; ++w)
        if (distinguishes(space, u, v, w)) bits.set(w);
      table.pairs.emplace_back(u, v);
      table.distinguishers.push_back(std::move(bits));
    }
  }
  return table;
}

std::vector<double> coordinates(const FiniteMetricSpace& space,
                                std::span<const PointId> landmarks,
                                const PointId& x) {
  if (landmarks.empty()) throw MetricError("coordinates need at least one landmark");
  const std::size_t xi = space.index_of(x);
  std::vector<double> out;
  out.reserve(landmarks.size());
  for (const auto& l : landmarks) out.push_back(space.distance(xi, space.index_of(l)));
  return out;
}

bool resolves(const FiniteMetricSpace& space,
              std::span<const std::size_t> subset) {
  const std::size_t n = space.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      bool separated = false;
      for (std::size_t s : subset) {
        if (distinguishes(space, u, v, s)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool resolves(const FiniteMetricSpace& space, std::span<const PointId> subset) {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& p : subset) idx.push_back(space.index_of(p));
  return resolves(space, std::span<const std::size_t>(idx));
}

PointSet sorted_by_label(PointSet labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

namespace {

using Bits = boost::dynamic_bitset<>;

/// Minimum hitting set over the pair table. Elements are identified by their
/// rank in label order so that "smaller rank first" is lexicographic order.
class HittingSetSearch {
 public:
  explicit HittingSetSearch(const FiniteMetricSpace& space)
      : n_(space.size()) {
    const PairTable table = pair_table(space);
    const auto& order = space.label_order();
    std::vector<std::size_t> rank_of(n_);
    for (std::size_t r = 0; r < n_; ++r) rank_of[order[r]] = r;

    m_ = table.pairs.size();
    sets_.reserve(m_);
    hits_.assign(n_, Bits(m_));
    for (std::size_t p = 0; p < m_; ++p) {
      Bits ranked(n_);
      for (std::size_t w = 0; w < n_; ++w)
        if (table.distinguishers[p].test(w)) ranked.set(rank_of[w]);
      if (ranked.none()) {
        throw MetricError("points '" + space.label(table.pairs[p].first) +
                          "' and '" + space.label(table.pairs[p].second) +
                          "' cannot be distinguished; the table is not a metric");
      }
      for (std::size_t r = ranked.find_first(); r != Bits::npos;
           r = ranked.find_next(r))
        hits_[r].set(p);
      sets_.push_back(std::move(ranked));
    }
  }

  std::size_t minimum_size() {
    mode_ = Mode::kOptimize;
    limit_ = n_ + 1;
    stop_ = false;
    best_.clear();
    std::vector<std::size_t> chosen;
    search(all_pairs(), all_elements(), chosen);
    return limit_;
  }

  /// Lexicographically least hitting set of size k (k must be optimal).
  std::vector<std::size_t> least_of_size(std::size_t k) {
    std::vector<std::size_t> prefix;
    Bits uncovered = all_pairs();
    std::size_t next = 0;
    while (uncovered.any()) {
      bool extended = false;
      for (std::size_t c = next; c < n_; ++c) {
        Bits rest = uncovered - hits_[c];
        Bits allowed(n_);
        for (std::size_t r = c + 1; r < n_; ++r) allowed.set(r);
        if (prefix.size() < k && feasible(rest, allowed, k - prefix.size() - 1)) {
          prefix.push_back(c);
          uncovered = std::move(rest);
          next = c + 1;
          extended = true;
          break;
        }
      }
      if (!extended) throw std::logic_error("hitting set of claimed size not found");
    }
    return prefix;
  }

  std::vector<std::vector<std::size_t>> all_of_size(std::size_t k) {
    mode_ = Mode::kCollect;
    limit_ = k + 1;
    stop_ = false;
    found_.clear();
    std::vector<std::size_t> chosen;
    search(all_pairs(), all_elements(), chosen);
    for (auto& s : found_) std::sort(s.begin(), s.end());
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  enum class Mode { kOptimize, kCollect, kFeasible };

  Bits all_pairs() const { return Bits(m_).set(); }
  Bits all_elements() const { return Bits(n_).set(); }

  bool feasible(const Bits& uncovered, const Bits& allowed, std::size_t budget) {
    if (uncovered.none()) return true;
    if (budget == 0) return false;
    mode_ = Mode::kFeasible;
    limit_ = budget + 1;
    stop_ = false;
    std::vector<std::size_t> chosen;
    search(uncovered, allowed, chosen);
    return stop_;
  }

  // Disjoint-structure bound. Pairs with a single remaining distinguisher
  // force it; pairs with two remaining distinguishers are edges of a graph
  // whose vertex-disjoint cliques of size s each need s - 1 elements; every
  // other pair whose distinguishers avoid all of the above needs one more.
  std::size_t lower_bound(const Bits& uncovered, const Bits& allowed) const {
    Bits used(n_);
    std::size_t bound = 0;
    std::vector<Bits> adjacency;
    Bits in_graph(n_);
    for (std::size_t p = uncovered.find_first(); p != Bits::npos;
         p = uncovered.find_next(p)) {
      Bits s = sets_[p] & allowed;
      const std::size_t c = s.count();
      if (c == 0) return n_ + 1;
      if (c == 1 && !s.intersects(used)) {
        ++bound;
        used |= s;
      } else if (c == 2) {
        if (adjacency.empty()) adjacency.assign(n_, Bits(n_));
        const std::size_t a = s.find_first();
        const std::size_t b = s.find_next(a);
        adjacency[a].set(b);
        adjacency[b].set(a);
        in_graph.set(a);
        in_graph.set(b);
      }
    }
    if (!adjacency.empty()) {
      in_graph -= used;
      for (std::size_t v = in_graph.find_first(); v != Bits::npos;
           v = in_graph.find_next(v)) {
        if (used.test(v)) continue;
        Bits clique(n_);
        clique.set(v);
        Bits candidates = adjacency[v] - used;
        for (std::size_t w = candidates.find_first(); w != Bits::npos;
             w = candidates.find_next(w)) {
          if (clique.is_subset_of(adjacency[w])) clique.set(w);
        }
        if (clique.count() > 1) {
          bound += clique.count() - 1;
          used |= clique;
        }
      }
    }
    for (std::size_t p = uncovered.find_first(); p != Bits::npos;
         p = uncovered.find_next(p)) {
      Bits s = sets_[p] & allowed;
      if (!s.intersects(used)) {
        ++bound;
        used |= s;
      }
    }
    return bound;
  }

  void search(const Bits& uncovered, Bits allowed,
              std::vector<std::size_t>& chosen) {
    if (stop_) return;
    if (uncovered.none()) {
      switch (mode_) {
        case Mode::kOptimize:
          limit_ = chosen.size();
          best_ = chosen;
          break;
        case Mode::kCollect:
          found_.push_back(chosen);
          break;
        case Mode::kFeasible:
          stop_ = true;
          break;
      }
      return;
    }
    // Sizes must stay strictly below limit_.
    if (chosen.size() + 1 >= limit_) return;
    if (chosen.size() + lower_bound(uncovered, allowed) >= limit_) return;

    std::size_t branch_pair = Bits::npos;
    std::size_t branch_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t p = uncovered.find_first(); p != Bits::npos;
         p = uncovered.find_next(p)) {
      const std::size_t c = (sets_[p] & allowed).count();
      if (c < branch_count) {
        branch_count = c;
        branch_pair = p;
        if (c <= 1) break;
      }
    }
    if (branch_count == 0) return;

    const Bits candidates = sets_[branch_pair] & allowed;
    for (std::size_t e = candidates.find_first(); e != Bits::npos;
         e = candidates.find_next(e)) {
      chosen.push_back(e);
      search(uncovered - hits_[e], allowed, chosen);
      chosen.pop_back();
      if (stop_) return;
      // Later branches exclude e so every set is visited once.
      allowed.reset(e);
      if (chosen.size() + 1 >= limit_) return;
    }
  }

  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<Bits> sets_;  // per pair, distinguishers by rank
  std::vector<Bits> hits_;  // per rank, pairs it distinguishes
  Mode mode_ = Mode::kOptimize;
  std::size_t limit_ = 0;
  bool stop_ = false;
  std::vector<std::size_t> best_;
  std::vector<std::vector<std::size_t>> found_;
};

PointSet labels_of_ranks(const FiniteMetricSpace& space,
                         const std::vector<std::size_t>& ranks) {
  PointSet out;
  for (std::size_t r : ranks) out.push_back(space.label(space.label_order()[r]));
  return out;
}

// Calls visit(ranks) for every k-subset of {0..n-1} in lexicographic order
// until visit returns false.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(c)) return;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

ResolveResult enumerate_dimension(const FiniteMetricSpace& space,
                                  bool enumerate_all) {
  const std::size_t n = space.size();
  const auto& order = space.label_order();
  ResolveResult result;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> hits;
    for_each_combination(n, k, [&](const std::vector<std::size_t>& ranks) {
      std::vector<std::size_t> idx;
      for (std::size_t r : ranks) idx.push_back(order[r]);
      if (resolves(space, std::span<const std::size_t>(idx))) {
        hits.push_back(ranks);
        return enumerate_all;
      }
      return true;
    });
    if (!hits.empty()) {
      result.dimension = k;
      result.basis = labels_of_ranks(space, hits.front());
      if (enumerate_all) {
        std::vector<PointSet> all;
        for (const auto& h : hits) all.push_back(labels_of_ranks(space, h));
        result.all_bases = std::move(all);
      }
      return result;
    }
  }
  throw MetricError("no resolving set exists; the table is not a metric");
}

}  // namespace

ResolveResult metric_dimension(const FiniteMetricSpace& space,
                               const ResolveOptions& options) {
  if (options.enumerate_all && space.size() > options.max_enumeration_points) {
    throw LimitError("max-enumeration-points", options.max_enumeration_points,
                     space.size());
  }
  if (options.solver == DimensionSolver::kEnumeration) {
    return enumerate_dimension(space, options.enumerate_all);
  }

  HittingSetSearch search(space);
  ResolveResult result;
  result.dimension = search.minimum_size();
  result.basis = labels_of_ranks(space, search.least_of_size(result.dimension));
  if (options.enumerate_all) {
    std::vector<PointSet> all;
    for (const auto& s : search.all_of_size(result.dimension))
      all.push_back(labels_of_ranks(space, s));
    result.all_bases = std::move(all);
  }
  return result;
}

PointSet greedy_generator(const FiniteMetricSpace& space) {
  const PairTable table = pair_table(space);
  const std::size_t n = space.size();
  std::vector<bool> covered(table.pairs.size(), false);
  std::size_t remaining = table.pairs.size();
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> chosen;

  while (remaining > 0) {
    std::size_t best = n, best_gain = 0;
    for (std::size_t w : space.label_order()) {
      if (taken[w]) continue;
      std::size_t gain = 0;
      for (std::size_t p = 0; p < table.pairs.size(); ++p)
        if (!covered[p] && table.distinguishers[p].test(w)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = w;
      }
    }
    if (best == n) throw MetricError("greedy stalled; the table is not a metric");
    taken[best] = true;
    chosen.push_back(best);
    for (std::size_t p = 0; p < table.pairs.size(); ++p) {
      if (!covered[p] && table.distinguishers[p].test(best)) {
        covered[p] = true;
        --remaining;
      }
    }
  }
  PointSet out;
  for (std::size_t w : chosen) out.push_back(space.label(w));
  return sorted_by_label(std::move(out));
}

}  // namespace lexmetric
