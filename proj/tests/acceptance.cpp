// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexmetric/constructions.hpp"
#include "lexmetric/corpus.hpp"
#include "lexmetric/resolving.hpp"
#include "lexmetric/theory.hpp"
#include "lexmetric/twins.hpp"
#include "oracles.hpp"

using namespace lexmetric;

namespace {

constexpr double kTau = 1e-9;
constexpr std::uint64_t kSeed = 20261018;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<PointId> letters(std::size_t n) {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, char('a' + i));
  return out;
}

// Every space the corpus touches: bases, fibers and their products.
std::vector<NamedSpace> corpus_spaces(const SmallCorpus& c) {
  std::vector<NamedSpace> out = c.bases;
  for (const auto& f : c.fibers) out.push_back(f);
  for (const auto& m : c.bases)
    for (const auto& f : c.fibers)
      out.push_back({m.name + " o " + f.name, lexicographic(m.space, f.space).space()});
  return out;
}

Outcome main_theorem_corpus(const SmallCorpus& c) {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : c.bases) {
    for (const auto& f : c.fibers) {
      const auto r = verify_dimension(m.space, f.space);
      ++checked;
      if (!r.pass) {
        o.pass = false;
        o.detail += " FAIL " + m.name + " o " + f.name + " lhs " +
                    std::to_string(r.lhs) + " rhs " + std::to_string(r.rhs) + "\n" +
                    to_json(r).dump() + "\n";
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 60) o.pass = false;
  o.detail = std::to_string(checked) + " pairs, " + std::to_string(secs) + " s" + o.detail;
  return o;
}

Outcome main_theorem_random() {
  const auto t0 = Clock::now();
  Outcome o;
  RandomSpaces gen(kSeed);
  std::size_t checked = 0, largest = 0;
  for (int i = 0; i < 30; ++i) {
    const auto [m, m2] = gen.weighted_pair(36);
    largest = std::max(largest, m.size() * m2.size());
    const auto r = verify_dimension(m, m2);
    ++checked;
    if (!r.pass) {
      o.pass = false;
      o.detail += "\n FAIL pair " + std::to_string(i) + ": " + to_json(r).dump();
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) o.pass = false;
  o.detail = std::to_string(checked) + " pairs (seed " + std::to_string(kSeed) +
             ", largest product " + std::to_string(largest) + " points), " +
             std::to_string(secs) + " s" + o.detail;
  return o;
}

Outcome known_values() {
  Outcome o;
  auto expect = [&](const std::string& name, const FiniteMetricSpace& s, std::size_t want) {
    ResolveOptions en;
    en.solver = DimensionSolver::kEnumeration;
    const std::size_t bnb = metric_dimension(s).dimension;
    const std::size_t enumerated = metric_dimension(s, en).dimension;
    if (bnb != want || enumerated != want) {
      o.pass = false;
      o.detail += " " + name + ": bnb " + std::to_string(bnb) + " enumeration " +
                  std::to_string(enumerated) + " expected " + std::to_string(want);
    }
  };
  for (std::size_t n = 2; n <= 7; ++n)
    expect("P" + std::to_string(n), {letters(n), oracle::path(n)}, 1);
  for (std::size_t n = 2; n <= 6; ++n)
    expect("K" + std::to_string(n), {letters(n), oracle::complete(n)}, n - 1);
  expect("C4", {letters(4), oracle::cycle(4)}, 2);
  const auto k2 = discrete_metric(2);
  expect("K2oK2", lexicographic(k2, k2).space(), 3);
  if (o.pass) o.detail = "P2..P7 = 1, K2..K6 = n-1, C4 = 2, K2oK2 = 3";
  return o;
}

Outcome diameter_formula(const SmallCorpus& c) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : c.bases) {
    for (const auto& f : c.fibers) {
      const auto r = verify_diameter(m.space, f.space);
      ++checked;
      if (!r.pass || std::abs(r.lhs - r.rhs) > kTau) {
        o.pass = false;
        o.detail += " FAIL " + m.name + " o " + f.name;
      }
    }
  }
  o.detail = std::to_string(checked) + " pairs within " + std::to_string(kTau) + o.detail;
  return o;
}

Outcome squash_theorem(const SmallCorpus& c) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : c.bases) {
    for (const auto& f : c.fibers) {
      const auto r = verify_squash(m.space, f.space);
      ++checked;
      const double dq = r.witnesses["diameter_squashed"].get<double>();
      if (!r.pass || !(dq < nearness(m.space))) {
        o.pass = false;
        o.detail += " FAIL " + m.name + " o " + f.name + " " + to_json(r).dump();
      }
    }
  }
  o.detail = std::to_string(checked) + " pairs" + o.detail;
  return o;
}

Outcome axiom_closure() {
  Outcome o;
  RandomSpaces gen(kSeed + 6);
  std::size_t grav = 0, lex = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = i % 2 ? gen.weighted_metric(gen.uniform(2, 8))
                         : gen.unweighted_metric(gen.uniform(2, 8));
    const double t = 0.25 * static_cast<double>(gen.uniform(1, 12));
    if (validate(gravitational(s, t)).ok) ++grav;
  }
  for (int i = 0; i < 100; ++i) {
    const auto m = gen.weighted_metric(gen.uniform(2, 6));
    const auto m2 = gen.weighted_metric(gen.uniform(2, 6));
    if (validate(lexicographic(m, m2).space()).ok) ++lex;
  }
  o.pass = grav == 100 && lex == 100;
  o.detail = "gravitational " + std::to_string(grav) + "/100, lexicographic " +
             std::to_string(lex) + "/100";
  return o;
}

Outcome ball_coincidence() {
  Outcome o;
  RandomSpaces gen(kSeed + 7);
  std::size_t same = 0;
  for (int i = 0; i < 50; ++i) {
    const auto s = gen.weighted_metric(gen.uniform(2, 8));
    const auto& x = s.label(gen.uniform(0, s.size() - 1));
    const double t = 0.25 * static_cast<double>(gen.uniform(1, 8));
    // eps uniform on the open grid (0, 2t) in steps of 2t/64.
    const double eps = 2 * t * static_cast<double>(gen.uniform(1, 63)) / 64.0;
    if (ball(s, x, eps) == ball(gravitational(s, t), x, eps)) {
      ++same;
    } else {
      o.detail += " differ at " + x;
    }
  }
  o.pass = same == 50;
  o.detail = std::to_string(same) + "/50 identical" + o.detail;
  return o;
}

Outcome solver_cross_validation(const SmallCorpus& c) {
  Outcome o;
  std::vector<NamedSpace> spaces;
  for (const auto& s : corpus_spaces(c))
    if (s.space.size() <= 7) spaces.push_back(s);
  for (const auto& g : connected_graphs(6)) spaces.push_back(g);
  RandomSpaces gen(kSeed + 8);
  for (int i = 0; i < 40; ++i)
    spaces.push_back({"random" + std::to_string(i), gen.weighted_metric(gen.uniform(2, 7))});

  std::size_t exact_checked = 0, greedy_checked = 0;
  ResolveOptions en;
  en.solver = DimensionSolver::kEnumeration;
  for (const auto& s : spaces) {
    const auto bnb = metric_dimension(s.space);
    const auto enumerated = metric_dimension(s.space, en);
    ++exact_checked;
    if (bnb.dimension != enumerated.dimension || bnb.basis != enumerated.basis) {
      o.pass = false;
      o.detail += " solvers disagree on " + s.name;
    }
  }
  // Greedy against the exact value on every corpus instance, products included.
  for (const auto& s : corpus_spaces(c)) {
    const auto greedy = greedy_generator(s.space);
    const auto exact = metric_dimension(s.space).dimension;
    ++greedy_checked;
    if (greedy.size() < exact || !resolves(s.space, greedy)) {
      o.pass = false;
      o.detail += " greedy wrong on " + s.name;
    }
  }
  o.detail = std::to_string(exact_checked) + " spaces (n <= 7) solver-equal, " +
             std::to_string(greedy_checked) + " greedy upper bounds" + o.detail;
  return o;
}

Outcome twin_invariants(const SmallCorpus& c) {
  Outcome o;
  std::size_t spaces = 0, exhaustive = 0;
  for (const auto& s : corpus_spaces(c)) {
    ++spaces;
    const auto& sp = s.space;
    const auto d = sp.table();
    const std::size_t n = sp.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t e = 0; e < n; ++e)
          if (a != b && b != e && a != e && oracle::twins(d, a, b) &&
              oracle::twins(d, b, e) && !oracle::twins(d, a, e)) {
            o.pass = false;
            o.detail += " non-transitive in " + s.name;
          }
    const auto partition = twin_classes(sp);
    for (const auto& cls : partition.classes) {
      if (cls.singleton()) continue;
      double lo = 1e300, hi = -1e300, elo = 1e300, ehi = -1e300;
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        const double eta = nearness_point(sp, cls.members[i]);
        elo = std::min(elo, eta);
        ehi = std::max(ehi, eta);
        for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
          const double g = sp.distance(cls.members[i], cls.members[j]);
          lo = std::min(lo, g);
          hi = std::max(hi, g);
        }
      }
      if (hi - lo > 2 * kTau || ehi - elo > 2 * kTau) {
        o.pass = false;
        o.detail += " spread too large in " + s.name;
      }
    }
    if (n > 6) continue;
    ++exhaustive;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if (!oracle::mask_resolves(d, mask)) continue;
      for (const auto& cls : partition.classes) {
        std::size_t outside = 0;
        for (const auto& m : cls.members) outside += !(mask >> sp.index_of(m) & 1u);
        if (outside > 1) {
          o.pass = false;
          o.detail += " resolving set misses twins in " + s.name;
        }
      }
    }
  }
  o.detail = std::to_string(spaces) + " spaces partitioned, " + std::to_string(exhaustive) +
             " (n <= 6) checked over all resolving sets" + o.detail;
  return o;
}

}  // namespace

int main() {
  const SmallCorpus corpus = small_corpus();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 main theorem, exhaustive small corpus", [&] { return main_theorem_corpus(corpus); }},
      {"2 main theorem, 30 random weighted pairs", main_theorem_random},
      {"3 known graph dimensions", known_values},
      {"4 diameter formula", [&] { return diameter_formula(corpus); }},
      {"5 squash theorem", [&] { return squash_theorem(corpus); }},
      {"6 metric-axiom closure", axiom_closure},
      {"7 ball coincidence", ball_coincidence},
      {"8 solver cross-validation", [&] { return solver_cross_validation(corpus); }},
      {"9 twin invariants", [&] { return twin_invariants(corpus); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
