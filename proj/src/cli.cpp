#include "lexmetric/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexmetric/constructions.hpp"
#include "lexmetric/corpus.hpp"
#include "lexmetric/io.hpp"
#include "lexmetric/resolving.hpp"
#include "lexmetric/theory.hpp"
#include "lexmetric/twins.hpp"

namespace lexmetric {

using nlohmann::json;

namespace {

struct GlobalOptions {
  bool json_output = false;
  std::optional<double> tolerance;
  std::string format;  // "", "json" or "edges"
  std::size_t max_product_points = 36;
  std::size_t max_enumeration_points = 16;

  TheoryOptions theory() const {
    return {max_product_points, max_enumeration_points};
  }
};

std::string num(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  return json(v).dump();
}

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

FiniteMetricSpace load(const std::string& path, const GlobalOptions& g) {
  std::optional<FileFormat> fmt;
  if (g.format == "json") fmt = FileFormat::kMetricJson;
  if (g.format == "edges") fmt = FileFormat::kEdgeList;
  return load_space(path, fmt, g.tolerance);
}

void print_report(const VerificationReport& r, std::ostream& out) {
  if (r.skipped) {
    out << r.theorem << ": skipped (premise does not hold)\n";
    return;
  }
  out << r.theorem << ": " << (r.pass ? "pass" : "FAIL") << "  lhs " << num(r.lhs)
      << "  rhs " << num(r.rhs) << "\n";
  if (!r.pass) out << "  witnesses: " << r.witnesses.dump() << "\n";
}

int cmd_validate(const std::string& file, const GlobalOptions& g, std::ostream& out) {
  const auto space = load(file, g);
  const auto report = validate(space);
  if (g.json_output) {
    json v = json::array();
    for (const auto& x : report.violations) {
      v.push_back({{"axiom", x.axiom},
                   {"points", {x.points[0], x.points[1], x.points[2]}},
                   {"lhs", x.lhs},
                   {"rhs", x.rhs}});
    }
    out << json{{"ok", report.ok}, {"violations", v}}.dump() << "\n";
  } else if (report.ok) {
    out << "ok: " << space.size() << " points form a metric space\n";
  } else {
    out << "not a metric: " << report.violations.size() << " violation(s)\n";
    for (const auto& x : report.violations) {
      out << "  " << x.axiom << " (" << x.points[0] << ", " << x.points[1] << ", "
          << x.points[2] << "): " << num(x.lhs) << " vs " << num(x.rhs) << "\n";
    }
  }
  return report.ok ? kExitOk : kExitFailed;
}

int cmd_stats(const std::string& file, const GlobalOptions& g, std::ostream& out) {
  const auto s = stats(load(file, g));
  if (g.json_output) {
    json per = json::object();
    for (const auto& [p, eta] : s.nearness_per_point) per[p] = eta;
    out << json{{"nearness", s.nearness},
                {"slack", s.slack},
                {"diameter", s.diameter},
                {"nearness_per_point", per}}
               .dump()
        << "\n";
  } else {
    out << "nearness " << num(s.nearness) << "\nslack " << num(s.slack)
        << "\ndiameter " << num(s.diameter) << "\n";
    for (const auto& [p, eta] : s.nearness_per_point)
      out << "  nearness(" << p << ") " << num(eta) << "\n";
  }
  return kExitOk;
}

int emit_space(const FiniteMetricSpace& space, std::ostream& out) {
  out << metric_to_json(space).dump() << "\n";
  return kExitOk;
}

int cmd_dim(const std::string& file, bool greedy, bool all_bases,
            const std::string& solver, const GlobalOptions& g, std::ostream& out) {
  const auto space = load(file, g);
  if (greedy) {
    const auto set = greedy_generator(space);
    if (g.json_output) {
      out << json{{"greedy", set}, {"size", set.size()}}.dump() << "\n";
    } else {
      out << "greedy generator (" << set.size() << "): " << join(set) << "\n";
    }
    return kExitOk;
  }
  ResolveOptions opts;
  opts.enumerate_all = all_bases;
  opts.max_enumeration_points = g.max_enumeration_points;
  opts.solver = solver == "enumeration" ? DimensionSolver::kEnumeration
                                        : DimensionSolver::kBranchAndBound;
  const auto r = metric_dimension(space, opts);
  if (g.json_output) {
    json doc{{"dimension", r.dimension}, {"basis", r.basis}};
    if (r.all_bases) doc["all_bases"] = *r.all_bases;
    out << doc.dump() << "\n";
  } else {
    out << "dimension " << r.dimension << "\nbasis " << join(r.basis) << "\n";
    if (r.all_bases) {
      out << "bases (" << r.all_bases->size() << "):\n";
      for (const auto& b : *r.all_bases) out << "  " << join(b) << "\n";
    }
  }
  return kExitOk;
}

int cmd_twins(const std::string& file, const GlobalOptions& g, std::ostream& out) {
  const auto space = load(file, g);
  const auto p = twin_classes(space);
  const bool free = std::all_of(p.classes.begin(), p.classes.end(),
                                [](const TwinClass& c) { return c.singleton(); });
  if (g.json_output) {
    json classes = json::array();
    for (const auto& c : p.classes) {
      json jc{{"members", c.members}};
      if (c.gap) {
        jc["gap"] = *c.gap;
        jc["nearness"] = *c.class_nearness;
      }
      classes.push_back(std::move(jc));
    }
    out << json{{"twins_free", free}, {"classes", classes}}.dump() << "\n";
  } else {
    out << (free ? "twins-free" : "has twins") << "\n";
    for (const auto& c : p.classes) {
      out << "  {" << join(c.members, ", ") << "}";
      if (c.gap) out << "  gap " << num(*c.gap) << "  nearness " << num(*c.class_nearness);
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_special(const std::string& m_file, const std::string& m2_file,
                const GlobalOptions& g, std::ostream& out) {
  const auto m = load(m_file, g);
  const auto m2 = load(m2_file, g);
  const auto set = special_classes(m, m2, g.max_enumeration_points);
  if (g.json_output) {
    json entries = json::array();
    for (const auto& e : set.entries) {
      json members = json::array();
      for (const auto& mc : e.members) {
        json bases = json::array();
        for (const auto& b : mc.bases)
          bases.push_back({{"basis", b.basis},
                           {"witness", b.witness ? json(*b.witness) : json(nullptr)}});
        members.push_back({{"member", mc.member},
                           {"fiber_dimension", mc.fiber_dimension},
                           {"bases", bases}});
      }
      entries.push_back({{"class", e.twin_class.members},
                         {"gap", *e.twin_class.gap},
                         {"special", e.special},
                         {"members", members}});
    }
    out << json{{"special_classes", set.member_classes()},
                {"extra_landmarks", set.extra_landmarks()},
                {"trace", entries}}
               .dump()
        << "\n";
  } else {
    out << "special classes: " << set.member_classes().size()
        << "  extra landmarks: " << set.extra_landmarks() << "\n";
    for (const auto& e : set.entries) {
      out << "  {" << join(e.twin_class.members, ", ") << "} gap "
          << num(*e.twin_class.gap) << (e.special ? "  special" : "  not special")
          << "\n";
      for (const auto& mc : e.members) {
        for (const auto& b : mc.bases) {
          out << "    " << mc.member << " basis {" << join(b.basis, ", ") << "} -> "
              << (b.witness ? *b.witness : std::string("no witness")) << "\n";
        }
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& m_file, const std::string& m2_file,
               const std::string& theorem, const GlobalOptions& g,
               std::ostream& out) {
  const auto m = load(m_file, g);
  const auto m2 = load(m2_file, g);
  std::vector<VerificationReport> reports;
  if (theorem == "dimension") {
    reports.push_back(verify_dimension(m, m2, g.theory()));
  } else if (theorem == "diameter") {
    reports.push_back(verify_diameter(m, m2));
  } else if (theorem == "squash") {
    reports.push_back(verify_squash(m, m2, g.theory()));
  } else if (theorem == "corollaries") {
    reports = verify_corollaries(m, m2, g.theory());
  } else {
    reports = verify_all(m, m2, g.theory());
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const VerificationReport& r) { return r.pass; });
  if (g.json_output) {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump() << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump() << "\n";
    }
  } else {
    for (const auto& r : reports) print_report(r, out);
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_corpus(std::uint64_t seed, std::size_t count, const GlobalOptions& g,
               std::ostream& out) {
  RandomSpaces gen(seed);
  std::size_t failures = 0;
  json results = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const auto [m, m2] = gen.weighted_pair(g.max_product_points);
    const auto reports = verify_all(m, m2, g.theory());
    json entry{{"index", i}, {"base_points", m.size()}, {"fiber_points", m2.size()}};
    json checks = json::array();
    bool pair_ok = true;
    for (const auto& r : reports) {
      json jr = to_json(r);
      if (r.pass) jr.erase("witnesses");
      checks.push_back(std::move(jr));
      pair_ok = pair_ok && r.pass;
    }
    entry["pass"] = pair_ok;
    entry["checks"] = std::move(checks);
    if (!pair_ok) ++failures;
    if (!g.json_output) {
      out << "pair " << i << " (" << m.size() << "x" << m2.size() << "): "
          << (pair_ok ? "pass" : "FAIL");
      for (const auto& r : reports) {
        if (r.skipped) continue;
        out << "  " << r.theorem << " " << num(r.lhs) << "/" << num(r.rhs);
      }
      out << "\n";
      if (!pair_ok)
        for (const auto& r : reports)
          if (!r.pass) print_report(r, out);
    }
    results.push_back(std::move(entry));
  }
  if (g.json_output) {
    out << json{{"seed", seed},
                {"count", count},
                {"failures", failures},
                {"results", results}}
               .dump()
        << "\n";
  } else {
    out << (count - failures) << "/" << count << " pairs passed\n";
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite metric spaces, lexicographic products and metric dimension"};
  app.name("lexmetric");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json_output, "Emit a single JSON document");
  app.add_option("--tolerance", g.tolerance, "Distance equality tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Input format override")
      ->check(CLI::IsMember({"json", "edges"}));
  app.add_option("--max-product-points", g.max_product_points,
                 "Largest product verified exactly")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-enumeration-points", g.max_enumeration_points,
                 "Largest space whose bases are all enumerated")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string file, file2, theorem = "all", solver = "bnb";
  double t = 0, eta = 0;
  bool greedy = false, all_bases = false;
  std::uint64_t seed = 0;
  std::size_t count = 30;

  auto* validate_cmd = app.add_subcommand("validate", "Check the metric axioms");
  validate_cmd->add_option("FILE", file)->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(file, g, out); }; });

  auto* stats_cmd = app.add_subcommand("stats", "Nearness, slack and diameter");
  stats_cmd->add_option("FILE", file)->required();
  stats_cmd->callback([&] { action = [&] { return cmd_stats(file, g, out); }; });

  auto* graph_cmd = app.add_subcommand("graph", "Edge list to metric JSON");
  graph_cmd->add_option("FILE", file)->required();
  graph_cmd->callback([&] {
    action = [&] {
      GlobalOptions eg = g;
      if (eg.format.empty()) eg.format = "edges";
      return emit_space(load(file, eg), out);
    };
  });

  auto* grav_cmd = app.add_subcommand("gravitate", "Truncate distances at 2t");
  grav_cmd->add_option("FILE", file)->required();
  grav_cmd->add_option("--t", t, "Gravitation parameter")->required()
      ->check(CLI::PositiveNumber);
  grav_cmd->callback([&] {
    action = [&] { return emit_space(gravitational(load(file, g), t), out); };
  });

  auto* squash_cmd = app.add_subcommand("squash", "Apply eta*d/(eta+d)");
  squash_cmd->add_option("FILE", file)->required();
  squash_cmd->add_option("--eta", eta, "Bound of the squashed metric")->required()
      ->check(CLI::PositiveNumber);
  squash_cmd->callback([&] {
    action = [&] { return emit_space(squash(eta, load(file, g)), out); };
  });

  auto* product_cmd = app.add_subcommand("product", "Lexicographic product M o M2");
  product_cmd->add_option("M_FILE", file)->required();
  product_cmd->add_option("M2_FILE", file2)->required();
  product_cmd->callback([&] {
    action = [&] {
      return emit_space(lexicographic(load(file, g), load(file2, g)).space(), out);
    };
  });

  auto* dim_cmd = app.add_subcommand("dim", "Metric dimension and a basis");
  dim_cmd->add_option("FILE", file)->required();
  dim_cmd->add_flag("--greedy", greedy, "Greedy resolving set instead of exact");
  dim_cmd->add_flag("--all-bases", all_bases, "List every metric basis");
  dim_cmd->add_option("--solver", solver, "Exact solver")
      ->check(CLI::IsMember({"bnb", "enumeration"}));
  dim_cmd->callback([&] {
    action = [&] { return cmd_dim(file, greedy, all_bases, solver, g, out); };
  });

  auto* twins_cmd = app.add_subcommand("twins", "Twin equivalence classes");
  twins_cmd->add_option("FILE", file)->required();
  twins_cmd->callback([&] { action = [&] { return cmd_twins(file, g, out); }; });

  auto* special_cmd = app.add_subcommand("special", "Special twin classes of M for M2");
  special_cmd->add_option("M_FILE", file)->required();
  special_cmd->add_option("M2_FILE", file2)->required();
  special_cmd->callback([&] { action = [&] { return cmd_special(file, file2, g, out); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Check the product identities");
  verify_cmd->add_option("M_FILE", file)->required();
  verify_cmd->add_option("M2_FILE", file2)->required();
  verify_cmd->add_option("--theorem", theorem, "Which identity to check")
      ->check(CLI::IsMember({"dimension", "diameter", "squash", "corollaries", "all"}));
  verify_cmd->callback([&] {
    action = [&] { return cmd_verify(file, file2, theorem, g, out); };
  });

  auto* corpus_cmd = app.add_subcommand("corpus", "Random verification sweep");
  corpus_cmd->add_option("--seed", seed, "Generator seed")->required();
  corpus_cmd->add_option("--count", count, "Number of random pairs");
  corpus_cmd->callback([&] { action = [&] { return cmd_corpus(seed, count, g, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const MetricError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace lexmetric
