#include "lexmetric/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lexmetric/constructions.hpp"
#include "lexmetric/io.hpp"
#include "lexmetric/resolving.hpp"

namespace lexmetric {

using nlohmann::json;

namespace {

// Dimensions are integers; keep them integral in the serialized form.
json number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) return static_cast<std::int64_t>(v);
  return v;
}

}  // namespace

json to_json(const VerificationReport& report) {
  json out;
  out["theorem"] = report.theorem;
  out["lhs"] = number(report.lhs);
  out["rhs"] = number(report.rhs);
  out["pass"] = report.pass;
  if (report.skipped) out["skipped"] = true;
  out["witnesses"] = report.witnesses;
  return out;
}

namespace {

void check_product_guard(const FiniteMetricSpace& m, const FiniteMetricSpace& m2,
                         const TheoryOptions& options) {
  const std::size_t points = m.size() * m2.size();
  if (points > options.max_product_points) {
    throw LimitError("max-product-points", options.max_product_points, points);
  }
}

ResolveOptions exact(const TheoryOptions& options) {
  ResolveOptions r;
  r.max_enumeration_points = options.max_enumeration_points;
  return r;
}

json special_trace(const SpecialClassSet& set) {
  json out = json::array();
  for (const auto& e : set.entries) {
    json entry;
    entry["class"] = e.twin_class.members;
    entry["gap"] = *e.twin_class.gap;
    entry["special"] = e.special;
    json members = json::array();
    for (const auto& mc : e.members) {
      json bases = json::array();
      for (const auto& b : mc.bases) {
        bases.push_back({{"basis", b.basis},
                         {"witness", b.witness ? json(*b.witness) : json(nullptr)}});
      }
      members.push_back({{"member", mc.member},
                         {"nearness", mc.nearness},
                         {"fiber_dimension", mc.fiber_dimension},
                         {"bases", std::move(bases)}});
    }
    entry["members"] = std::move(members);
    out.push_back(std::move(entry));
  }
  return out;
}

json formula_trace(const FormulaTerms& terms) {
  json dims = json::object();
  for (const auto& [x, d] : terms.fiber_dimensions) dims[x] = d;
  return {{"fiber_dimensions", std::move(dims)},
          {"special_classes", special_trace(terms.special)},
          {"extra_landmarks", terms.special.extra_landmarks()}};
}

json inputs(const FiniteMetricSpace& m, const FiniteMetricSpace& m2) {
  return {{"M", metric_to_json(m)}, {"M2", metric_to_json(m2)}};
}

}  // namespace

FormulaTerms formula_terms(const FiniteMetricSpace& m, const FiniteMetricSpace& m2,
                           const TheoryOptions& options) {
  FormulaTerms terms;
  for (std::size_t x = 0; x < m.size(); ++x) {
    const auto capped = gravitational(m2, nearness_point(m, x));
    const FiniteMetricSpace fiber_space(capped.points(), capped.table(),
                                        std::max(m.tolerance(), m2.tolerance()));
    const std::size_t d = metric_dimension(fiber_space, exact(options)).dimension;
    terms.fiber_dimensions.emplace_back(m.label(x), d);
    terms.total += d;
  }
  terms.special = special_classes(m, m2, options.max_enumeration_points);
  terms.total += terms.special.extra_landmarks();
  return terms;
}

std::size_t formula_rhs(const FiniteMetricSpace& m, const FiniteMetricSpace& m2,
                        const TheoryOptions& options) {
  return formula_terms(m, m2, options).total;
}

VerificationReport verify_dimension(const FiniteMetricSpace& m,
                                    const FiniteMetricSpace& m2,
                                    const TheoryOptions& options) {
  check_product_guard(m, m2, options);
  const ProductSpace product = lexicographic(m, m2);
  const ResolveResult lhs = metric_dimension(product.space(), exact(options));
  const FormulaTerms rhs = formula_terms(m, m2, options);

  VerificationReport report;
  report.theorem = "dimension";
  report.lhs = static_cast<double>(lhs.dimension);
  report.rhs = static_cast<double>(rhs.total);
  report.pass = lhs.dimension == rhs.total;
  report.witnesses = inputs(m, m2);
  report.witnesses["product_basis"] = lhs.basis;
  report.witnesses["formula"] = formula_trace(rhs);
  return report;
}

VerificationReport verify_diameter(const FiniteMetricSpace& m,
                                   const FiniteMetricSpace& m2) {
  const ProductSpace product = lexicographic(m, m2);
  const double lhs = diameter(product.space());
  const double rhs =
      std::max(diameter(m), std::min(2.0 * slack(m), diameter(m2)));

  VerificationReport report;
  report.theorem = "diameter";
  report.lhs = lhs;
  report.rhs = rhs;
  report.pass = product.space().same(lhs, rhs);
  report.witnesses = inputs(m, m2);
  report.witnesses["diameter_M"] = diameter(m);
  report.witnesses["slack_M"] = slack(m);
  report.witnesses["diameter_M2"] = diameter(m2);
  return report;
}

std::vector<VerificationReport> verify_corollaries(const FiniteMetricSpace& m,
                                                   const FiniteMetricSpace& m2,
                                                   const TheoryOptions& options) {
  const bool twins_free = is_twins_free(m);
  const bool small_diameter = diameter(m2) < nearness(m);

  VerificationReport tf;
  tf.theorem = "twins_free_corollary";
  tf.witnesses = inputs(m, m2);
  tf.witnesses["twins_free"] = twins_free;

  VerificationReport sd;
  sd.theorem = "small_diameter_corollary";
  sd.witnesses = inputs(m, m2);
  sd.witnesses["diameter_M2"] = diameter(m2);
  sd.witnesses["nearness_M"] = nearness(m);

  if (!twins_free && !small_diameter) {
    tf.skipped = sd.skipped = true;
    tf.pass = sd.pass = true;
    return {tf, sd};
  }

  check_product_guard(m, m2, options);
  const ProductSpace product = lexicographic(m, m2);
  const std::size_t lhs = metric_dimension(product.space(), exact(options)).dimension;
  const FormulaTerms general = formula_terms(m, m2, options);

  if (twins_free) {
    std::size_t rhs = 0;
    for (const auto& [x, d] : general.fiber_dimensions) rhs += d;
    tf.lhs = static_cast<double>(lhs);
    tf.rhs = static_cast<double>(rhs);
    tf.pass = lhs == rhs;
    tf.witnesses["formula_rhs"] = general.total;
    tf.witnesses["formula"] = formula_trace(general);
  } else {
    tf.skipped = true;
    tf.pass = true;
  }

  if (small_diameter) {
    const std::size_t dim_m2 = metric_dimension(m2, exact(options)).dimension;
    const std::size_t rhs = m.size() * dim_m2;
    sd.lhs = static_cast<double>(lhs);
    sd.rhs = static_cast<double>(rhs);
    sd.pass = lhs == rhs;
    sd.witnesses["dimension_M2"] = dim_m2;
    sd.witnesses["formula_rhs"] = general.total;
    sd.witnesses["formula"] = formula_trace(general);
  } else {
    sd.skipped = true;
    sd.pass = true;
  }
  return {tf, sd};
}

VerificationReport verify_squash(const FiniteMetricSpace& m,
                                 const FiniteMetricSpace& m2,
                                 const TheoryOptions& options) {
  check_product_guard(m, m2, options);
  const double eta = nearness(m);
  const FiniteMetricSpace squashed = squash(eta, m2);
  const ProductSpace product = lexicographic(m, squashed);

  const std::size_t product_dim =
      metric_dimension(product.space(), exact(options)).dimension;
  const std::size_t dim_m2 = metric_dimension(m2, exact(options)).dimension;
  const std::size_t dim_squashed =
      metric_dimension(squashed, exact(options)).dimension;
  const double squashed_diameter = diameter(squashed);

  VerificationReport report;
  report.theorem = "squash";
  report.lhs = static_cast<double>(product_dim);
  report.rhs = static_cast<double>(m.size() * dim_m2);
  report.pass = product_dim == m.size() * dim_m2 &&
                product_dim == m.size() * dim_squashed && squashed_diameter < eta;
  report.witnesses = inputs(m, m2);
  report.witnesses["eta_M"] = eta;
  report.witnesses["squashed"] = metric_to_json(squashed);
  report.witnesses["dimension_M2"] = dim_m2;
  report.witnesses["dimension_squashed"] = dim_squashed;
  report.witnesses["size_times_dimension_squashed"] = m.size() * dim_squashed;
  report.witnesses["diameter_squashed"] = squashed_diameter;
  return report;
}

std::vector<VerificationReport> verify_all(const FiniteMetricSpace& m,
                                           const FiniteMetricSpace& m2,
                                           const TheoryOptions& options) {
  std::vector<VerificationReport> out;
  out.push_back(verify_dimension(m, m2, options));
  out.push_back(verify_diameter(m, m2));
  out.push_back(verify_squash(m, m2, options));
  for (auto& r : verify_corollaries(m, m2, options)) out.push_back(std::move(r));
  return out;
}

}  // namespace lexmetric
