#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lexmetric/metric_space.hpp"
#include "lexmetric/twins.hpp"

namespace lexmetric {

struct TheoryOptions {
  std::size_t max_product_points = 36;
  std::size_t max_enumeration_points = 16;
};

/// Both sides of one identity check. Dimensions compare exactly, diameters
/// within tolerance. A skipped report means the identity's premise did not
/// hold for these inputs.
struct VerificationReport {
  std::string theorem;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  bool skipped = false;
  nlohmann::json witnesses = nlohmann::json::object();
};

nlohmann::json to_json(const VerificationReport& report);

/// Right-hand side of the dimension formula with every term kept.
struct FormulaTerms {
  std::vector<std::pair<PointId, std::size_t>> fiber_dimensions;
  SpecialClassSet special;
  std::size_t total = 0;
};

FormulaTerms formula_terms(const FiniteMetricSpace& m,
                           const FiniteMetricSpace& m2,
                           const TheoryOptions& options = {});

/// sum_x dim(gravitational(M2, eta(x))) + sum over special classes (|C| - 1).
std::size_t formula_rhs(const FiniteMetricSpace& m, const FiniteMetricSpace& m2,
                        const TheoryOptions& options = {});

VerificationReport verify_dimension(const FiniteMetricSpace& m,
                                    const FiniteMetricSpace& m2,
                                    const TheoryOptions& options = {});

VerificationReport verify_diameter(const FiniteMetricSpace& m,
                                   const FiniteMetricSpace& m2);

/// Twins-free corollary and small-diameter corollary, in that order.
std::vector<VerificationReport> verify_corollaries(
    const FiniteMetricSpace& m, const FiniteMetricSpace& m2,
    const TheoryOptions& options = {});

VerificationReport verify_squash(const FiniteMetricSpace& m,
                                 const FiniteMetricSpace& m2,
                                 const TheoryOptions& options = {});

/// dimension, diameter, squash, then the corollaries.
std::vector<VerificationReport> verify_all(const FiniteMetricSpace& m,
                                           const FiniteMetricSpace& m2,
                                           const TheoryOptions& options = {});

}  // namespace lexmetric
