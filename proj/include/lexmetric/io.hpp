#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lexmetric/constructions.hpp"
#include "lexmetric/metric_space.hpp"

namespace lexmetric {

/// Malformed input file. The message names the source and, for text
/// formats, the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"points": [...], "d": [[...], ...], "tolerance": t}. Tolerance is
/// optional on input and always written on output.
nlohmann::json metric_to_json(const FiniteMetricSpace& space);
FiniteMetricSpace metric_from_json(const nlohmann::json& doc,
                                   std::optional<double> tolerance = std::nullopt);

/// "u v" or "u v w" per line; "#" starts a comment line; "node u" declares a
/// vertex.
Graph parse_edge_list(std::istream& in, const std::string& source = "<input>");

enum class FileFormat { kMetricJson, kEdgeList };

/// Format from extension: ".json" or ".edges".
FileFormat infer_format(const std::filesystem::path& path);

/// Loads either format as a metric space. An explicit tolerance overrides the
/// one stored in a JSON file.
FiniteMetricSpace load_space(const std::filesystem::path& path,
                             std::optional<FileFormat> format = std::nullopt,
                             std::optional<double> tolerance = std::nullopt);

}  // namespace lexmetric
