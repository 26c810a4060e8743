#include "lexmetric/io.hpp"

#include <fstream>
#include <sstream>

namespace lexmetric {

using nlohmann::json;

json metric_to_json(const FiniteMetricSpace& space) {
  return {{"points", space.points()},
          {"d", space.table()},
          {"tolerance", space.tolerance()}};
}

FiniteMetricSpace metric_from_json(const json& doc,
                                   std::optional<double> tolerance) {
  if (!doc.is_object()) throw ParseError("metric file must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("metric file needs a \"points\" array");
  }
  if (!doc.contains("d") || !doc["d"].is_array()) {
    throw ParseError("metric file needs a \"d\" array of rows");
  }
  std::vector<PointId> points;
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) throw ParseError("point labels must be strings");
    points.push_back(p.get<std::string>());
  }
  const auto& rows = doc["d"];
  if (rows.size() != points.size()) {
    throw ParseError("\"d\" has " + std::to_string(rows.size()) + " rows for " +
                     std::to_string(points.size()) + " points");
  }
  std::vector<std::vector<double>> table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != points.size()) {
      throw ParseError("\"d\" row " + std::to_string(i) + " must have " +
                       std::to_string(points.size()) + " entries");
    }
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) {
        throw ParseError("\"d\" row " + std::to_string(i) + " has a non-numeric entry");
      }
      r.push_back(v.get<double>());
    }
    table.push_back(std::move(r));
  }
  double tol = kDefaultTolerance;
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number()) throw ParseError("\"tolerance\" must be a number");
    tol = doc["tolerance"].get<double>();
  }
  if (tolerance) tol = *tolerance;
  try {
    return FiniteMetricSpace(std::move(points), std::move(table), tol);
  } catch (const MetricError& e) {
    throw ParseError(e.what());
  }
}

Graph parse_edge_list(std::istream& in, const std::string& source) {
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError(source + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0] == "node") {
      if (tok.size() != 2) fail("expected 'node <id>'");
      g.add_vertex(tok[1]);
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) fail("expected 'u v' or 'u v w'");
    double w = 1.0;
    if (tok.size() == 3) {
      std::size_t used = 0;
      try {
        w = std::stod(tok[2], &used);
      } catch (const std::exception&) {
        fail("weight '" + tok[2] + "' is not a number");
      }
      if (used != tok[2].size()) fail("weight '" + tok[2] + "' is not a number");
    }
    try {
      g.add_edge(tok[0], tok[1], w);
    } catch (const MetricError& e) {
      fail(e.what());
    }
  }
  if (g.vertices().empty()) throw ParseError(source + ": no edges");
  return g;
}

FileFormat infer_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return FileFormat::kMetricJson;
  if (ext == ".edges") return FileFormat::kEdgeList;
  throw ParseError(path.string() +
                   ": cannot infer format from extension (use .json or .edges)");
}

FiniteMetricSpace load_space(const std::filesystem::path& path,
                             std::optional<FileFormat> format,
                             std::optional<double> tolerance) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  const FileFormat fmt = format ? *format : infer_format(path);
  if (fmt == FileFormat::kEdgeList) {
    const Graph g = parse_edge_list(in, path.string());
    try {
      return graph_metric(g, tolerance.value_or(kDefaultTolerance));
    } catch (const MetricError& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  try {
    return metric_from_json(doc, tolerance);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace lexmetric
