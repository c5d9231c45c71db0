#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghdist/cloud_algebra.hpp"
#include "ghdist/errors.hpp"
#include "ghdist/metric_space.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

// ordered_json keeps insertion order, which the canonical form relies on.
using Json = nlohmann::ordered_json;

// Integers that fit 64 bits become JSON numbers; everything else is a
// string, "p/q" for proper fractions and plain digits for huge integers.
inline Json rational_to_json(const Rational& value) {
  if (is_integer(value)) {
    if (auto small = to_int64(numerator(value))) return Json(*small);
    return Json(numerator(value).str());
  }
  return Json(to_string(value));
}

inline Rational rational_from_json(const Json& entry) {
  if (entry.is_number_unsigned()) return Rational(entry.get<std::uint64_t>());
  if (entry.is_number_integer()) return Rational(entry.get<std::int64_t>());
  if (entry.is_string()) return parse_rational(entry.get<std::string>());
  throw GhError(Errc::ParseError,
                "matrix entries must be integers or p/q strings, got " +
                    entry.dump());
}

inline Json space_to_json(const FiniteMetricSpace& space) {
  Json out = Json::object();
  out["labels"] = space.labels();
  Json rows = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < space.size(); ++j) {
      row.push_back(rational_to_json(space.dist(i, j)));
    }
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return out;
}

// Lenient on input shape beyond the schema itself: entries may be fractions
// not in lowest terms, integers of any size. Metric axioms are enforced.
inline FiniteMetricSpace space_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("matrix")) {
    throw GhError(Errc::ParseError,
                  "space document needs top-level \"labels\" and \"matrix\"");
  }
  const Json& jlabels = doc["labels"];
  const Json& jmatrix = doc["matrix"];
  if (!jlabels.is_array() || !jmatrix.is_array()) {
    throw GhError(Errc::ParseError, "\"labels\" and \"matrix\" must be arrays");
  }
  std::vector<std::string> labels;
  labels.reserve(jlabels.size());
  for (const auto& item : jlabels) {
    if (!item.is_string()) {
      throw GhError(Errc::ParseError, "labels must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  Matrix matrix;
  matrix.reserve(jmatrix.size());
  for (const auto& jrow : jmatrix) {
    if (!jrow.is_array()) {
      throw GhError(Errc::ParseError, "matrix rows must be arrays");
    }
    std::vector<Rational> row;
    row.reserve(jrow.size());
    for (const auto& entry : jrow) {
      row.push_back(rational_from_json(entry));
    }
    matrix.push_back(std::move(row));
  }
  return FiniteMetricSpace::create(std::move(labels), std::move(matrix));
}

// Canonical byte form: compact JSON plus one trailing newline. Reading a
// space and writing it back always reproduces these bytes.
inline std::string canonical_text(const Json& doc) { return doc.dump() + "\n"; }

inline std::string space_to_text(const FiniteMetricSpace& space) {
  return canonical_text(space_to_json(space));
}

inline FiniteMetricSpace space_from_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw GhError(Errc::ParseError, std::string("invalid JSON: ") + err.what());
  }
  return space_from_json(doc);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw GhError(Errc::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw GhError(Errc::ParseError, "cannot write '" + path + "'");
  }
  out << text;
}

inline FiniteMetricSpace read_space_file(const std::string& path) {
  return space_from_text(read_text_file(path));
}

inline void write_space_file(const std::string& path, const FiniteMetricSpace& space) {
  write_text_file(path, space_to_text(space));
}

// CSV with exact rationals, one row per probe factor, ascending.
inline std::string probe_csv(const std::vector<ProbePoint>& points) {
  std::string out = "lambda,lower,upper\n";
  for (const auto& point : points) {
    out += to_string(point.lambda);
    out += ',';
    out += to_string(point.lower);
    out += ',';
    out += to_string(point.upper);
    out += '\n';
  }
  return out;
}

}  // namespace ghdist
