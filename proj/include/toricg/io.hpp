#pragma once

#include "toricg/catalog.hpp"
#include "toricg/face_lattice.hpp"
#include "toricg/geometry.hpp"
#include "toricg/polynomial.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace toricg {

using Json = nlohmann::ordered_json;

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

/// Ascending coefficient array.
inline Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  if (a.empty()) a.push_back(0);
  return a;
}

inline Json to_json(const FaceLattice& L) {
  Json j;
  j["format"] = "lattice/v1";
  j["dim"] = L.dim();
  j["n_vertices"] = L.n_vertices();
  j["facets"] = L.dim() >= 0 ? Json(L.facet_vertex_sets()) : Json::array();
  return j;
}

inline Json to_json(const GeometricPolytope& P) {
  Json j;
  j["format"] = "polytope/v1";
  Json vs = Json::array();
  for (const auto& v : P.vertices) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    vs.push_back(std::move(row));
  }
  j["vertices"] = std::move(vs);
  Json fs = Json::array();
  for (const auto& f : P.facets) {
    Json n = Json::array();
    for (const auto& x : f.normal) n.push_back(to_string(x));
    fs.push_back({{"normal", n}, {"offset", to_string(f.offset)}, {"vertices", f.vertices.members()}});
  }
  j["facets"] = std::move(fs);
  j["lattice"] = to_json(P.lattice);
  return j;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Rational json_rational(const Json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
  throw InputError("coordinate must be a string \"p/q\" or an integer");
}

}  // namespace detail

/// Parses JSON text, reporting syntax errors with line and column.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError("malformed JSON: " + msg, line, col);
  }
}

/// polytope/v1: {"vertices": [["p/q", ...], ...]}
inline std::vector<RationalVector> polytope_points_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("polytope/v1 needs a \"vertices\" array");
  std::vector<RationalVector> pts;
  std::size_t width = 0;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto& row = j["vertices"][i];
    if (!row.is_array()) throw InputError("vertex " + std::to_string(i) + " is not an array");
    if (i == 0) width = row.size();
    if (row.size() != width) throw InputError("vertex " + std::to_string(i) + " has the wrong number of coordinates");
    RationalVector p;
    for (const auto& x : row) {
      try {
        p.push_back(detail::json_rational(x));
      } catch (const InputError& e) {
        throw InputError("vertex " + std::to_string(i) + ": " + e.what());
      }
    }
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw InputError("polytope/v1 has no vertices");
  return pts;
}

/// lattice/v1: {"dim": d, "n_vertices": n, "facets": [[...], ...]}
inline FaceLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("facets") || !j.contains("n_vertices"))
    throw InputError("lattice/v1 needs \"n_vertices\" and \"facets\"");
  if (!j["n_vertices"].is_number_unsigned()) throw InputError("\"n_vertices\" must be a nonnegative integer");
  if (!j["facets"].is_array()) throw InputError("\"facets\" must be an array");
  const auto n = j["n_vertices"].get<std::size_t>();
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw InputError("each facet must be an array of vertex indices");
    std::vector<std::size_t> vs;
    for (const auto& v : f) {
      if (!v.is_number_unsigned()) throw InputError("facet entries must be nonnegative integers");
      vs.push_back(v.get<std::size_t>());
    }
    facets.push_back(std::move(vs));
  }
  FaceLattice L = n == 0 && facets.empty() ? FaceLattice::empty_polytope() : FaceLattice::from_vertex_facets(n, facets);
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw InputError("\"dim\" must be an integer");
    if (j["dim"].get<int>() != L.dim())
      throw InputError("declared dim " + std::to_string(j["dim"].get<int>()) + " but the facets give dim " +
                       std::to_string(L.dim()));
  }
  return L;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads a polytope/v1 or lattice/v1 document. Polytope documents are run
/// through facet enumeration.
inline CatalogEntry entry_from_json_text(const std::string& text, const std::string& name) {
  Json j = parse_json(text);
  if (j.is_object() && j.contains("vertices")) {
    auto P = facet_enumeration(polytope_points_from_json(j));
    FaceLattice L = P.lattice;
    return {name, std::move(L), std::move(P)};
  }
  if (j.is_object() && j.contains("facets")) return {name, lattice_from_json(j), std::nullopt};
  throw InputError(name + ": expected a polytope/v1 (\"vertices\") or lattice/v1 (\"facets\") document");
}

/// A path to an existing file, or a catalog expression.
inline CatalogEntry load_input(const std::string& spec) {
  std::ifstream probe(spec);
  if (probe.good()) return entry_from_json_text(read_file(spec), spec);
  return parse_catalog_expression(spec);
}

}  // namespace toricg
