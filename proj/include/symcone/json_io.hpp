#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcone/cone.hpp"
#include "symcone/errors.hpp"
#include "symcone/fs_vector.hpp"
#include "symcone/monoid.hpp"
#include "symcone/permutation.hpp"
#include "symcone/rational.hpp"

namespace symcone::json_io {

using Json = nlohmann::ordered_json;

// Rationals are written as strings ("3", "-1/2") so no precision is lost.

inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const Integer& z) { return z.get_str(); }

/// Coordinates 1..n (n defaults to the width).
inline Json to_json(const FsVector& v, std::optional<std::size_t> n = std::nullopt) {
  Json arr = Json::array();
  for (const auto& x : v.dense(n.value_or(v.width()))) {
    arr.push_back(to_string(x));
  }
  return arr;
}

inline Json to_json(const ZVector& z) {
  Json arr = Json::array();
  for (const auto& x : z) {
    arr.push_back(x.get_str());
  }
  return arr;
}

inline Json to_json(const Permutation& p) {
  Json arr = Json::array();
  for (auto i : p.images()) {
    arr.push_back(i);
  }
  return arr;
}

inline Json vectors_json(const std::vector<FsVector>& vs, std::optional<std::size_t> n = std::nullopt) {
  Json arr = Json::array();
  for (const auto& v : vs) {
    arr.push_back(to_json(v, n));
  }
  return arr;
}

inline Json rows_json(const std::vector<ZVector>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(to_json(r));
  }
  return arr;
}

inline Json to_json(const LocalCone& c) {
  Json j;
  j["dim"] = c.dim();
  j["rays"] = rows_json(c.rays());
  j["lineality"] = rows_json(c.lineality());
  j["inequalities"] = rows_json(c.ineqs());
  j["equations"] = rows_json(c.eqs());
  return j;
}

inline Json to_json(const MembershipWitness& w, std::size_t n) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& [g, lambda] : w.coefficients) {
    coeffs.push_back(Json{{"generator", to_json(g, n)}, {"lambda", to_json(lambda)}});
  }
  j["coefficients"] = std::move(coeffs);
  Json lin = Json::array();
  for (const auto& [l, c] : w.lineality_part) {
    lin.push_back(Json{{"vector", to_json(l, n)}, {"coefficient", to_json(c)}});
  }
  j["lineality"] = std::move(lin);
  return j;
}

inline Json to_json(const HilbertBasis& hb) {
  Json j;
  j["dim"] = hb.dim;
  j["elements"] = vectors_json(hb.elements, hb.dim);
  j["max_norm"] = to_json(hb.max_norm);
  return j;
}

// ---- parsing ----

/// A coordinate: JSON integer or exact-rational string. Floats are refused.
inline Rational parse_coordinate(const Json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return Rational(Integer(j.dump()));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_float()) {
    throw ParseError(where + ": floating-point value " + j.dump() +
                     " is not exact; write integers or \"p/q\" strings");
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

inline FsVector parse_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ParseError(where + ": expected an array of coordinates");
  }
  QVector x;
  for (std::size_t k = 0; k < j.size(); ++k) {
    x.push_back(parse_coordinate(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return to_fs(x);
}

inline ZVector parse_integer_row(const Json& j, std::size_t n, const std::string& where) {
  const FsVector v = parse_vector(j, where);
  if (j.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " coordinates");
  }
  try {
    return v.dense_integer(n);
  } catch (const RejectedInput&) {
    throw ParseError(where + ": expected integer coordinates");
  }
}

/// Parses JSON text, reporting syntax errors with line and column.
inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + e.what());
  }
}

struct GeneratorInput {
  std::vector<FsVector> generators;
  std::optional<FsVector> target;
};

/// Schema: {"generators": [[coord, ...], ...], "target": [coord, ...]?}.
inline GeneratorInput parse_generator_input(const std::string& text) {
  const Json j = parse_text(text);
  if (!j.is_object() || !j.contains("generators")) {
    throw ParseError("input must be an object with a \"generators\" array");
  }
  const Json& gens = j.at("generators");
  if (!gens.is_array()) {
    throw ParseError("\"generators\" must be an array of coordinate arrays");
  }
  GeneratorInput in;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    in.generators.push_back(parse_vector(gens[k], "generators[" + std::to_string(k) + "]"));
  }
  if (j.contains("target")) {
    in.target = parse_vector(j.at("target"), "target");
  }
  return in;
}

inline LocalCone parse_cone(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("lineality")) {
    throw ParseError("cone object needs \"dim\", \"rays\" and \"lineality\"");
  }
  const std::size_t n = j.at("dim").get<std::size_t>();
  std::vector<ZVector> rays;
  std::vector<ZVector> lin;
  for (std::size_t k = 0; k < j.at("rays").size(); ++k) {
    rays.push_back(parse_integer_row(j.at("rays")[k], n, "rays[" + std::to_string(k) + "]"));
  }
  for (std::size_t k = 0; k < j.at("lineality").size(); ++k) {
    lin.push_back(parse_integer_row(j.at("lineality")[k], n, "lineality[" + std::to_string(k) + "]"));
  }
  return LocalCone::from_integer_generators(std::move(rays), std::move(lin), n);
}

inline HilbertBasis parse_hilbert_basis(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("elements")) {
    throw ParseError("Hilbert basis object needs \"dim\" and \"elements\"");
  }
  HilbertBasis hb;
  hb.dim = j.at("dim").get<std::size_t>();
  for (std::size_t k = 0; k < j.at("elements").size(); ++k) {
    const ZVector z = parse_integer_row(j.at("elements")[k], hb.dim, "elements[" + std::to_string(k) + "]");
    FsVector e = to_fs(z);
    hb.max_norm = std::max(hb.max_norm, e.norm1().get_num());
    hb.elements.push_back(std::move(e));
  }
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

} // namespace symcone::json_io
