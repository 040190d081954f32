/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_JSON_FORMAT_HPP
#define CGPKIT_JSON_FORMAT_HPP

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/errors.hpp"

namespace cgpkit {

// Gate/channel file schema: {"dim": N, "unitary": M} or {"dim": N,
// "kraus": [M, ...]} where M is N rows of N two-element [re, im] arrays.

/// Raw parse of a gate/channel document; structural problems name the
/// offending row/column.
struct GateDocument {
  int dim = 0;
  std::optional<ComplexMatrix> unitary;           // present for "unitary" files
  std::vector<ComplexMatrix> kraus;               // present for "kraus" files
};

namespace detail {

inline ComplexMatrix parse_matrix(const nlohmann::json& m, int dim, const std::string& what) {
  if (!m.is_array() || static_cast<int>(m.size()) != dim) {
    throw ParseError(what + " must be an array of " + std::to_string(dim) + " rows");
  }
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = m[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(what + " row " + std::to_string(i) + " must have " +
                       std::to_string(dim) + " entries");
    }
    for (int j = 0; j < dim; ++j) {
      const auto& e = row[j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError(what + " entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") must be a [re, im] pair");
      }
      out(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return out;
}

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

inline GateDocument parse_gate_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("document root must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("document needs an integer \"dim\" field");
  }
  GateDocument g;
  g.dim = doc["dim"].get<int>();
  if (g.dim < 1) throw ParseError("\"dim\" must be positive");
  const bool has_unitary = doc.contains("unitary");
  const bool has_kraus = doc.contains("kraus");
  if (has_unitary == has_kraus) {
    throw ParseError("document needs exactly one of \"unitary\" or \"kraus\"");
  }
  if (has_unitary) {
    g.unitary = detail::parse_matrix(doc["unitary"], g.dim, "\"unitary\"");
  } else {
    const auto& list = doc["kraus"];
    if (!list.is_array() || list.empty()) {
      throw ParseError("\"kraus\" must be a nonempty array of matrices");
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
      g.kraus.push_back(detail::parse_matrix(
          list[k], g.dim, "kraus operator " + std::to_string(k)));
    }
  }
  return g;
}

inline GateDocument load_gate_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return parse_gate_document(doc);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_unitary_file(const std::string& path, const ComplexMatrix& u) {
  nlohmann::json doc;
  doc["dim"] = u.rows();
  doc["unitary"] = detail::matrix_to_json(u);
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

inline void save_kraus_file(const std::string& path, const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) throw BadParameter("kraus file needs at least one operator");
  nlohmann::json doc;
  doc["dim"] = ops.front().rows();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& m : ops) list.push_back(detail::matrix_to_json(m));
  doc["kraus"] = std::move(list);
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

} // namespace cgpkit

#endif // CGPKIT_JSON_FORMAT_HPP
