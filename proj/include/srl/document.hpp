#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "srl/algebra.hpp"
#include "srl/catalog.hpp"

namespace srl {

namespace detail {

inline std::string json_string(std::string const& s) { return nlohmann::json(s).dump(); }

inline void write_row(std::ostringstream& out, std::vector<Elem> const& row) {
  out << "[";
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << row[i];
  out << "]";
}

inline void write_table(std::ostringstream& out, char const* key, Table const& t, bool last) {
  out << "    \"" << key << "\": [\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "      ";
    write_row(out, t[i]);
    out << (i + 1 < t.size() ? ",\n" : "\n");
  }
  out << "    ]" << (last ? "\n" : ",\n");
}

template <class T>
T field(nlohmann::json const& j, char const* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

/// Normalized document text: fixed key order, one table row per line.
/// Loading a normalized document and saving it again reproduces it exactly.
inline std::string save_document(Algebra const& A) {
  AlgebraTables t = A.tables();
  std::ostringstream out;
  out << "{\n";
  if (!t.name.empty()) out << "  \"name\": " << detail::json_string(t.name) << ",\n";
  out << "  \"signature\": {\"involution\": " << (t.signature.involution ? "true" : "false")
      << ", \"bottom\": " << (t.signature.bottom ? "true" : "false") << "},\n";
  out << "  \"size\": " << t.size << ",\n";
  out << "  \"e\": " << t.e << ",\n";
  out << "  \"tables\": {\n";
  detail::write_table(out, "meet", t.meet, false);
  detail::write_table(out, "join", t.join, false);
  detail::write_table(out, "fusion", t.fusion, false);
  detail::write_table(out, "residual", t.residual, true);
  out << "  }";
  if (t.neg) {
    out << ",\n  \"neg\": ";
    detail::write_row(out, *t.neg);
  }
  if (t.bottom) out << ",\n  \"bottom\": " << *t.bottom;
  if (!t.labels.empty()) {
    out << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
      out << (i ? ", " : "") << detail::json_string(t.labels[i]);
    }
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

/// Parses and validates a document. A missing residual table is derived
/// from fusion. Throws ParseError for malformed text, MalformedTable for bad
/// shapes and ValidationError (with the axiom report) for invalid algebras.
inline Algebra load_document(std::string const& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  AlgebraTables t;
  auto sig = detail::field<nlohmann::json>(j, "signature");
  t.signature.involution = detail::field<bool>(sig, "involution");
  t.signature.bottom = detail::field<bool>(sig, "bottom");
  t.size = detail::field<std::size_t>(j, "size");
  t.e = detail::field<Elem>(j, "e");
  auto tables = detail::field<nlohmann::json>(j, "tables");
  t.meet = detail::field<Table>(tables, "meet");
  t.join = detail::field<Table>(tables, "join");
  t.fusion = detail::field<Table>(tables, "fusion");
  if (tables.contains("residual")) t.residual = detail::field<Table>(tables, "residual");
  if (j.contains("neg")) t.neg = detail::field<std::vector<Elem>>(j, "neg");
  if (j.contains("bottom")) t.bottom = detail::field<Elem>(j, "bottom");
  if (j.contains("name")) t.name = detail::field<std::string>(j, "name");
  if (j.contains("labels")) t.labels = detail::field<std::vector<std::string>>(j, "labels");
  if (t.size == 0) throw MalformedTable("size must be positive");
  if (t.residual.empty()) {
    // Derivation reads ≤ off the meet table, so check that first.
    Algebra probe([&] {
      AlgebraTables p = t;
      p.residual = p.meet;
      return p;
    }());
    derive_order(probe);
  }
  Algebra A(std::move(t));
  require_valid(A);
  return A;
}

inline Algebra load_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_document(ss.str());
}

inline void save_file(Algebra const& A, std::string const& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << save_document(A);
}

/// "catalog:name(params)" for a builtin, otherwise a document path.
inline Algebra load_source(std::string const& source) {
  std::string const prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return builtin_from_spec(source.substr(prefix.size()));
  return load_file(source);
}

}  // namespace srl
