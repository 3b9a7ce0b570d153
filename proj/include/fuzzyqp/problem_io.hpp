#pragma once

// JSON problem files:
//
//   { "name": "optional", "n": 2, "m": 2,
//     "c": [[a1,a2,a3], ...],            n triples
//     "Q": [[[a1,a2,a3], ...], ...],     n rows of n triples
//     "A": [[[a1,a2,a3], ...], ...],     m rows of n triples
//     "b": [[a1,a2,a3], ...] }           m triples
//
// The objective is c'x + 1/2 x'Qx.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include "json.hpp"

#include "fuzzyqp/errors.hpp"
#include "fuzzyqp/problem.hpp"

namespace fuzzyqp {

namespace detail {

using json = nlohmann::json;

inline int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field " + field + ": " + what, 0, field);
}

inline Tfn read_triple(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) field_error(field, "expected a triple [a1, a2, a3]");
  std::array<double, 3> v{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!j[k].is_number()) field_error(field, "triple entries must be numbers");
    v[k] = j[k].get<double>();
  }
  return {v[0], v[1], v[2]};
}

inline TfnVector read_vector(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of triples");
  TfnVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_triple(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline TfnMatrix read_matrix(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of rows");
  TfnMatrix out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_vector(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::size_t read_count(const json& root, const char* key) {
  if (!root.contains(key)) field_error(key, "missing");
  const json& j = root.at(key);
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    field_error(key, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

inline const json& require_key(const json& root, const char* key) {
  if (!root.contains(key)) field_error(key, "missing");
  return root.at(key);
}

/// Shortest decimal that parses back to the same double. Negative zero keeps
/// a fractional part so JSON readers do not turn it into the integer 0.
inline std::string format_number(double v) {
  if (!std::isfinite(v)) throw DomainError("problem files cannot hold non-finite values");
  if (v == 0.0 && std::signbit(v)) return "-0.0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw Error("number formatting failed");
  return std::string(buf.data(), ptr);
}

inline std::string format_triple(const Tfn& t) {
  return "[" + format_number(t.a1) + ", " + format_number(t.a2) + ", " + format_number(t.a3) + "]";
}

inline std::string format_row(const TfnVector& row) {
  std::string s = "[";
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) s += ", ";
    s += format_triple(row[j]);
  }
  return s + "]";
}

inline std::string format_matrix(const TfnMatrix& mat) {
  if (mat.empty()) return "[]";
  std::string s = "[\n";
  for (std::size_t i = 0; i < mat.size(); ++i) {
    s += "    " + format_row(mat[i]);
    s += (i + 1 < mat.size()) ? ",\n" : "\n";
  }
  return s + "  ]";
}

}  // namespace detail

/// Parses a problem file and checks its dimensions, without checking the
/// ordering and symmetry invariants. Use this when the caller wants to report
/// violations itself, or to symmetrize before validating.
inline FuzzyQP parse_problem_structure(std::string_view text) {
  using detail::json;
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const int line = detail::line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), line, "");
  }
  if (!root.is_object()) throw ParseError("top level must be a JSON object", 1, "");

  static const std::set<std::string> known{"name", "n", "m", "c", "Q", "A", "b"};
  for (const auto& [key, _] : root.items()) {
    if (!known.contains(key)) detail::field_error(key, "unknown field");
  }

  FuzzyQP p;
  if (root.contains("name")) {
    if (!root["name"].is_string()) detail::field_error("name", "expected a string");
    p.name = root["name"].get<std::string>();
  }
  p.n = detail::read_count(root, "n");
  p.m = detail::read_count(root, "m");
  p.c = detail::read_vector(detail::require_key(root, "c"), "c");
  p.Q = detail::read_matrix(detail::require_key(root, "Q"), "Q");
  p.A = detail::read_matrix(detail::require_key(root, "A"), "A");
  p.b = detail::read_vector(detail::require_key(root, "b"), "b");

  auto mismatch = [](const std::string& what, std::size_t want, std::size_t got) {
    throw StructuralError(what + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
  };
  if (p.c.size() != p.n) mismatch("length of c vs n", p.n, p.c.size());
  if (p.Q.size() != p.n) mismatch("rows of Q vs n", p.n, p.Q.size());
  for (std::size_t i = 0; i < p.Q.size(); ++i) {
    if (p.Q[i].size() != p.n) mismatch("columns of Q row " + one_based(i) + " vs n", p.n, p.Q[i].size());
  }
  if (p.A.size() != p.m) mismatch("rows of A vs m", p.m, p.A.size());
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    if (p.A[i].size() != p.n) mismatch("columns of A row " + one_based(i) + " vs n", p.n, p.A[i].size());
  }
  if (p.b.size() != p.m) mismatch("length of b vs m", p.m, p.b.size());
  return p;
}

/// Parses and fully validates a problem file.
inline FuzzyQP parse_problem(std::string_view text) {
  FuzzyQP p = parse_problem_structure(text);
  require_valid(p);
  return p;
}

/// Canonical text: keys in sorted order, one matrix row per line, numbers in
/// shortest round-trip form. An empty name is omitted.
inline std::string serialize_problem(const FuzzyQP& p) {
  using namespace detail;
  std::string s = "{\n";
  s += "  \"A\": " + format_matrix(p.A) + ",\n";
  s += "  \"Q\": " + format_matrix(p.Q) + ",\n";
  s += "  \"b\": " + format_row(p.b) + ",\n";
  s += "  \"c\": " + format_row(p.c) + ",\n";
  s += "  \"m\": " + std::to_string(p.m) + ",\n";
  s += "  \"n\": " + std::to_string(p.n);
  if (!p.name.empty()) s += ",\n  \"name\": " + json(p.name).dump();
  s += "\n}\n";
  return s;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": no such file or not readable");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FuzzyQP load_problem(const std::string& path) { return parse_problem(read_text_file(path)); }

}  // namespace fuzzyqp
