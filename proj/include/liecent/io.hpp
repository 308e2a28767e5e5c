#pragma once
/// Parsing and rendering for the command-line surface: algebra and weight
/// syntax, projection fixture files, and the text + JSON output document.

#include <liecent/numeric.hpp>
#include <liecent/algebra.hpp>

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace liecent {

using Json = nlohmann::ordered_json;

/// A malformed command-line argument.  The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A missing or malformed fixture file.  The CLI maps this to exit code 4.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse an algebra spec such as "E6" or "B4".  Syntax errors (unknown series
/// letter, missing rank) raise UsageError; a syntactically valid spec whose
/// rank is out of bounds for the series raises DomainError instead.
inline AlgebraType parse_algebra(const std::string& s) {
  const std::string usage =
      "cannot parse algebra '" + s +
      "': expected a series letter A..G followed by a rank, e.g. \"E6\"";
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G') throw UsageError(usage);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw UsageError(usage);
  if (s.size() > 4) throw UsageError(usage);
  AlgebraType t{s[0], std::stoi(s.substr(1))};
  validate_type(t);
  return t;
}

/// Parse a weight written as "(1,0,-2)"; whitespace is ignored.
inline Weight parse_weight(const std::string& s) {
  const std::string usage = "cannot parse weight '" + s +
                            "': expected \"(c1,c2,...)\" with integer entries";
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 3 || t.front() != '(' || t.back() != ')') throw UsageError(usage);
  Weight w;
  std::size_t pos = 1;
  while (pos < t.size() - 1) {
    std::size_t end = t.find(',', pos);
    if (end == std::string::npos || end > t.size() - 1) end = t.size() - 1;
    std::string tok = t.substr(pos, end - pos);
    std::size_t k = 0;
    if (k < tok.size() && tok[k] == '-') ++k;
    if (k == tok.size()) throw UsageError(usage);
    for (; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw UsageError(usage);
    w.push_back(Int(tok));
    pos = end + 1;
  }
  if (w.empty()) throw UsageError(usage);
  return w;
}

/// Render a weight as "(1,0,0)".
inline std::string render_weight(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i].str();
  }
  return out + ")";
}

/// Render a rational as "num/den", omitting the denominator when it is 1.
inline std::string rat_to_string(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

/// Render a rational vector as "(1/2,1,3/2)".
inline std::string render_rational_tuple(const RVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v[i]);
  }
  return out + ")";
}

/// A projection fixture: coroot rows in the ambient coroot basis, plus an
/// optional trailing h1 row for reductive embeddings.
struct ProjectionFile {
  IMat rows;
  std::optional<IVec> h1;
};

namespace detail {

inline IVec parse_integer_row(const std::string& line, const std::string& path,
                              int lineno) {
  IVec row;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    std::size_t k = 0;
    if (k < tok.size() && (tok[k] == '-' || tok[k] == '+')) ++k;
    bool ok = k < tok.size();
    for (; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) ok = false;
    if (!ok)
      throw FixtureError(path + ":" + std::to_string(lineno) +
                         ": bad integer '" + tok + "'");
    row.push_back(Int(tok));
  }
  return row;
}

}  // namespace detail

/// Load a projection fixture.  Lines hold whitespace-separated integers; `#`
/// starts a comment; an optional final row "h1: ..." carries the reductive
/// one-parameter direction.  All rows must have equal width.
inline ProjectionFile load_projection(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open projection file '" + path + "'");
  ProjectionFile out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    std::string trimmed;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos)
      trimmed = line.substr(a, line.find_last_not_of(" \t\r") - a + 1);
    if (trimmed.empty()) continue;
    if (out.h1)
      throw FixtureError(path + ":" + std::to_string(lineno) +
                         ": the h1 row must be the final row");
    if (trimmed.rfind("h1:", 0) == 0) {
      out.h1 = detail::parse_integer_row(trimmed.substr(3), path, lineno);
      continue;
    }
    IVec row = detail::parse_integer_row(trimmed, path, lineno);
    if (!out.rows.empty() && row.size() != out.rows.front().size())
      throw FixtureError(path + ":" + std::to_string(lineno) + ": row has " +
                         std::to_string(row.size()) + " entries; expected " +
                         std::to_string(out.rows.front().size()));
    out.rows.push_back(std::move(row));
  }
  if (out.rows.empty())
    throw FixtureError(path + ": projection file contains no coroot rows");
  if (out.h1 && out.h1->size() != out.rows.front().size())
    throw FixtureError(path + ": h1 row has " +
                       std::to_string(out.h1->size()) + " entries; expected " +
                       std::to_string(out.rows.front().size()));
  return out;
}

/// A big integer as JSON: a number when it fits in 64 bits, otherwise a
/// decimal string, so arbitrarily large values stay exact.
inline Json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json json_ivec(const IVec& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(json_int(x));
  return arr;
}

inline Json json_imat(const IMat& m) {
  Json arr = Json::array();
  for (const IVec& row : m) arr.push_back(json_ivec(row));
  return arr;
}

inline Json json_rvec(const RVec& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

/// A command's result as parallel renderings: text lines and a JSON mirror.
struct OutputDocument {
  std::vector<std::string> lines;
  Json json;
};

/// Start a document: format version, command echo, and algebra metadata.
inline OutputDocument begin_document(const std::string& command_echo,
                                     const SimpleAlgebra* g) {
  OutputDocument doc;
  doc.json["format_version"] = 1;
  doc.json["command"] = command_echo;
  if (g != nullptr) {
    Json meta;
    meta["name"] = g->name();
    meta["series"] = std::string(1, g->type.series);
    meta["rank"] = g->rank;
    meta["det_cartan"] = json_int(g->det_cartan);
    doc.json["algebra"] = meta;
  } else {
    doc.json["algebra"] = nullptr;
  }
  doc.json["payload"] = Json::object();
  return doc;
}

/// Render the text form: all lines joined with newlines.
inline std::string render_text(const OutputDocument& doc) {
  std::string out;
  for (const std::string& line : doc.lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace liecent
