#pragma once

// Report plumbing for the command-line tool: the verification block, CSV
// tables, the input digest, and argument parsing helpers shared by every
// subcommand.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "repstab/repstab.hpp"

namespace repstab::cli {

using json::Json;

struct Check {
  std::string name;
  bool passed = true;
  std::vector<SizeVector> sizes;
  std::string detail;

  /// Sizes covered, sorted, without repeats.
  std::vector<SizeVector> distinct_sizes() const {
    std::vector<SizeVector> out = sizes;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

class Verification {
 public:
  Check& add(std::string name) {
    checks_.push_back(Check{std::move(name), true, {}, {}});
    return checks_.back();
  }
  void skip(std::string what) { skipped_.push_back(std::move(what)); }
  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  const std::deque<Check>& checks() const { return checks_; }

  Json to_json() const {
    Json checks = Json::array();
    for (const auto& c : checks_) {
      Json sizes = Json::array();
      for (const auto& s : c.distinct_sizes()) sizes.push_back(json::to_json(s));
      Json j{{"name", c.name}, {"passed", c.passed}, {"sizes", std::move(sizes)}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      checks.push_back(std::move(j));
    }
    Json out{{"passed", passed()}, {"checks", std::move(checks)}};
    if (!skipped_.empty()) out["skipped"] = skipped_;
    return out;
  }

 private:
  std::deque<Check> checks_;  // add() hands out references
  std::vector<std::string> skipped_;
};

/// Rows of cells; the first row is the header.
using Table = std::vector<std::vector<std::string>>;

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const Table& t) {
  std::string out;
  for (const auto& row : t) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

struct Outcome {
  Json result;
  Verification verification;
  Table table;
};

/// 64-bit FNV-1a.
inline std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "@path" reads the file, anything else is taken literally.
inline std::string argument_text(const std::string& value) {
  return !value.empty() && value.front() == '@' ? read_file(value.substr(1)) : value;
}

/// A report's result when given a whole report, the document otherwise.
inline Json payload_of(const Json& doc) {
  if (doc.is_object() && doc.contains("command") && doc.contains("result")) return doc.at("result");
  return doc;
}

inline SizeVector parse_sizes(const std::string& text) {
  return json::sizevector_from(json::parse(text));
}

/// "lo..hi" (integers or size arrays) for a box, or a JSON list of sizes.
inline std::vector<SizeVector> parse_range(const std::string& text) {
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const SizeVector lo = parse_sizes(text.substr(0, dots));
    const SizeVector hi = parse_sizes(text.substr(dots + 2));
    lo.require_same_arity(hi);
    if (!lo.fits_in(hi)) throw InputError("empty range " + text);
    return size_box(lo, hi);
  }
  const Json j = json::parse(text);
  if (!j.is_array() || j.empty()) throw InputError("range must be 'lo..hi' or a non-empty list of sizes");
  std::vector<SizeVector> out;
  for (const auto& e : j) out.push_back(json::sizevector_from(e));
  return out;
}

/// sum_lambda r_lambda P_lambda for a stable decomposition payload.
inline CharacterPolynomial decomposition_character(const StableDecomposition& d) {
  if (d.entries.empty()) return CharacterPolynomial(d.valid_from.arity());
  CharacterPolynomial acc(d.entries.begin()->first.arity());
  for (const auto& [lambda, r] : d.entries) acc += r * stable_char_poly(lambda);
  return acc;
}

/// A polynomial, module, or stable decomposition payload, read as a
/// character polynomial.
inline CharacterPolynomial polynomial_operand(const Json& j) {
  if (j.is_object() && j.contains("summands")) return module_character(json::module_from(j));
  if (j.is_object() && j.contains("entries")) return decomposition_character(json::decomposition_from(j));
  return json::polynomial_from(j);
}

/// The same payloads read as a virtual free module.
inline VirtualFreeModule module_operand(const Json& j) {
  if (j.is_object() && j.contains("summands")) return json::module_from(j);
  return categorify(polynomial_operand(j));
}

inline CharacterPolynomial parse_polynomial(const std::string& text) {
  return polynomial_operand(payload_of(json::parse(argument_text(text))));
}

/// "trivial", "sign", "regular", "irreducible:<partition json>", or a JSON
/// class function [{class, value}, ...].
inline ClassFunction parse_rep(const std::string& raw, const SizeVector& degree) {
  const std::string text = argument_text(raw);
  if (text == "trivial" || text == "triv") return ClassFunction::trivial(degree);
  if (text == "regular" || text == "reg") return ClassFunction::regular(degree);
  if (text == "sign") {
    std::vector<Partition> columns;
    for (int n : degree.coords()) columns.emplace_back(std::vector<int>(static_cast<std::size_t>(n), 1));
    return ClassFunction::irreducible(MultiClass(std::move(columns)));
  }
  if (text.rfind("irreducible:", 0) == 0) {
    const MultiClass lambda = json::multiclass_from(json::parse(text.substr(12)));
    if (lambda.sizes() != degree) throw InputError("irreducible " + lambda.str() + " is not of degree " + degree.str());
    return ClassFunction::irreducible(lambda);
  }
  return json::classfunction_from(json::parse(text), degree);
}

/// A module as JSON, or the shorthand  [coeff*]degree:rep  joined by '+',
/// e.g. "1:trivial+1/2*[1,1]:regular".
inline VirtualFreeModule parse_module(const std::string& raw) {
  const std::string text = argument_text(raw);
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return module_operand(payload_of(json::parse(text)));
  std::vector<std::string> terms;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '[') ++depth;
    if (i < text.size() && text[i] == ']') --depth;
    if (i == text.size() || (text[i] == '+' && depth == 0)) {
      terms.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  std::optional<VirtualFreeModule> out;
  for (const auto& term : terms) {
    std::string rest = term;
    Rational coeff = 1;
    if (const auto star = rest.find('*'); star != std::string::npos) {
      coeff = parse_rational(rest.substr(0, star));
      rest = rest.substr(star + 1);
    }
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("module term '" + term + "' is not degree:rep");
    const SizeVector degree = parse_sizes(rest.substr(0, colon));
    if (!out) out.emplace(degree.arity());
    out->add(coeff, parse_rep(rest.substr(colon + 1), degree));
  }
  if (!out) throw InputError("empty module");
  return *out;
}

}  // namespace repstab::cli
