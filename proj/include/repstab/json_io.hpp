#pragma once

#include "json.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/modcalc.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/stability.hpp"
#include "repstab/symcore.hpp"

// Canonical JSON for the library's value types. Rationals are "p/q" strings,
// partitions are arrays of parts, multi-partitions arrays of partitions.
// Object keys keep insertion order so documents are byte-stable.

namespace repstab::json {

using Json = nlohmann::ordered_json;

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}
inline int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}
}  // namespace detail

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw InputError("rational must be a \"p/q\" string");
}

inline Json to_json(const Partition& p) {
  Json a = Json::array();
  for (int x : p.parts()) a.push_back(x);
  return a;
}

inline Partition partition_from(const Json& j) {
  if (!j.is_array()) throw InputError("partition must be an array of parts");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(detail::as_int(x, "partition part"));
  return Partition(std::move(parts));
}

inline Json to_json(const MultiClass& mu) {
  Json a = Json::array();
  for (const auto& p : mu.coords()) a.push_back(to_json(p));
  return a;
}

/// Accepts [[parts], ...] or, for arity 1, a bare [parts].
inline MultiClass multiclass_from(const Json& j) {
  if (!j.is_array()) throw InputError("multi-partition must be an array");
  if (j.empty() || !j.front().is_array()) return MultiClass{partition_from(j)};
  std::vector<Partition> coords;
  for (const auto& p : j) coords.push_back(partition_from(p));
  return MultiClass(std::move(coords));
}

inline Json to_json(const SizeVector& s) {
  Json a = Json::array();
  for (int x : s.coords()) a.push_back(x);
  return a;
}

inline SizeVector sizevector_from(const Json& j) {
  if (j.is_number_integer()) return SizeVector{detail::as_int(j, "size")};
  if (!j.is_array()) throw InputError("size vector must be an array of integers");
  std::vector<int> v;
  for (const auto& x : j) v.push_back(detail::as_int(x, "size"));
  if (v.empty()) throw InputError("size vector must not be empty");
  return SizeVector(std::move(v));
}

inline Json to_json(const CharacterPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mu, c] : p.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"mu", to_json(mu)}});
  return Json{{"m", p.arity()}, {"terms", std::move(terms)}};
}

inline CharacterPolynomial polynomial_from(const Json& j) {
  const int m = detail::as_int(detail::field(j, "m"), "m");
  CharacterPolynomial p(m);
  const Json& terms = detail::field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  for (const auto& t : terms) {
    MultiClass mu = multiclass_from(detail::field(t, "mu"));
    if (mu.arity() != m) {
      // a bare [parts] for m > 1 is never valid
      throw InputError("term " + mu.str() + " does not have arity " + std::to_string(m));
    }
    p.add_term(mu, rational_from(detail::field(t, "coeff")));
  }
  return p;
}

inline Json to_json(const ClassFunction& f) {
  Json a = Json::array();
  const auto& gc = group_classes(f.group());
  for (std::size_t i = 0; i < gc.size(); ++i)
    a.push_back(Json{{"class", to_json(gc.classes[i])}, {"value", to_json(f[i])}});
  return a;
}

/// Every class of S_group must appear exactly once.
inline ClassFunction classfunction_from(const Json& j, const SizeVector& group) {
  if (!j.is_array()) throw InputError("class function must be an array of {class, value}");
  const auto& gc = group_classes(group);
  std::vector<Rational> values(gc.size());
  std::vector<bool> seen(gc.size(), false);
  for (const auto& e : j) {
    const MultiClass c = multiclass_from(detail::field(e, "class"));
    if (c.arity() != group.arity() || c.sizes() != group)
      throw InputError("class " + c.str() + " is not a class of S" + group.str());
    const std::size_t i = gc.index_of(c);
    if (seen[i]) throw InputError("class " + c.str() + " listed twice");
    seen[i] = true;
    values[i] = rational_from(detail::field(e, "value"));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError("class " + gc.classes[i].str() + " missing from class function");
  return ClassFunction(group, std::move(values));
}

inline Json to_json(const VirtualFreeModule& m) {
  Json summands = Json::array();
  for (const auto& s : m.summands())
    summands.push_back(
        Json{{"coeff", to_json(s.coefficient)}, {"degree", to_json(s.degree())}, {"rep", to_json(s.rep)}});
  return Json{{"m", m.arity()}, {"summands", std::move(summands)}};
}

inline VirtualFreeModule module_from(const Json& j) {
  const int m = detail::as_int(detail::field(j, "m"), "m");
  VirtualFreeModule out(m);
  const Json& summands = detail::field(j, "summands");
  if (!summands.is_array()) throw InputError("'summands' must be an array");
  for (const auto& s : summands) {
    const SizeVector degree = sizevector_from(detail::field(s, "degree"));
    if (degree.arity() != m) throw InputError("summand degree " + degree.str() + " has wrong arity");
    out.add(rational_from(detail::field(s, "coeff")), classfunction_from(detail::field(s, "rep"), degree));
  }
  return out;
}

inline Json to_json(const StableDecomposition& d) {
  Json entries = Json::array();
  for (const auto& [lambda, r] : d.entries) entries.push_back(Json{{"lambda", to_json(lambda)}, {"mult", to_json(r)}});
  return Json{{"valid_from", to_json(d.valid_from)}, {"entries", std::move(entries)}};
}

inline StableDecomposition decomposition_from(const Json& j) {
  StableDecomposition d{{}, sizevector_from(detail::field(j, "valid_from"))};
  const Json& entries = detail::field(j, "entries");
  if (!entries.is_array()) throw InputError("'entries' must be an array");
  for (const auto& e : entries) {
    MultiClass lambda = multiclass_from(detail::field(e, "lambda"));
    if (lambda.arity() != d.valid_from.arity()) throw InputError("entry " + lambda.str() + " has wrong arity");
    if (!d.entries.emplace(lambda, rational_from(detail::field(e, "mult"))).second)
      throw InputError("entry " + lambda.str() + " listed twice");
  }
  return d;
}

/// Parses text, turning library parse errors into InputError.
inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace repstab::json
