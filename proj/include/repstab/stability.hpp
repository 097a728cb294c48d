#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/linsolve.hpp"
#include "repstab/memo.hpp"
#include "repstab/modcalc.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/symcore.hpp"

namespace repstab {

/// |lambda| + lambda_1 in each coordinate: the first size at which the
/// padded partition exists.
inline SizeVector stable_from(const MultiClass& lambda) {
  return lambda.sizes() + lambda.largest_parts();
}

/// lambda(d) = (d - |lambda|, lambda_1, lambda_2, ...), coordinatewise.
inline MultiClass pad(const MultiClass& lambda, const SizeVector& d) {
  lambda.sizes().require_same_arity(d);
  const SizeVector from = stable_from(lambda);
  if (!from.fits_in(d))
    throw InputError("padding " + lambda.str() + " needs sizes >= " + from.str() + ", got " + d.str());
  std::vector<Partition> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(d.arity()); ++i) {
    std::vector<int> parts;
    if (d[i] > lambda[i].size()) parts.push_back(d[i] - lambda[i].size());
    for (int p : lambda[i].parts()) parts.push_back(p);
    out.emplace_back(std::move(parts));
  }
  return MultiClass(std::move(out));
}

/// Character of the padded irreducible V_{lambda(d)}.
inline ClassFunction padded_character(const MultiClass& lambda, const SizeVector& d) {
  return ClassFunction::irreducible(pad(lambda, d));
}

/// The character polynomial P_lambda of degree |lambda| that agrees with
/// chi_{lambda(d)} for every d >= stable_from(lambda).
///
/// Solved from Murnaghan-Nakayama values at stable_from and stable_from + 1,
/// then checked at the next two sizes whose coordinates stay within
/// `verify_limit`. A rank-deficient system is reported, never regularized.
inline const CharacterPolynomial& stable_char_poly(const MultiClass& lambda, int verify_limit = 9) {
  static Memo<std::pair<MultiClass, int>, CharacterPolynomial> memo;
  return memo.get({lambda, verify_limit}, [&] {
    const int m = lambda.arity();
    const SizeVector one = SizeVector::filled(m, 1);
    const SizeVector base = stable_from(lambda);
    const auto unknowns = multi_partitions_up_to(lambda.sizes());

    std::vector<MultiClass> rows;
    std::vector<Rational> rhs;
    for (const SizeVector& d : {base, base + one})
      for (const auto& nu : group_classes(d).classes) {
        rows.push_back(nu);
        rhs.emplace_back(static_cast<long>(irreducible_character(pad(lambda, d), nu)));
      }
    ExactSolver solver(detail::indicator_matrix(rows, unknowns));
    if (!solver.full_column_rank())
      throw InconsistentSystem("P" + lambda.str() + ": indicator system has rank " +
                               std::to_string(solver.rank()) + " < " + std::to_string(unknowns.size()));
    CharacterPolynomial p = detail::polynomial_from(m, unknowns, solver.solve(rhs));

    for (const SizeVector& d : {base + 2 * one, base + 3 * one}) {
      if (d.max_coord() > verify_limit) break;
      const ClassFunction expected = padded_character(lambda, d);
      if (p.evaluate_on(d) != expected)
        throw InconsistentSystem("P" + lambda.str() + " disagrees with chi" + pad(lambda, d).str());
    }
    return p;
  });
}

struct StableDecomposition {
  std::map<MultiClass, Rational> entries;
  SizeVector valid_from;
};

namespace detail {
/// sum_lambda r_lambda chi_{lambda(d)} over the entries whose padding exists at d.
inline ClassFunction recombine(const std::map<MultiClass, Rational>& entries, const SizeVector& d) {
  ClassFunction acc = ClassFunction::from(d, [](const MultiClass&) { return Rational(0); });
  for (const auto& [lambda, r] : entries)
    if (stable_from(lambda).fits_in(d)) acc += r * padded_character(lambda, d);
  return acc;
}
}  // namespace detail

/// Stable multiplicities of the irreducibles V_{lambda(d)} in M_d, valid for
/// d >= 2 deg M. The decomposition is checked by rebuilding chi_M exactly at
/// 2 deg M and 2 deg M + 1.
inline StableDecomposition stable_decompose(const VirtualFreeModule& m) {
  const CharacterPolynomial chi = module_character(m);
  const SizeVector deg = m.degree();
  StableDecomposition out{{}, 2 * deg};
  for (const auto& lambda : multi_partitions_up_to(deg)) {
    const Rational r = stable_inner(chi, stable_char_poly(lambda));
    if (r != 0) out.entries.emplace(lambda, r);
  }
  for (const SizeVector& d : {out.valid_from, out.valid_from + SizeVector::filled(m.arity(), 1)})
    if (detail::recombine(out.entries, d) != chi.evaluate_on(d))
      throw InconsistentSystem("stable decomposition does not rebuild the character at " + d.str());
  return out;
}

/// The d at which the stable multiplicities already reconstruct chi_M, for d
/// in the box [0, limit]. Returns the minimal sizes above which (within the
/// box) reconstruction holds everywhere.
inline std::vector<SizeVector> probe_onset(const VirtualFreeModule& m, const SizeVector& limit) {
  const StableDecomposition dec = stable_decompose(m);
  const CharacterPolynomial chi = module_character(m);
  const auto box = size_box(SizeVector::zeros(m.arity()), limit);
  std::map<SizeVector, bool> holds;
  for (const auto& d : box) holds[d] = detail::recombine(dec.entries, d) == chi.evaluate_on(d);
  std::map<SizeVector, bool> upward;
  for (auto it = box.rbegin(); it != box.rend(); ++it) {
    bool ok = holds[*it];
    for (std::size_t i = 0; ok && i < static_cast<std::size_t>(m.arity()); ++i) {
      if ((*it)[i] == limit[i]) continue;
      std::vector<int> next(it->coords().begin(), it->coords().end());
      ++next[i];
      ok = upward[SizeVector(std::move(next))];
    }
    upward[*it] = ok;
  }
  std::vector<SizeVector> minimal;
  for (const auto& d : box) {
    if (!upward[d]) continue;
    bool is_minimal = true;
    for (const auto& e : minimal)
      if (e.fits_in(d)) is_minimal = false;
    if (is_minimal) minimal.push_back(d);
  }
  return minimal;
}

struct GramReport {
  std::vector<MultiClass> labels;
  std::vector<std::vector<Rational>> gram;

  bool is_identity() const {
    for (std::size_t i = 0; i < gram.size(); ++i)
      for (std::size_t j = 0; j < gram.size(); ++j)
        if (gram[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  }
};

/// <P_lambda, P_mu> at deg + deg for all |lambda|, |mu| <= bound.
inline GramReport orthonormality_report(const SizeVector& bound) {
  GramReport r{multi_partitions_up_to(bound), {}};
  for (const auto& a : r.labels) {
    std::vector<Rational> row;
    for (const auto& b : r.labels) row.push_back(stable_inner(stable_char_poly(a), stable_char_poly(b)));
    r.gram.push_back(std::move(row));
  }
  return r;
}

}  // namespace repstab
