#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/linsolve.hpp"
#include "repstab/memo.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/symcore.hpp"

namespace repstab {

/// Closed form of the indicator binom(X, mu) at the class nu:
/// prod over coordinates i and cycle lengths k of C(X_k^(i)(nu), m_k(mu^(i))).
inline Integer eval_indicator(const MultiClass& mu, const MultiClass& nu) {
  if (mu.arity() != nu.arity()) throw InputError("eval_indicator: arity mismatch");
  Integer v = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(mu.arity()); ++i) {
    const Partition& a = mu[i];
    const Partition& b = nu[i];
    if (a.size() > b.size()) return 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(a.length()); ++j) {
      const int k = a[j];
      if (j > 0 && a[j - 1] == k) continue;
      v *= binomial(b.multiplicity(k), a.multiplicity(k));
      if (v == 0) return 0;
    }
  }
  return v;
}

/// A finite rational combination of indicators binom(X, mu) on FI^m.
class CharacterPolynomial {
 public:
  using Terms = std::map<MultiClass, Rational>;

  explicit CharacterPolynomial(int arity = 1) : arity_(arity) {
    if (arity < 1) throw InputError("arity must be at least 1");
  }
  CharacterPolynomial(int arity, const Terms& terms) : CharacterPolynomial(arity) {
    for (const auto& [mu, c] : terms) add_term(mu, c);
  }

  static CharacterPolynomial constant(int arity, const Rational& c) {
    CharacterPolynomial p(arity);
    p.add_term(MultiClass::empty(arity), c);
    return p;
  }
  static CharacterPolynomial indicator(const MultiClass& mu, const Rational& c = 1) {
    CharacterPolynomial p(mu.arity());
    p.add_term(mu, c);
    return p;
  }
  /// X_k^(coord): the number of k-cycles in coordinate `coord`.
  static CharacterPolynomial cycle_count(int arity, int coord, int k) {
    std::vector<Partition> c(static_cast<std::size_t>(arity));
    c.at(static_cast<std::size_t>(coord)) = Partition({k});
    return indicator(MultiClass(std::move(c)));
  }
  /// Places an FI polynomial in coordinate `coord` of FI^arity.
  static CharacterPolynomial embed(const CharacterPolynomial& fi, int arity, int coord) {
    if (fi.arity() != 1) throw InputError("embed expects an FI (arity 1) polynomial");
    CharacterPolynomial p(arity);
    for (const auto& [mu, c] : fi.terms()) {
      std::vector<Partition> parts(static_cast<std::size_t>(arity));
      parts.at(static_cast<std::size_t>(coord)) = mu[0];
      p.add_term(MultiClass(std::move(parts)), c);
    }
    return p;
  }

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiClass& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const MultiClass& mu, const Rational& c) {
    if (mu.arity() != arity_)
      throw InputError("indicator " + mu.str() + " has arity " + std::to_string(mu.arity()) +
                       ", polynomial has arity " + std::to_string(arity_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Coordinatewise maximum of |mu| over the support; zero vector for 0.
  SizeVector degree() const {
    SizeVector d = SizeVector::zeros(arity_);
    for (const auto& [mu, c] : terms_) d = max(d, mu.sizes());
    return d;
  }

  Rational evaluate(const MultiClass& nu) const {
    Rational acc = 0;
    for (const auto& [mu, c] : terms_) {
      const Integer v = eval_indicator(mu, nu);
      if (v != 0) acc += c * Rational(v);
    }
    return acc;
  }
  ClassFunction evaluate_on(const SizeVector& group) const {
    if (group.arity() != arity_) throw InputError("group arity differs from polynomial arity");
    return ClassFunction::from(group, [&](const MultiClass& nu) { return evaluate(nu); });
  }

  CharacterPolynomial& operator+=(const CharacterPolynomial& o) {
    require_same_arity(o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
  }
  CharacterPolynomial& operator-=(const CharacterPolynomial& o) {
    require_same_arity(o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
  }
  CharacterPolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mu, c] : terms_) c *= s;
    return *this;
  }
  friend CharacterPolynomial operator+(CharacterPolynomial a, const CharacterPolynomial& b) { return a += b; }
  friend CharacterPolynomial operator-(CharacterPolynomial a, const CharacterPolynomial& b) { return a -= b; }
  friend CharacterPolynomial operator-(CharacterPolynomial a) { return a *= Rational(-1); }
  friend CharacterPolynomial operator*(const Rational& s, CharacterPolynomial a) { return a *= s; }
  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;

  void require_same_arity(const CharacterPolynomial& o) const {
    if (arity_ != o.arity_) throw InputError("character polynomials have different arities");
  }

 private:
  int arity_;
  Terms terms_;
};

namespace detail {

/// Indicators of degree <= bound against the classes of every group
/// S_d, d <= bound. Both index sets are multi_partitions_up_to(bound), and
/// ordered that way the matrix is unitriangular.
struct IndicatorBasis {
  std::vector<MultiClass> indicators;
  std::vector<MultiClass> classes;
  ExactSolver solver;
};

inline std::vector<std::vector<Integer>> indicator_matrix(const std::vector<MultiClass>& classes,
                                                          const std::vector<MultiClass>& indicators) {
  std::vector<std::vector<Integer>> a(classes.size(), std::vector<Integer>(indicators.size()));
  for (std::size_t r = 0; r < classes.size(); ++r)
    for (std::size_t c = 0; c < indicators.size(); ++c) a[r][c] = eval_indicator(indicators[c], classes[r]);
  return a;
}

inline const IndicatorBasis& indicator_basis(const SizeVector& bound) {
  static Memo<SizeVector, IndicatorBasis> memo;
  return memo.get(bound, [&] {
    auto indicators = multi_partitions_up_to(bound);
    auto classes = indicators;
    ExactSolver solver(indicator_matrix(classes, indicators));
    return IndicatorBasis{std::move(indicators), std::move(classes), std::move(solver)};
  });
}

inline CharacterPolynomial polynomial_from(int arity, const std::vector<MultiClass>& indicators,
                                           const std::vector<Rational>& coefficients) {
  CharacterPolynomial p(arity);
  for (std::size_t i = 0; i < indicators.size(); ++i) p.add_term(indicators[i], coefficients[i]);
  return p;
}

}  // namespace detail

/// Rank of the indicator evaluation matrix for degree <= bound over all
/// groups S_d with d <= bound, and the number of indicators.
inline std::pair<std::size_t, std::size_t> indicator_basis_rank(const SizeVector& bound) {
  const auto& b = detail::indicator_basis(bound);
  return {b.solver.rank(), b.solver.cols()};
}

/// Expresses a simultaneous class function, given by its values, as a
/// character polynomial of degree <= bound. The values are sampled on all
/// groups S_d with d <= bound; the fit is then checked on S_{bound + 1}.
template <class Values>
CharacterPolynomial fit_polynomial(const SizeVector& bound, Values&& values) {
  const auto& basis = detail::indicator_basis(bound);
  std::vector<Rational> rhs;
  rhs.reserve(basis.classes.size());
  for (const auto& nu : basis.classes) rhs.emplace_back(values(nu));
  const auto x = basis.solver.solve(rhs);
  CharacterPolynomial p = detail::polynomial_from(bound.arity(), basis.indicators, x);
  const SizeVector check = bound + SizeVector::filled(bound.arity(), 1);
  for (const auto& nu : group_classes(check).classes)
    if (p.evaluate(nu) != Rational(values(nu)))
      throw InconsistentSystem("fitted polynomial disagrees on S" + check.str() + " at " + nu.str());
  return p;
}

/// P . Q, degree <= deg P + deg Q, by evaluate-and-solve.
inline CharacterPolynomial multiply(const CharacterPolynomial& p, const CharacterPolynomial& q) {
  p.require_same_arity(q);
  if (p.is_zero() || q.is_zero()) return CharacterPolynomial(p.arity());
  const SizeVector bound = p.degree() + q.degree();
  return fit_polynomial(bound, [&](const MultiClass& nu) -> Rational {
    return p.evaluate(nu) * q.evaluate(nu);
  });
}

/// E_{S_d}[P] = (1/|S_d|) sum over classes of |class| P(class).
inline Rational expectation(const CharacterPolynomial& p, const SizeVector& d) {
  return inner_product(p.evaluate_on(d), ClassFunction::trivial(d));
}

inline Rational stable_expectation(const CharacterPolynomial& p) {
  return expectation(p, p.degree());
}

/// <P, Q>_{S_d}; values are rational so conjugation is trivial.
inline Rational inner(const CharacterPolynomial& p, const CharacterPolynomial& q, const SizeVector& d) {
  p.require_same_arity(q);
  return inner_product(p.evaluate_on(d), q.evaluate_on(d));
}

inline Rational stable_inner(const CharacterPolynomial& p, const CharacterPolynomial& q) {
  return inner(p, q, p.degree() + q.degree());
}

}  // namespace repstab
