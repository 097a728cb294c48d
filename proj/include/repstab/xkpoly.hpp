#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"

namespace repstab {

/// A polynomial in the cycle-counting functions X_k^(i), where X_k^(i) counts
/// k-cycles in coordinate i and has degree k in that coordinate.
class XkPolynomial {
 public:
  /// (coordinate, cycle length) -> exponent; zero exponents are never stored.
  using Monomial = std::map<std::pair<int, int>, int>;
  using Terms = std::map<Monomial, Rational>;

  explicit XkPolynomial(int arity = 1) : arity_(arity) {
    if (arity < 1) throw InputError("arity must be at least 1");
  }

  static XkPolynomial constant(int arity, const Rational& c) {
    XkPolynomial p(arity);
    p.add_term({}, c);
    return p;
  }
  static XkPolynomial variable(int arity, int coord, int k) {
    XkPolynomial p(arity);
    p.add_term({{{coord, k}, 1}}, 1);
    return p;
  }

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Rational& c) {
    for (const auto& [var, e] : mono) {
      if (var.first < 0 || var.first >= arity_ || var.second < 1 || e < 1)
        throw InputError("invalid monomial variable");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SizeVector degree() const {
    SizeVector d = SizeVector::zeros(arity_);
    for (const auto& [mono, c] : terms_) {
      std::vector<int> w(static_cast<std::size_t>(arity_), 0);
      for (const auto& [var, e] : mono) w[static_cast<std::size_t>(var.first)] += var.second * e;
      d = max(d, SizeVector(std::move(w)));
    }
    return d;
  }

  Rational evaluate(const MultiClass& nu) const {
    if (nu.arity() != arity_) throw InputError("class arity differs from polynomial arity");
    Rational acc = 0;
    for (const auto& [mono, c] : terms_) {
      Integer v = 1;
      for (const auto& [var, e] : mono) {
        Integer x = nu[static_cast<std::size_t>(var.first)].multiplicity(var.second);
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
        v *= power;
      }
      acc += c * Rational(v);
    }
    return acc;
  }

  friend XkPolynomial operator+(XkPolynomial a, const XkPolynomial& b) {
    a.require_same_arity(b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend XkPolynomial operator*(const XkPolynomial& a, const XkPolynomial& b) {
    a.require_same_arity(b);
    XkPolynomial r(a.arity_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [var, e] : mb) m[var] += e;
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend bool operator==(const XkPolynomial&, const XkPolynomial&) = default;

  void require_same_arity(const XkPolynomial& o) const {
    if (arity_ != o.arity_) throw InputError("polynomials have different arities");
  }

 private:
  int arity_;
  Terms terms_;
};

namespace detail {

/// Signed Stirling numbers of the first kind: x(x-1)...(x-n+1) = sum_j s(n,j) x^j.
inline Integer stirling_first(int n, int j) {
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n + 1),
                                      std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b)
      s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] -
          (a - 1) * s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
  return j < 0 || j > n ? Integer(0) : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

/// Stirling numbers of the second kind: x^n = sum_j S(n,j) x(x-1)...(x-j+1).
inline Integer stirling_second(int n, int j) {
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n + 1),
                                      std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b)
      s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          b * s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] +
          s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  return j < 0 || j > n ? Integer(0) : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

}  // namespace detail

/// binom(X, mu) = prod_{i,k} C(X_k^(i), m_k(mu^(i))), each binomial expanded
/// through the falling factorial.
inline XkPolynomial to_xk(const CharacterPolynomial& p) {
  XkPolynomial out(p.arity());
  for (const auto& [mu, coeff] : p.terms()) {
    XkPolynomial term = XkPolynomial::constant(p.arity(), coeff);
    for (int i = 0; i < mu.arity(); ++i) {
      const Partition& part = mu[static_cast<std::size_t>(i)];
      for (int k = 1; k <= part.largest(); ++k) {
        const int mk = part.multiplicity(k);
        if (mk == 0) continue;
        XkPolynomial binom(p.arity());
        const Rational inv_fact = Rational(1) / Rational(factorial(mk));
        for (int j = 1; j <= mk; ++j)
          binom.add_term({{{i, k}, j}}, Rational(detail::stirling_first(mk, j)) * inv_fact);
        term = term * binom;
      }
    }
    out = out + term;
  }
  return out;
}

/// X_k^e = sum_j S(e,j) j! C(X_k, j); a product of binomials in distinct
/// variables is a single indicator.
inline CharacterPolynomial from_xk(const XkPolynomial& p) {
  CharacterPolynomial out(p.arity());
  for (const auto& [mono, coeff] : p.terms()) {
    // (coord, k, j) choices; expand the product over variables
    std::vector<std::pair<std::pair<int, int>, int>> vars(mono.begin(), mono.end());
    std::vector<int> choice(vars.size(), 1);
    auto rec = [&](auto&& self, std::size_t v, Rational acc) -> void {
      if (v == vars.size()) {
        std::vector<std::vector<int>> lengths(static_cast<std::size_t>(p.arity()));
        for (std::size_t t = 0; t < vars.size(); ++t)
          for (int r = 0; r < choice[t]; ++r)
            lengths[static_cast<std::size_t>(vars[t].first.first)].push_back(vars[t].first.second);
        std::vector<Partition> parts;
        for (auto& l : lengths) parts.push_back(Partition::from_lengths(std::move(l)));
        out.add_term(MultiClass(std::move(parts)), acc);
        return;
      }
      const int e = vars[v].second;
      for (int j = 1; j <= e; ++j) {
        choice[v] = j;
        self(self, v + 1, acc * Rational(detail::stirling_second(e, j) * factorial(j)));
      }
    };
    rec(rec, 0, coeff);
  }
  return out;
}

}  // namespace repstab
