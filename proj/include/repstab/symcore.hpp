#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/memo.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"

namespace repstab {

struct ClassData {
  Integer centralizer;  // z_mu = prod_k k^{m_k} m_k!
  Integer class_size;   // n! / z_mu
};

inline ClassData class_data(const Partition& mu, int n) {
  if (mu.size() != n)
    throw InputError("class_data: partition " + mu.str() + " is not of " + std::to_string(n));
  Integer z = 1;
  for (int k = 1; k <= n; ++k) {
    const int mk = mu.multiplicity(k);
    if (mk == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(mk));
    z *= power * factorial(mk);
  }
  return {z, factorial(n) / z};
}

/// Conjugacy-class bookkeeping for S_{n(1)} x ... x S_{n(m)}.
struct GroupClasses {
  SizeVector group;
  std::vector<MultiClass> classes;  // canonical order
  std::vector<Integer> class_sizes;
  Integer order;

  std::size_t index_of(const MultiClass& c) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), c);
    if (it == classes.end() || *it != c)
      throw InputError("class " + c.str() + " does not belong to S" + group.str());
    return static_cast<std::size_t>(it - classes.begin());
  }
  std::size_t size() const { return classes.size(); }
};

inline const GroupClasses& group_classes(const SizeVector& group) {
  static Memo<SizeVector, GroupClasses> memo;
  return memo.get(group, [&] {
    GroupClasses g{group, multi_partitions(group), {}, 1};
    for (int n : group.coords()) g.order *= factorial(n);
    for (const auto& c : g.classes) {
      Integer s = 1;
      for (const auto& p : c.coords()) s *= class_data(p, p.size()).class_size;
      g.class_sizes.push_back(s);
    }
    return g;
  });
}

inline std::vector<MultiClass> conjugacy_classes(const SizeVector& group) {
  return group_classes(group).classes;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets. Removing a border strip of length r is
// moving a bead from position b to b - r; the sign counts beads jumped over.
inline long long mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  static Memo<Key, long long> memo;
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  return memo.get(Key{lambda, mu}, [&]() -> long long {
    const int r = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
    long long total = 0;
    for (int i = 0; i < len; ++i) {
      const int from = beta[static_cast<std::size_t>(i)];
      const int to = from - r;
      if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta)
        if (b > to && b < from) ++jumped;
      std::vector<int> moved(beta);
      moved[static_cast<std::size_t>(i)] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> shape;
      for (int j = 0; j < len; ++j) {
        const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
        if (part > 0) shape.push_back(part);
      }
      const long long sub = mn_character(shape, rest);
      total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
  });
}

}  // namespace detail

/// chi_lambda(mu) for partitions of the same size.
inline long long irreducible_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw InputError("irreducible_character: " + lambda.str() + " and " + mu.str() +
                     " have different sizes");
  return detail::mn_character({lambda.parts().begin(), lambda.parts().end()},
                              {mu.parts().begin(), mu.parts().end()});
}

/// Product of coordinate characters of S_{n(1)} x ... x S_{n(m)}.
inline long long irreducible_character(const MultiClass& lambda, const MultiClass& mu) {
  if (lambda.arity() != mu.arity())
    throw InputError("irreducible_character: arity mismatch");
  long long v = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.arity()); ++i) {
    v *= irreducible_character(lambda[i], mu[i]);
    if (v == 0) break;
  }
  return v;
}

/// An exact rational class function on one group S_n, dense in canonical
/// class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(SizeVector group)
      : group_(std::move(group)), values_(group_classes(group_).size()) {}
  ClassFunction(SizeVector group, std::vector<Rational> values)
      : group_(std::move(group)), values_(std::move(values)) {
    if (values_.size() != group_classes(group_).size())
      throw InputError("class function on S" + group_.str() + " needs " +
                       std::to_string(group_classes(group_).size()) + " values");
  }

  template <class F>
  static ClassFunction from(const SizeVector& group, F&& f) {
    std::vector<Rational> v;
    for (const auto& c : group_classes(group).classes) v.emplace_back(f(c));
    return ClassFunction(group, std::move(v));
  }

  static ClassFunction irreducible(const MultiClass& lambda) {
    return from(lambda.sizes(), [&](const MultiClass& mu) {
      return Rational(static_cast<long>(irreducible_character(lambda, mu)));
    });
  }
  static ClassFunction trivial(const SizeVector& group) {
    return from(group, [](const MultiClass&) { return Rational(1); });
  }
  /// 1 on `mu`, 0 elsewhere.
  static ClassFunction indicator(const MultiClass& mu) {
    return from(mu.sizes(), [&](const MultiClass& c) { return Rational(c == mu ? 1 : 0); });
  }
  static ClassFunction regular(const SizeVector& group) {
    const auto& g = group_classes(group);
    return from(group, [&](const MultiClass& c) {
      bool identity = true;
      for (const auto& p : c.coords()) identity = identity && p.largest() <= 1;
      return identity ? Rational(g.order) : Rational(0);
    });
  }

  const SizeVector& group() const { return group_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& value(const MultiClass& c) const {
    return values_[group_classes(group_).index_of(c)];
  }
  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  ClassFunction& operator*=(const Rational& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Rational& s, ClassFunction a) { return a *= s; }
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    a.require_same_group(b);
    ClassFunction r(a);
    for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= b.values_[i];
    return r;
  }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

  void require_same_group(const ClassFunction& o) const {
    if (group_ != o.group_)
      throw InputError("class functions live on different groups S" + group_.str() +
                       " and S" + o.group_.str());
  }

 private:
  SizeVector group_;
  std::vector<Rational> values_;
};

/// The irreducible characters of S_group, indexed like the classes.
inline const std::vector<ClassFunction>& character_table(const SizeVector& group) {
  static Memo<SizeVector, std::vector<ClassFunction>> memo;
  return memo.get(group, [&] {
    std::vector<ClassFunction> rows;
    for (const auto& lambda : group_classes(group).classes)
      rows.push_back(ClassFunction::irreducible(lambda));
    return rows;
  });
}

/// (1/|G|) sum over classes of |class| f g. Values are rational, so
/// conjugation is the identity.
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  f.require_same_group(g);
  const auto& gc = group_classes(f.group());
  Rational acc = 0;
  for (std::size_t i = 0; i < gc.size(); ++i) acc += Rational(gc.class_sizes[i]) * f[i] * g[i];
  acc /= Rational(gc.order);
  return acc;
}

/// Coefficients <f, chi_lambda> over irreducibles; zero coefficients omitted.
inline std::map<MultiClass, Rational> decompose(const ClassFunction& f) {
  std::map<MultiClass, Rational> out;
  const auto& gc = group_classes(f.group());
  const auto& table = character_table(f.group());
  for (std::size_t i = 0; i < gc.size(); ++i) {
    Rational c = inner_product(f, table[i]);
    if (c != 0) out.emplace(gc.classes[i], std::move(c));
  }
  return out;
}

inline ClassFunction reconstruct(const SizeVector& group,
                                 const std::map<MultiClass, Rational>& coefficients) {
  ClassFunction f(group);
  for (const auto& [lambda, c] : coefficients) {
    if (lambda.sizes() != group)
      throw InputError("irreducible " + lambda.str() + " is not a character of S" + group.str());
    f += c * ClassFunction::irreducible(lambda);
  }
  return f;
}

}  // namespace repstab
