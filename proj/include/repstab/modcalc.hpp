#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/ficombinat.hpp"
#include "repstab/partition.hpp"
#include "repstab/permutation.hpp"
#include "repstab/rational.hpp"
#include "repstab/symcore.hpp"

namespace repstab {

/// One term  coefficient * Ind_degree(V)  with V carried by its character.
struct Summand {
  Rational coefficient;
  ClassFunction rep;

  const SizeVector& degree() const { return rep.group(); }
};

namespace detail {
inline std::strong_ordering compare_reps(const ClassFunction& a, const ClassFunction& b) {
  if (auto c = a.group() <=> b.group(); c != 0) return c;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}
}  // namespace detail

/// A formal rational combination of induction modules. Summands are kept
/// sorted by (degree, character values); equal (degree, rep) pairs are merged
/// and zero summands dropped.
class VirtualFreeModule {
 public:
  explicit VirtualFreeModule(int arity = 1) : arity_(arity) {
    if (arity < 1) throw InputError("arity must be at least 1");
  }

  static VirtualFreeModule induction(const ClassFunction& rep, const Rational& coefficient = 1) {
    VirtualFreeModule m(rep.group().arity());
    m.add(coefficient, rep);
    return m;
  }

  int arity() const { return arity_; }
  const std::vector<Summand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }

  void add(const Rational& coefficient, const ClassFunction& rep) {
    if (rep.group().arity() != arity_) throw InputError("summand arity differs from module arity");
    if (coefficient == 0 || rep.is_zero()) return;
    auto it = std::lower_bound(summands_.begin(), summands_.end(), rep,
                               [](const Summand& s, const ClassFunction& r) {
                                 return detail::compare_reps(s.rep, r) < 0;
                               });
    if (it != summands_.end() && it->rep == rep) {
      it->coefficient += coefficient;
      if (it->coefficient == 0) summands_.erase(it);
      return;
    }
    summands_.insert(it, Summand{coefficient, rep});
  }

  /// Coordinatewise maximum of summand degrees.
  SizeVector degree() const {
    SizeVector d = SizeVector::zeros(arity_);
    for (const auto& s : summands_) d = max(d, s.degree());
    return d;
  }

  VirtualFreeModule& operator+=(const VirtualFreeModule& o) {
    if (o.arity_ != arity_) throw InputError("modules have different arities");
    for (const auto& s : o.summands_) add(s.coefficient, s.rep);
    return *this;
  }
  friend VirtualFreeModule operator+(VirtualFreeModule a, const VirtualFreeModule& b) { return a += b; }
  friend VirtualFreeModule operator*(const Rational& k, const VirtualFreeModule& a) {
    VirtualFreeModule r(a.arity_);
    for (const auto& s : a.summands_) r.add(k * s.coefficient, s.rep);
    return r;
  }
  friend bool operator==(const VirtualFreeModule& a, const VirtualFreeModule& b) {
    if (a.arity_ != b.arity_ || a.summands_.size() != b.summands_.size()) return false;
    for (std::size_t i = 0; i < a.summands_.size(); ++i)
      if (a.summands_[i].coefficient != b.summands_[i].coefficient || a.summands_[i].rep != b.summands_[i].rep)
        return false;
    return true;
  }

 private:
  int arity_;
  std::vector<Summand> summands_;
};

/// chi of Ind_c(V) = sum over classes mu of S_c of chi_V(mu) binom(X, mu).
inline CharacterPolynomial ind_character(const SizeVector& c, const ClassFunction& chi_v) {
  if (chi_v.group() != c)
    throw InputError("representation lives on S" + chi_v.group().str() + ", not S" + c.str());
  CharacterPolynomial p(c.arity());
  const auto& gc = group_classes(c);
  for (std::size_t i = 0; i < gc.size(); ++i) p.add_term(gc.classes[i], chi_v[i]);
  return p;
}

inline CharacterPolynomial module_character(const VirtualFreeModule& m) {
  CharacterPolynomial p(m.arity());
  for (const auto& s : m.summands()) p += s.coefficient * ind_character(s.degree(), s.rep);
  return p;
}

/// binom(X, mu) -> Ind_{|mu|}(class indicator of mu), termwise.
inline VirtualFreeModule categorify(const CharacterPolynomial& p) {
  VirtualFreeModule m(p.arity());
  for (const auto& [mu, c] : p.terms()) m.add(c, ClassFunction::indicator(mu));
  return m;
}

/// The dual representation has character g -> chi(g^-1). Computed literally
/// from class representatives; over S_n every element is conjugate to its
/// inverse, so this is the identity on values.
inline ClassFunction dual_character(const ClassFunction& chi) {
  return ClassFunction::from(chi.group(), [&](const MultiClass& mu) {
    return chi.value(MultiPermutation::of_cycle_type(mu).inverse().cycle_type());
  });
}

/// Ind_c(V)* = Ind_c(V*), extended linearly.
inline VirtualFreeModule dual(const VirtualFreeModule& m) {
  VirtualFreeModule out(m.arity());
  for (const auto& s : m.summands()) out.add(s.coefficient, dual_character(s.rep));
  return out;
}

/// A finite set with an action of S_group, given on generators and extended
/// to every element by walking the Cayley graph. Construction fails if the
/// generators do not generate the group or the extension is inconsistent.
class FiniteGSet {
 public:
  using Generator = std::pair<MultiPermutation, std::vector<int>>;

  FiniteGSet(SizeVector group, int elements, const std::vector<Generator>& generators)
      : group_(std::move(group)), size_(elements) {
    for (const auto& [g, act] : generators) {
      if (g.sizes() != group_) throw InputError("generator is not in S" + group_.str());
      validate_permutation(act);
    }
    std::vector<int> id(static_cast<std::size_t>(size_));
    std::iota(id.begin(), id.end(), 0);
    action_.emplace(MultiPermutation::identity(group_), id);
    std::vector<MultiPermutation> frontier{MultiPermutation::identity(group_)};
    while (!frontier.empty()) {
      std::vector<MultiPermutation> next;
      for (const auto& g : frontier) {
        const std::vector<int> g_act = action_.at(g);
        for (const auto& [s, s_act] : generators) {
          std::vector<int> composed(static_cast<std::size_t>(size_));
          for (int y = 0; y < size_; ++y)
            composed[static_cast<std::size_t>(y)] = s_act[static_cast<std::size_t>(g_act[static_cast<std::size_t>(y)])];
          MultiPermutation sg = compose(s, g);
          auto [it, inserted] = action_.try_emplace(sg, composed);
          if (inserted)
            next.push_back(std::move(sg));
          else if (it->second != composed)
            throw InputError("generator actions do not define a group action");
        }
      }
      frontier = std::move(next);
    }
    if (Integer(static_cast<long>(action_.size())) != group_classes(group_).order)
      throw InputError("generators do not generate S" + group_.str());
  }

  /// Adjacent transpositions of each coordinate.
  static std::vector<MultiPermutation> standard_generators(const SizeVector& group) {
    std::vector<MultiPermutation> gens;
    for (std::size_t i = 0; i < static_cast<std::size_t>(group.arity()); ++i)
      for (int j = 0; j + 1 < group[i]; ++j) {
        std::vector<Permutation> c;
        for (std::size_t t = 0; t < static_cast<std::size_t>(group.arity()); ++t) {
          auto v = Permutation::identity(group[t]).images();
          if (t == i) std::swap(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j + 1)]);
          c.emplace_back(std::move(v));
        }
        gens.emplace_back(std::move(c));
      }
    return gens;
  }

  static FiniteGSet point(const SizeVector& group) {
    std::vector<Generator> gens;
    for (auto& g : standard_generators(group)) gens.emplace_back(std::move(g), std::vector<int>{0});
    return FiniteGSet(group, 1, gens);
  }

  /// The group acting on itself by left multiplication.
  static FiniteGSet regular(const SizeVector& group) { return cosets(group, {MultiPermutation::identity(group)}); }

  /// Left cosets gH of a subgroup H, with s . gH = (s g) H.
  static FiniteGSet cosets(const SizeVector& group, const std::vector<MultiPermutation>& subgroup) {
    const auto elements = all_permutations(group);
    std::map<MultiPermutation, int> coset_of;
    int count = 0;
    for (const auto& g : elements) {
      if (coset_of.count(g)) continue;
      for (const auto& h : subgroup) coset_of[compose(g, h)] = count;
      ++count;
    }
    std::vector<MultiPermutation> reps(static_cast<std::size_t>(count));
    for (const auto& [g, k] : coset_of)
      if (reps[static_cast<std::size_t>(k)].arity() == 0) reps[static_cast<std::size_t>(k)] = g;
    std::vector<Generator> gens;
    for (auto& s : standard_generators(group)) {
      std::vector<int> act;
      for (const auto& r : reps) act.push_back(coset_of.at(compose(s, r)));
      gens.emplace_back(std::move(s), std::move(act));
    }
    return FiniteGSet(group, count, gens);
  }

  const SizeVector& group() const { return group_; }
  int size() const { return size_; }
  int act(const MultiPermutation& g, int y) const {
    return action_.at(g)[static_cast<std::size_t>(y)];
  }

  /// Fixed-point count: the character of the permutation representation.
  ClassFunction permutation_character() const {
    return ClassFunction::from(group_, [&](const MultiClass& mu) {
      const auto& a = action_.at(MultiPermutation::of_cycle_type(mu));
      int fixed = 0;
      for (int y = 0; y < size_; ++y) fixed += a[static_cast<std::size_t>(y)] == y;
      return Rational(fixed);
    });
  }

 private:
  void validate_permutation(const std::vector<int>& act) const {
    if (static_cast<int>(act.size()) != size_) throw InputError("generator action has wrong length");
    std::vector<bool> seen(act.size(), false);
    for (int y : act) {
      if (y < 0 || y >= size_ || seen[static_cast<std::size_t>(y)])
        throw InputError("generator action is not a permutation");
      seen[static_cast<std::size_t>(y)] = true;
    }
  }

  SizeVector group_;
  int size_;
  std::map<MultiPermutation, std::vector<int>> action_;
};

/// Every subgroup of S_group, each as a sorted element list. Found by closing
/// known subgroups under one extra element at a time.
inline std::vector<std::vector<MultiPermutation>> subgroups(const SizeVector& group,
                                                            const Cutoffs& cutoffs = {}) {
  require_within(group, std::min(cutoffs.oracles, 4), "subgroup enumeration");
  const auto elements = all_permutations(group);
  const std::size_t n = elements.size();
  std::map<MultiPermutation, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = index.at(compose(elements[a], elements[b]));

  auto closure = [&](std::vector<bool> members) {
    std::vector<std::size_t> list;
    for (std::size_t i = 0; i < n; ++i)
      if (members[i]) list.push_back(i);
    for (std::size_t k = 0; k < list.size(); ++k)
      for (std::size_t j = 0; j <= k; ++j)
        for (std::size_t prod : {mul[list[k]][list[j]], mul[list[j]][list[k]]})
          if (!members[prod]) {
            members[prod] = true;
            list.push_back(prod);
          }
    return members;
  };

  std::vector<bool> trivial(n, false);
  trivial[index.at(MultiPermutation::identity(group))] = true;
  std::set<std::vector<bool>> found{trivial};
  std::vector<std::vector<bool>> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& h : frontier)
      for (std::size_t g = 0; g < n; ++g) {
        if (h[g]) continue;
        auto bigger = h;
        bigger[g] = true;
        bigger = closure(std::move(bigger));
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<MultiPermutation>> out;
  for (const auto& members : found) {
    std::vector<MultiPermutation> h;
    for (std::size_t i = 0; i < n; ++i)
      if (members[i]) h.push_back(elements[i]);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// The Young subgroup S_mu: permutations of S_|mu| preserving the blocks
/// {0..mu_1-1}, {mu_1..mu_1+mu_2-1}, ... in every coordinate.
inline std::vector<MultiPermutation> young_subgroup(const MultiClass& mu) {
  std::vector<std::vector<int>> block(static_cast<std::size_t>(mu.arity()));
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t b = 0; b < static_cast<std::size_t>(mu[i].length()); ++b)
      for (int k = 0; k < mu[i][b]; ++k) block[i].push_back(static_cast<int>(b));
  std::vector<MultiPermutation> out;
  for (auto& g : all_permutations(mu.sizes())) {
    bool keeps = true;
    for (std::size_t i = 0; keeps && i < block.size(); ++i)
      for (std::size_t x = 0; keeps && x < block[i].size(); ++x)
        keeps = block[i][x] == block[i][static_cast<std::size_t>(g[i](static_cast<int>(x)))];
    if (keeps) out.push_back(std::move(g));
  }
  return out;
}

/// Character of Ind_c(Q[Y]) at d, computed from its permutation model:
/// Hom(c, d) x Y modulo (f o g, y) ~ (f, g . y), acted on by post-composition.
/// Returns the fixed-point count of each class of S_d.
inline ClassFunction induction_oracle(const SizeVector& c, const FiniteGSet& y, const SizeVector& d,
                                      const Cutoffs& cutoffs = {}) {
  if (y.group() != c) throw InputError("G-set is not over S" + c.str());
  c.require_same_arity(d);
  require_within(d, cutoffs.oracles, "induction oracle");
  const auto homs = enumerate_injections(c, d, cutoffs);
  const auto group_c = all_permutations(c);
  const std::size_t ys = static_cast<std::size_t>(y.size());
  std::map<MultiInjection, std::size_t> hom_index;
  for (std::size_t i = 0; i < homs.size(); ++i) hom_index.emplace(homs[i], i);

  std::vector<std::size_t> parent(homs.size() * ys);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t f = 0; f < homs.size(); ++f)
    for (const auto& g : group_c) {
      const std::size_t fg = hom_index.at(compose(homs[f], g));
      for (std::size_t e = 0; e < ys; ++e) {
        const std::size_t a = find(fg * ys + e);
        const std::size_t b = find(f * ys + static_cast<std::size_t>(y.act(g, static_cast<int>(e))));
        if (a != b) parent[a] = b;
      }
    }

  return ClassFunction::from(d, [&](const MultiClass& nu) {
    const MultiPermutation sigma = MultiPermutation::of_cycle_type(nu);
    std::map<std::size_t, std::size_t> image_of_class;
    for (std::size_t f = 0; f < homs.size(); ++f) {
      const std::size_t sf = hom_index.at(compose(sigma, homs[f]));
      for (std::size_t e = 0; e < ys; ++e) {
        const std::size_t from = find(f * ys + e);
        const std::size_t to = find(sf * ys + e);
        auto [it, inserted] = image_of_class.try_emplace(from, to);
        if (!inserted && it->second != to)
          throw InconsistentSystem("post-composition is not well defined on the quotient");
      }
    }
    long fixed = 0;
    for (const auto& [from, to] : image_of_class) fixed += from == to;
    return Rational(fixed);
  });
}

/// Ind_c1(V) (x) Ind_c2(W) as a free module: at each d with PO_d(c1, c2)
/// nonempty, Ind_d of Q[PO_d] (x)_{S_c1 x S_c2} (V [x] W), whose character is
///   chi(sigma) = 1/(|S_c1||S_c2|) sum over (r1, r2) in PO_d and (h1, h2)
///                of [sigma r_i = r_i h_i] chi_V(h1) chi_W(h2).
inline VirtualFreeModule tensor_decompose(const SizeVector& c1, const ClassFunction& chi_v,
                                          const SizeVector& c2, const ClassFunction& chi_w,
                                          const Cutoffs& cutoffs = {}) {
  c1.require_same_arity(c2);
  if (chi_v.group() != c1 || chi_w.group() != c2)
    throw InputError("tensor_decompose: representation groups do not match degrees");
  const auto g1 = all_permutations(c1);
  const auto g2 = all_permutations(c2);
  std::vector<Rational> v1, v2;
  for (const auto& h : g1) v1.push_back(chi_v.value(h.cycle_type()));
  for (const auto& h : g2) v2.push_back(chi_w.value(h.cycle_type()));
  const Rational norm = Rational(1) / Rational(Integer(static_cast<long>(g1.size() * g2.size())));

  auto twisted_sum = [](const MultiPermutation& sigma, const MultiInjection& r,
                        const std::vector<MultiPermutation>& group, const std::vector<Rational>& chi) {
    const MultiInjection moved = compose(sigma, r);
    Rational acc = 0;
    for (std::size_t i = 0; i < group.size(); ++i)
      if (moved == compose(r, group[i])) acc += chi[i];
    return acc;
  };

  VirtualFreeModule out(c1.arity());
  for (const auto& d : size_box(max(c1, c2), c1 + c2)) {
    const auto po = pushout_pairs(c1, c2, d, cutoffs);
    if (po.empty()) continue;
    ClassFunction rep = ClassFunction::from(d, [&](const MultiClass& nu) {
      const MultiPermutation sigma = MultiPermutation::of_cycle_type(nu);
      Rational acc = 0;
      for (const auto& [r1, r2] : po.pairs()) {
        Rational a = twisted_sum(sigma, r1, g1, v1);
        if (a == 0) continue;
        acc += a * twisted_sum(sigma, r2, g2, v2);
      }
      return Rational(acc * norm);
    });
    out.add(1, rep);
  }
  return out;
}

/// Bilinear extension of tensor_decompose.
inline VirtualFreeModule tensor(const VirtualFreeModule& m, const VirtualFreeModule& n,
                                const Cutoffs& cutoffs = {}) {
  if (m.arity() != n.arity()) throw InputError("modules have different arities");
  VirtualFreeModule out(m.arity());
  for (const auto& a : m.summands())
    for (const auto& b : n.summands())
      out += (a.coefficient * b.coefficient) *
             tensor_decompose(a.degree(), a.rep, b.degree(), b.rep, cutoffs);
  return out;
}

/// dim (M_d)_{S_d} = sum_i lambda_i dim V_i / S_{c_i} over summands with c_i <= d.
inline Rational coinvariants_dim(const VirtualFreeModule& m, const SizeVector& d) {
  Rational acc = 0;
  for (const auto& s : m.summands())
    if (s.degree().fits_in(d)) acc += s.coefficient * inner_product(s.rep, ClassFunction::trivial(s.degree()));
  return acc;
}

/// dim Hom_{S_d}(M_d, N_d) = <chi_M, chi_N>_{S_d}.
inline Rational hom_dim(const VirtualFreeModule& m, const VirtualFreeModule& n, const SizeVector& d) {
  return inner(module_character(m), module_character(n), d);
}

}  // namespace repstab
