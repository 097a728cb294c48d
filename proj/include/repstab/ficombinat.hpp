#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/partition.hpp"
#include "repstab/permutation.hpp"

namespace repstab {

/// Enumeration bounds. Exceeding one raises CutoffExceeded.
struct Cutoffs {
  int injections = 8;  // largest coordinate for hom-set enumeration
  int oracles = 6;     // largest coordinate for brute-force oracles
};

inline void require_within(const SizeVector& sizes, int limit, const char* what) {
  if (sizes.max_coord() > limit)
    throw CutoffExceeded(std::string(what) + ": size " + sizes.str() + " exceeds cut-off " +
                         std::to_string(limit));
}

namespace detail {

inline std::vector<Injection> injections_1d(int c, int d, bool increasing_only) {
  std::vector<Injection> out;
  if (c > d) return out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == c) {
      out.emplace_back(cur, d);
      return;
    }
    const int lo = increasing_only && !cur.empty() ? cur.back() + 1 : 0;
    for (int y = lo; y < d; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = true;
      cur.push_back(y);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(y)] = false;
    }
  };
  rec(rec);
  return out;
}

inline std::vector<MultiInjection> product(const std::vector<std::vector<Injection>>& per) {
  std::vector<MultiInjection> out;
  for (const auto& p : per)
    if (p.empty()) return out;
  std::vector<Injection> cur(per.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == per.size()) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& f : per[i]) {
      cur[i] = f;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<MultiInjection> injections(const SizeVector& c, const SizeVector& d,
                                              const Cutoffs& cutoffs, bool increasing_only) {
  c.require_same_arity(d);
  require_within(d, cutoffs.injections, "injection enumeration");
  if (!c.fits_in(d)) return {};
  std::vector<std::vector<Injection>> per;
  for (std::size_t i = 0; i < static_cast<std::size_t>(c.arity()); ++i)
    per.push_back(injections_1d(c[i], d[i], increasing_only));
  return product(per);
}

}  // namespace detail

/// Hom(c, d) in FI^m, lexicographic in the image lists.
inline std::vector<MultiInjection> enumerate_injections(const SizeVector& c, const SizeVector& d,
                                                        const Cutoffs& cutoffs = {}) {
  return detail::injections(c, d, cutoffs, false);
}

/// One representative per right S_c-orbit of Hom(c, d): the increasing
/// injection onto each tuple of image subsets.
inline std::vector<MultiInjection> binomial_set(const SizeVector& c, const SizeVector& d,
                                                const Cutoffs& cutoffs = {}) {
  return detail::injections(c, d, cutoffs, true);
}

/// Literal count of orbits [f] in binom(d, |mu|) admitting psi in mu with
/// sigma o f = f o psi, by exhaustive search over f and psi.
inline long long indicator_oracle(const MultiClass& mu, const MultiPermutation& sigma,
                                  const Cutoffs& cutoffs = {}) {
  const SizeVector d = sigma.sizes();
  const SizeVector c = mu.sizes();
  c.require_same_arity(d);
  require_within(d, cutoffs.oracles, "indicator oracle");
  if (!c.fits_in(d)) return 0;
  std::vector<MultiPermutation> psis;
  for (auto& psi : all_permutations(c))
    if (psi.cycle_type() == mu) psis.push_back(std::move(psi));
  long long count = 0;
  for (const auto& f : binomial_set(c, d, cutoffs)) {
    const MultiInjection moved = compose(sigma, f);
    for (const auto& psi : psis) {
      if (moved == compose(f, psi)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// PO_d(c1, c2): pairs (g1, g2) presenting d as a weak push-out of c1 and c2.
/// In FI^m these are exactly the pairs whose images cover d in every
/// coordinate. The right S_c1 x S_c2 action is free; each orbit contains one
/// pair of increasing injections, which serves as its representative.
class PushoutPairs {
 public:
  using Pair = std::pair<MultiInjection, MultiInjection>;

  PushoutPairs(SizeVector c1, SizeVector c2, SizeVector d, std::vector<Pair> pairs)
      : c1_(std::move(c1)), c2_(std::move(c2)), d_(std::move(d)), pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) index_.emplace(pairs_[i], i);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const Pair rep = orbit_representative(pairs_[i]);
      auto [it, inserted] = orbit_index_.try_emplace(rep, orbit_reps_.size());
      if (inserted) orbit_reps_.push_back(index_.at(rep));
      orbit_of_.push_back(it->second);
    }
  }

  const SizeVector& first_source() const { return c1_; }
  const SizeVector& second_source() const { return c2_; }
  const SizeVector& target() const { return d_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::size_t index_of(const Pair& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InputError("pair is not in the push-out set");
    return it->second;
  }
  bool contains(const Pair& p) const { return index_.count(p) != 0; }

  std::size_t orbit_count() const { return orbit_reps_.size(); }
  /// Orbit id of pair i under the right action.
  std::size_t orbit_of(std::size_t i) const { return orbit_of_[i]; }
  /// Index of the representative pair of each orbit.
  const std::vector<std::size_t>& orbit_representatives() const { return orbit_reps_; }

  /// sigma . (g1, g2) = (sigma o g1, sigma o g2)
  std::size_t left_act(const MultiPermutation& sigma, std::size_t i) const {
    const auto& [g1, g2] = pairs_[i];
    return index_of({compose(sigma, g1), compose(sigma, g2)});
  }
  /// (g1, g2) . (h1, h2) = (g1 o h1, g2 o h2)
  std::size_t right_act(std::size_t i, const MultiPermutation& h1, const MultiPermutation& h2) const {
    const auto& [g1, g2] = pairs_[i];
    return index_of({compose(g1, h1), compose(g2, h2)});
  }

 private:
  static MultiInjection sorted(const MultiInjection& g) {
    std::vector<Injection> c;
    for (const auto& f : g.coords()) {
      auto v = f.images();
      std::sort(v.begin(), v.end());
      c.emplace_back(std::move(v), f.codomain());
    }
    return MultiInjection(std::move(c));
  }
  static Pair orbit_representative(const Pair& p) { return {sorted(p.first), sorted(p.second)}; }

  SizeVector c1_, c2_, d_;
  std::vector<Pair> pairs_;
  std::map<Pair, std::size_t> index_;
  std::map<Pair, std::size_t> orbit_index_;
  std::vector<std::size_t> orbit_reps_;
  std::vector<std::size_t> orbit_of_;
};

namespace detail {
inline bool covers(const MultiInjection& g1, const MultiInjection& g2) {
  for (std::size_t i = 0; i < static_cast<std::size_t>(g1.arity()); ++i) {
    auto m = g1[i].image_mask();
    for (int y : g2[i].images()) m[static_cast<std::size_t>(y)] = true;
    if (std::find(m.begin(), m.end(), false) != m.end()) return false;
  }
  return true;
}
}  // namespace detail

/// Empty unless max(c1, c2) <= d <= c1 + c2 coordinatewise.
inline PushoutPairs pushout_pairs(const SizeVector& c1, const SizeVector& c2, const SizeVector& d,
                                  const Cutoffs& cutoffs = {}) {
  c1.require_same_arity(c2);
  c1.require_same_arity(d);
  std::vector<PushoutPairs::Pair> pairs;
  if (max(c1, c2).fits_in(d) && d.fits_in(c1 + c2)) {
    const auto first = enumerate_injections(c1, d, cutoffs);
    const auto second = enumerate_injections(c2, d, cutoffs);
    for (const auto& g1 : first)
      for (const auto& g2 : second)
        if (detail::covers(g1, g2)) pairs.emplace_back(g1, g2);
  }
  return PushoutPairs(c1, c2, d, std::move(pairs));
}

/// A commutative-square candidate  p -> c1 -> d,  p -> c2 -> d.
struct Square {
  MultiInjection to_first;     // p -> c1
  MultiInjection to_second;    // p -> c2
  MultiInjection from_first;   // c1 -> d
  MultiInjection from_second;  // c2 -> d

  void require_composable() const {
    const int m = to_first.arity();
    if (to_second.arity() != m || from_first.arity() != m || from_second.arity() != m)
      throw InputError("square maps have different arities");
    if (to_first.domain() != to_second.domain() || to_first.codomain() != from_first.domain() ||
        to_second.codomain() != from_second.domain() ||
        from_first.codomain() != from_second.codomain())
      throw InputError("square maps do not compose");
  }
};

/// Set-theoretic pullback test, coordinatewise: the square commutes and the
/// two images in d meet exactly in the image of p.
inline bool is_pullback(const Square& sq) {
  sq.require_composable();
  if (compose(sq.from_first, sq.to_first) != compose(sq.from_second, sq.to_second)) return false;
  const MultiInjection through = compose(sq.from_first, sq.to_first);
  for (std::size_t i = 0; i < static_cast<std::size_t>(through.arity()); ++i) {
    const auto a = sq.from_first[i].image_mask();
    const auto b = sq.from_second[i].image_mask();
    const auto p = through[i].image_mask();
    for (std::size_t y = 0; y < a.size(); ++y)
      if ((a[y] && b[y]) != p[y]) return false;
  }
  return true;
}

/// Pullback whose two images cover d in every coordinate.
inline bool is_weak_pushout(const Square& sq) {
  return is_pullback(sq) && detail::covers(sq.from_first, sq.from_second);
}

/// The defining universal property, checked by exhaustive search: for every
/// target z with z <= d + extra and every pair (h1, h2) making a pullback
/// square over the same p, exactly one h: d -> z has h o g_i = h_i.
/// Exponential; meant for certifying `is_weak_pushout`.
inline bool satisfies_weak_pushout_property(const Square& sq, int extra = 1,
                                            const Cutoffs& cutoffs = {}) {
  if (!is_pullback(sq)) return false;
  const SizeVector d = sq.from_first.codomain();
  const SizeVector c1 = sq.from_first.domain();
  const SizeVector c2 = sq.from_second.domain();
  const SizeVector top = d + SizeVector::filled(d.arity(), extra);
  require_within(top, cutoffs.oracles, "weak push-out search");
  for (const auto& z : size_box(SizeVector::zeros(d.arity()), top)) {
    const auto maps_from_d = enumerate_injections(d, z, cutoffs);
    const auto first = enumerate_injections(c1, z, cutoffs);
    const auto second = enumerate_injections(c2, z, cutoffs);
    for (const auto& h1 : first) {
      for (const auto& h2 : second) {
        if (!is_pullback({sq.to_first, sq.to_second, h1, h2})) continue;
        int factorizations = 0;
        for (const auto& h : maps_from_d)
          if (compose(h, sq.from_first) == h1 && compose(h, sq.from_second) == h2) ++factorizations;
        if (factorizations != 1) return false;
      }
    }
  }
  return true;
}

/// An element of  Hom(d, x) x_{S_d} PO_d(c1, c2), stored by its canonical
/// representative: the map d -> x is increasing.
struct PushoutClass {
  MultiInjection to_target;  // d -> x
  MultiInjection first;      // c1 -> d
  MultiInjection second;     // c2 -> d

  SizeVector object() const { return to_target.domain(); }
  friend bool operator==(const PushoutClass&, const PushoutClass&) = default;
  friend auto operator<=>(const PushoutClass&, const PushoutClass&) = default;
};

/// [f, (r1, r2)] -> (f o r1, f o r2)
inline std::pair<MultiInjection, MultiInjection> pushout_class_to_pair(const PushoutClass& k) {
  return {compose(k.to_target, k.first), compose(k.to_target, k.second)};
}

/// (f1, f2) -> [f, (r1, r2)]: form the pullback p of (f1, f2), the weak
/// push-out d = c1 +_p c2, the induced f: d -> x, and move to the canonical
/// representative of the S_d-class.
inline PushoutClass pair_to_pushout_class(const MultiInjection& f1, const MultiInjection& f2) {
  if (f1.codomain() != f2.codomain()) throw InputError("pair of maps has different targets");
  std::vector<Injection> to_p1, to_p2, r1, r2, to_x;
  for (std::size_t i = 0; i < static_cast<std::size_t>(f1.arity()); ++i) {
    const Injection& a = f1[i];
    const Injection& b = f2[i];
    const int x = a.codomain();
    // pullback: pairs (s, t) with a(s) = b(t), ordered by s
    std::vector<int> p1, p2;
    for (int s = 0; s < a.domain(); ++s)
      if (int t = b.preimage(a(s)); t >= 0) {
        p1.push_back(s);
        p2.push_back(t);
      }
    to_p1.emplace_back(p1, a.domain());
    to_p2.emplace_back(p2, b.domain());
    // weak push-out: c1, then the points of c2 outside the image of p
    const int c1 = a.domain();
    std::vector<int> second(static_cast<std::size_t>(b.domain()), -1);
    for (std::size_t j = 0; j < p1.size(); ++j) second[static_cast<std::size_t>(p2[j])] = p1[j];
    int next = c1;
    for (auto& y : second)
      if (y < 0) y = next++;
    const int d = next;
    std::vector<int> first(static_cast<std::size_t>(c1));
    for (int s = 0; s < c1; ++s) first[static_cast<std::size_t>(s)] = s;
    // induced map d -> x
    std::vector<int> f(static_cast<std::size_t>(d));
    for (int s = 0; s < c1; ++s) f[static_cast<std::size_t>(s)] = a(s);
    for (int t = 0; t < b.domain(); ++t) f[static_cast<std::size_t>(second[static_cast<std::size_t>(t)])] = b(t);
    // canonical representative: [f, r] = [f o g, g^-1 o r] with f o g increasing
    std::vector<int> order(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) order[static_cast<std::size_t>(j)] = j;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
      return f[static_cast<std::size_t>(u)] < f[static_cast<std::size_t>(v)];
    });
    const Permutation g(order);
    const Permutation g_inv = g.inverse();
    to_x.push_back(compose(Injection(f, x), g));
    r1.push_back(compose(g_inv, Injection(first, d)));
    r2.push_back(compose(g_inv, Injection(second, d)));
  }
  return {MultiInjection(std::move(to_x)), MultiInjection(std::move(r1)), MultiInjection(std::move(r2))};
}

/// Every canonical element of the disjoint union over d of
/// Hom(d, x) x_{S_d} PO_d(c1, c2).
inline std::vector<PushoutClass> pushout_classes(const SizeVector& c1, const SizeVector& c2,
                                                 const SizeVector& x, const Cutoffs& cutoffs = {}) {
  std::vector<PushoutClass> out;
  for (const auto& d : size_box(max(c1, c2), c1 + c2)) {
    if (!d.fits_in(x)) continue;
    const auto po = pushout_pairs(c1, c2, d, cutoffs);
    if (po.empty()) continue;
    for (const auto& f : binomial_set(d, x, cutoffs))
      for (const auto& [r1, r2] : po.pairs()) out.push_back({f, r1, r2});
  }
  return out;
}

}  // namespace repstab
