#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/partition.hpp"

namespace repstab {

/// A permutation of {0, ..., n-1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
        throw InputError("not a permutation");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(v));
  }

  Partition cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return Partition::from_lengths(std::move(lengths));
  }

  /// Canonical element of the class: consecutive cycles (0 .. mu1-1)(mu1 ..) ...
  static Permutation of_cycle_type(const Partition& mu) {
    std::vector<int> v(static_cast<std::size_t>(mu.size()));
    int start = 0;
    for (int len : mu.parts()) {
      for (int j = 0; j < len; ++j) v[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
      start += len;
    }
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// a o b: apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InputError("composing permutations of different degrees");
  std::vector<int> v(static_cast<std::size_t>(b.size()));
  for (int i = 0; i < b.size(); ++i) v[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(v));
}

/// All permutations of {0..n-1} in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// An element of S_{n(1)} x ... x S_{n(m)}.
class MultiPermutation {
 public:
  MultiPermutation() = default;
  explicit MultiPermutation(std::vector<Permutation> coords) : coords_(std::move(coords)) {}

  static MultiPermutation identity(const SizeVector& sizes) {
    std::vector<Permutation> c;
    for (int n : sizes.coords()) c.push_back(Permutation::identity(n));
    return MultiPermutation(std::move(c));
  }
  static MultiPermutation of_cycle_type(const MultiClass& mu) {
    std::vector<Permutation> c;
    for (const auto& p : mu.coords()) c.push_back(Permutation::of_cycle_type(p));
    return MultiPermutation(std::move(c));
  }

  int arity() const { return static_cast<int>(coords_.size()); }
  const Permutation& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Permutation>& coords() const { return coords_; }

  SizeVector sizes() const {
    std::vector<int> s;
    for (const auto& p : coords_) s.push_back(p.size());
    return SizeVector(std::move(s));
  }
  MultiClass cycle_type() const {
    std::vector<Partition> c;
    for (const auto& p : coords_) c.push_back(p.cycle_type());
    return MultiClass(std::move(c));
  }
  MultiPermutation inverse() const {
    std::vector<Permutation> c;
    for (const auto& p : coords_) c.push_back(p.inverse());
    return MultiPermutation(std::move(c));
  }

  friend bool operator==(const MultiPermutation&, const MultiPermutation&) = default;
  friend auto operator<=>(const MultiPermutation&, const MultiPermutation&) = default;

 private:
  std::vector<Permutation> coords_;
};

inline MultiPermutation compose(const MultiPermutation& a, const MultiPermutation& b) {
  if (a.arity() != b.arity()) throw InputError("composing multipermutations of different arity");
  std::vector<Permutation> c;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.arity()); ++i) c.push_back(compose(a[i], b[i]));
  return MultiPermutation(std::move(c));
}

/// Every element of S_sizes, lexicographic in the coordinates.
inline std::vector<MultiPermutation> all_permutations(const SizeVector& sizes) {
  std::vector<std::vector<Permutation>> per;
  for (int n : sizes.coords()) per.push_back(all_permutations(n));
  std::vector<MultiPermutation> out;
  std::vector<Permutation> cur(per.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == per.size()) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& p : per[i]) {
      cur[i] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// An injective map {0..domain-1} -> {0..codomain-1}, stored as its image list.
class Injection {
 public:
  Injection() = default;
  Injection(std::vector<int> images, int codomain) : images_(std::move(images)), codomain_(codomain) {
    std::vector<bool> seen(static_cast<std::size_t>(std::max(codomain_, 0)), false);
    for (int x : images_) {
      if (x < 0 || x >= codomain_ || seen[static_cast<std::size_t>(x)])
        throw InputError("not an injection into " + std::to_string(codomain_));
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  static Injection identity(int n) {
    const auto p = Permutation::identity(n);
    return Injection(p.images(), n);
  }

  int domain() const { return static_cast<int>(images_.size()); }
  int codomain() const { return codomain_; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  std::vector<bool> image_mask() const {
    std::vector<bool> m(static_cast<std::size_t>(codomain_), false);
    for (int x : images_) m[static_cast<std::size_t>(x)] = true;
    return m;
  }
  bool is_increasing() const { return std::is_sorted(images_.begin(), images_.end()); }
  /// Position of y in the image, or -1.
  int preimage(int y) const {
    auto it = std::find(images_.begin(), images_.end(), y);
    return it == images_.end() ? -1 : static_cast<int>(it - images_.begin());
  }

  friend bool operator==(const Injection&, const Injection&) = default;
  friend auto operator<=>(const Injection&, const Injection&) = default;

 private:
  std::vector<int> images_;
  int codomain_ = 0;
};

/// g o f
inline Injection compose(const Injection& g, const Injection& f) {
  if (f.codomain() != g.domain()) throw InputError("injections do not compose");
  std::vector<int> v;
  for (int x : f.images()) v.push_back(g(x));
  return Injection(std::move(v), g.codomain());
}
/// sigma o f
inline Injection compose(const Permutation& sigma, const Injection& f) {
  if (f.codomain() != sigma.size()) throw InputError("permutation does not act on the codomain");
  std::vector<int> v;
  for (int x : f.images()) v.push_back(sigma(x));
  return Injection(std::move(v), f.codomain());
}
/// f o psi
inline Injection compose(const Injection& f, const Permutation& psi) {
  if (f.domain() != psi.size()) throw InputError("permutation does not act on the domain");
  std::vector<int> v;
  for (int x : psi.images()) v.push_back(f(x));
  return Injection(std::move(v), f.codomain());
}

/// A morphism of FI^m: one injection per coordinate.
class MultiInjection {
 public:
  MultiInjection() = default;
  explicit MultiInjection(std::vector<Injection> coords) : coords_(std::move(coords)) {}

  static MultiInjection identity(const SizeVector& sizes) {
    std::vector<Injection> c;
    for (int n : sizes.coords()) c.push_back(Injection::identity(n));
    return MultiInjection(std::move(c));
  }

  int arity() const { return static_cast<int>(coords_.size()); }
  const Injection& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Injection>& coords() const { return coords_; }

  SizeVector domain() const {
    std::vector<int> s;
    for (const auto& f : coords_) s.push_back(f.domain());
    return SizeVector(std::move(s));
  }
  SizeVector codomain() const {
    std::vector<int> s;
    for (const auto& f : coords_) s.push_back(f.codomain());
    return SizeVector(std::move(s));
  }
  bool is_increasing() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Injection& f) { return f.is_increasing(); });
  }

  friend bool operator==(const MultiInjection&, const MultiInjection&) = default;
  friend auto operator<=>(const MultiInjection&, const MultiInjection&) = default;

 private:
  std::vector<Injection> coords_;
};

namespace detail {
template <class A, class B>
MultiInjection compose_coordinates(const A& a, const B& b) {
  if (a.arity() != b.arity()) throw InputError("composing maps of different arity");
  std::vector<Injection> c;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.arity()); ++i) c.push_back(compose(a[i], b[i]));
  return MultiInjection(std::move(c));
}
}  // namespace detail

inline MultiInjection compose(const MultiInjection& g, const MultiInjection& f) {
  return detail::compose_coordinates(g, f);
}
inline MultiInjection compose(const MultiPermutation& sigma, const MultiInjection& f) {
  return detail::compose_coordinates(sigma, f);
}
inline MultiInjection compose(const MultiInjection& f, const MultiPermutation& psi) {
  return detail::compose_coordinates(f, psi);
}

}  // namespace repstab
