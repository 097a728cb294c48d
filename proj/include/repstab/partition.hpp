#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "repstab/errors.hpp"

namespace repstab {

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is the canonical one used for every output of the library:
/// smaller size first, then descending lexicographic among partitions of the
/// same size, so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw InputError("partition parts must be positive: " + str());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InputError("partition parts must be weakly decreasing: " + str());
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Sorts arbitrary positive cycle lengths into a partition.
  static Partition from_lengths(std::vector<int> lengths) {
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
  }

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to k.
  int multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // descending lexicographic: the larger sequence comes first
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in canonical (descending lexicographic) order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InputError("partitions_of: negative argument");
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// An object of FI^m: a tuple of set sizes. Order for container keys is
/// lexicographic; the categorical order is `fits_in`.
class SizeVector {
 public:
  SizeVector() = default;
  explicit SizeVector(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_)
      if (c < 0) throw InputError("size vector coordinates must be non-negative");
  }
  SizeVector(std::initializer_list<int> coords) : SizeVector(std::vector<int>(coords)) {}

  static SizeVector filled(int arity, int value) {
    return SizeVector(std::vector<int>(static_cast<std::size_t>(arity), value));
  }
  static SizeVector zeros(int arity) { return filled(arity, 0); }

  int arity() const { return static_cast<int>(coords_.size()); }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const int> coords() const { return coords_; }
  int max_coord() const {
    return coords_.empty() ? 0 : *std::max_element(coords_.begin(), coords_.end());
  }

  /// Coordinatewise <=, i.e. a morphism *this -> bound exists.
  bool fits_in(const SizeVector& bound) const {
    require_same_arity(bound);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] > bound.coords_[i]) return false;
    return true;
  }

  void require_same_arity(const SizeVector& other) const {
    if (arity() != other.arity())
      throw InputError("arity mismatch: " + str() + " vs " + other.str());
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

  friend SizeVector operator+(const SizeVector& a, const SizeVector& b) {
    a.require_same_arity(b);
    std::vector<int> r(a.coords_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.coords_[i];
    return SizeVector(std::move(r));
  }
  friend SizeVector operator*(int k, const SizeVector& a) {
    std::vector<int> r(a.coords_);
    for (int& c : r) c *= k;
    return SizeVector(std::move(r));
  }
  friend SizeVector max(const SizeVector& a, const SizeVector& b) {
    a.require_same_arity(b);
    std::vector<int> r(a.coords_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b.coords_[i]);
    return SizeVector(std::move(r));
  }
  friend bool operator==(const SizeVector&, const SizeVector&) = default;
  friend auto operator<=>(const SizeVector&, const SizeVector&) = default;

 private:
  std::vector<int> coords_;
};

/// Every size vector s with lower <= s <= upper coordinatewise, lexicographic.
inline std::vector<SizeVector> size_box(const SizeVector& lower, const SizeVector& upper) {
  lower.require_same_arity(upper);
  std::vector<SizeVector> out;
  if (!lower.fits_in(upper)) return out;
  std::vector<int> cur(lower.coords().begin(), lower.coords().end());
  const std::size_t m = cur.size();
  while (true) {
    out.emplace_back(cur);
    std::size_t i = m;
    while (i > 0 && cur[i - 1] == upper[i - 1]) {
      cur[i - 1] = lower[i - 1];
      --i;
    }
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

/// A tuple of partitions: a conjugacy class of S_{n(1)} x ... x S_{n(m)}, or
/// the index of an indicator character polynomial.
class MultiClass {
 public:
  MultiClass() = default;
  explicit MultiClass(std::vector<Partition> coords) : coords_(std::move(coords)) {}
  MultiClass(std::initializer_list<Partition> coords) : coords_(coords) {}

  /// The empty class of the trivial group S_0 x ... x S_0.
  static MultiClass empty(int arity) {
    return MultiClass(std::vector<Partition>(static_cast<std::size_t>(arity)));
  }

  int arity() const { return static_cast<int>(coords_.size()); }
  const Partition& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Partition> coords() const { return coords_; }

  SizeVector sizes() const {
    std::vector<int> s;
    s.reserve(coords_.size());
    for (const auto& p : coords_) s.push_back(p.size());
    return SizeVector(std::move(s));
  }

  /// Largest part per coordinate (0 for empty coordinates).
  SizeVector largest_parts() const {
    std::vector<int> s;
    for (const auto& p : coords_) s.push_back(p.largest());
    return SizeVector(std::move(s));
  }

  std::string str() const {
    if (coords_.size() == 1) return coords_[0].str();
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }

  friend bool operator==(const MultiClass&, const MultiClass&) = default;
  /// Size vector first, then coordinatewise canonical partition order.
  friend std::strong_ordering operator<=>(const MultiClass& a, const MultiClass& b) {
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
      if (auto c = a.coords_[i].size() <=> b.coords_[i].size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

 private:
  std::vector<Partition> coords_;
};

/// Conjugacy classes of S_sizes: the Cartesian product of partitions_of over
/// coordinates, lexicographic in the canonical partition order.
inline std::vector<MultiClass> multi_partitions(const SizeVector& sizes) {
  std::vector<std::vector<Partition>> per;
  for (int n : sizes.coords()) per.push_back(partitions_of(n));
  std::vector<MultiClass> out;
  std::vector<Partition> cur(per.size());
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

/// All tuples of partitions with size vector <= bound, in canonical order.
inline std::vector<MultiClass> multi_partitions_up_to(const SizeVector& bound) {
  std::vector<MultiClass> out;
  for (const auto& s : size_box(SizeVector::zeros(bound.arity()), bound))
    for (auto& c : multi_partitions(s)) out.push_back(std::move(c));
  return out;
}

}  // namespace repstab
