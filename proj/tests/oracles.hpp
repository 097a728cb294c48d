#pragma once

// Brute-force reference implementations for the test suite. Nothing here
// calls into the library's enumeration or character code; permutations come
// from std::next_permutation and cycle types are recomputed from scratch.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Parts = std::vector<int>;

inline std::vector<Perm> permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Parts cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  Parts out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline int fixed_points(const Perm& p) {
  int f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i);
  return f;
}

inline int cycles_of_length(const Perm& p, int k) {
  const Parts t = cycle_type(p);
  return static_cast<int>(std::count(t.begin(), t.end(), k));
}

/// Weakly decreasing positive sequences summing to n, by recursion on the
/// largest allowed part.
inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Number of elements of S_n with the given cycle type, by enumeration.
inline long class_size(const Parts& mu, int n) {
  long c = 0;
  for (const auto& p : permutations(n)) c += cycle_type(p) == mu;
  return c;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Hook-length formula.
inline long hook_dimension(const Parts& lambda) {
  long n = std::accumulate(lambda.begin(), lambda.end(), 0L);
  long hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = 0;
      for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      hooks *= arm + leg + 1;
    }
  return factorial(static_cast<int>(n)) / hooks;
}

/// Kostka number K_{lambda, mu}: semistandard tableaux of shape lambda and
/// content mu, filled cell by cell.
inline long kostka(const Parts& lambda, const Parts& mu) {
  std::vector<std::vector<int>> t;
  for (int r : lambda) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<int> left(mu.begin(), mu.end());
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[c];
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (j > 0 && t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] > v) continue;
      if (i > 0 && t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] >= v) continue;
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      --left[static_cast<std::size_t>(v - 1)];
      rec(c + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
  return count;
}

/// Number of subsets S of {0..n-1} with p(S) = S and p restricted to S of
/// cycle type mu.
inline long indicator(const Parts& mu, const Perm& p) {
  const int n = static_cast<int>(p.size());
  const int k = std::accumulate(mu.begin(), mu.end(), 0);
  long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    bool stable = true;
    for (int i = 0; i < n && stable; ++i)
      if ((mask >> i & 1u) && !(mask >> p[static_cast<std::size_t>(i)] & 1u)) stable = false;
    if (!stable) continue;
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) index[static_cast<std::size_t>(i)] = next++;
    Perm restricted(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u)
        restricted[static_cast<std::size_t>(index[static_cast<std::size_t>(i)])] =
            index[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    count += cycle_type(restricted) == mu;
  }
  return count;
}

/// Trace of a permutation on the standard representation: the permutation
/// matrix minus its trivial summand.
inline long standard_trace(const Perm& p) { return fixed_points(p) - 1; }

/// |PO_d(c1, c2)| for FI by inclusion-exclusion over the points missed by
/// both images.
inline long pushout_count(int c1, int c2, int d) {
  auto falling = [](long n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return n < k ? 0 : r;
  };
  long total = 0;
  long binom = 1;
  for (int j = 0; j <= d; ++j) {
    total += (j % 2 ? -1 : 1) * binom * falling(d - j, c1) * falling(d - j, c2);
    binom = binom * (d - j) / (j + 1);
  }
  return total;
}

/// (1/n!) sum over S_n of f(p) g(p), f and g given per permutation.
template <class F, class G>
mpq_class average_product(int n, F&& f, G&& g) {
  mpq_class acc = 0;
  for (const auto& p : permutations(n)) acc += mpq_class(static_cast<long>(f(p))) * mpq_class(static_cast<long>(g(p)));
  acc /= factorial(n);
  return acc;
}

}  // namespace oracle
