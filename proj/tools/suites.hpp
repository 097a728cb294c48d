#pragma once

// Invariant suites run by `repstab verify`. Every check is bounded by the
// configured largest coordinate.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "report.hpp"

namespace repstab::cli {

namespace suites {

inline SizeVector one(int n) { return SizeVector{n}; }

inline void symcore(Verification& v, int limit) {
  auto& rows = v.add("row-orthonormality");
  auto& cols = v.add("column-orthogonality");
  for (int n = 0; n <= limit; ++n) {
    const SizeVector g = one(n);
    const auto& table = character_table(g);
    const auto& gc = group_classes(g);
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = 0; b < table.size(); ++b)
        if (inner_product(table[a], table[b]) != (a == b ? 1 : 0)) rows.passed = false;
    for (std::size_t i = 0; i < gc.size(); ++i)
      for (std::size_t j = 0; j < gc.size(); ++j) {
        Rational acc = 0;
        for (const auto& chi : table) acc += chi[i] * chi[j];
        const Rational expected = i == j ? Rational(gc.order / gc.class_sizes[i]) : Rational(0);
        if (acc != expected) cols.passed = false;
      }
    rows.sizes.push_back(g);
    cols.sizes.push_back(g);
  }

  auto& census = v.add("cycle-type-census");
  for (int n = 0; n <= std::min(limit, 7); ++n) {
    const SizeVector g = one(n);
    const auto& gc = group_classes(g);
    std::vector<Integer> counted(gc.size(), 0);
    for (const auto& p : all_permutations(g)) counted[gc.index_of(p.cycle_type())] += 1;
    if (counted != gc.class_sizes) census.passed = false;
    census.sizes.push_back(g);
  }

  auto& product = v.add("product-group-orthonormality");
  for (const auto& g : size_box(SizeVector{0, 0}, SizeVector{std::min(limit, 3), std::min(limit, 3)})) {
    const auto& table = character_table(g);
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = 0; b < table.size(); ++b)
        if (inner_product(table[a], table[b]) != (a == b ? 1 : 0)) product.passed = false;
    product.sizes.push_back(g);
  }
}

inline void ficombinat(Verification& v, int limit) {
  const Cutoffs cut{limit, limit};
  const int oracle_limit = std::min(limit, 5);

  auto& orbits = v.add("binomial-orbits");
  for (int d = 0; d <= std::min(limit, 6); ++d)
    for (int c = 0; c <= d; ++c) {
      const auto all = enumerate_injections(one(c), one(d), cut).size();
      const auto reps = binomial_set(one(c), one(d), cut).size();
      if (Integer(static_cast<long>(reps)) != binomial(d, c) ||
          Integer(static_cast<long>(all)) != binomial(d, c) * factorial(c))
        orbits.passed = false;
      orbits.sizes.push_back(one(d));
    }

  auto& indicators = v.add("indicator-closed-form");
  for (int d = 0; d <= oracle_limit; ++d) {
    for (int k = 0; k <= d; ++k)
      for (const auto& mu : partitions_of(k))
        for (const auto& nu : conjugacy_classes(one(d))) {
          const MultiClass m{mu};
          const auto literal = indicator_oracle(m, MultiPermutation::of_cycle_type(nu), cut);
          if (Integer(static_cast<long>(literal)) != eval_indicator(m, nu)) indicators.passed = false;
        }
    indicators.sizes.push_back(one(d));
  }

  auto& counts = v.add("pushout-count");
  auto& bijection = v.add("pushout-bijection");
  for (int c1 = 0; c1 <= 3; ++c1)
    for (int c2 = 0; c2 <= 3; ++c2)
      for (int x = std::max(c1, c2); x <= std::min(limit, 5); ++x) {
        // pairs covering x, by inclusion-exclusion over the points both miss
        Integer covering = 0;
        for (int j = 0; j <= x; ++j) {
          Integer term = binomial(x, j) * (x - j >= c1 ? factorial(x - j) / factorial(x - j - c1) : Integer(0)) *
                         (x - j >= c2 ? factorial(x - j) / factorial(x - j - c2) : Integer(0));
          covering += j % 2 ? Integer(-term) : term;
        }
        if (Integer(static_cast<long>(pushout_pairs(one(c1), one(c2), one(x), cut).size())) != covering)
          counts.passed = false;
        const auto classes = pushout_classes(one(c1), one(c2), one(x), cut);
        std::map<std::pair<MultiInjection, MultiInjection>, int> hits;
        for (const auto& k : classes) {
          const auto pair = pushout_class_to_pair(k);
          if (pair_to_pushout_class(pair.first, pair.second) != k) bijection.passed = false;
          ++hits[pair];
        }
        const auto f1s = enumerate_injections(one(c1), one(x), cut);
        const auto f2s = enumerate_injections(one(c2), one(x), cut);
        for (const auto& f1 : f1s)
          for (const auto& f2 : f2s)
            if (pushout_class_to_pair(pair_to_pushout_class(f1, f2)) != std::make_pair(f1, f2))
              bijection.passed = false;
        if (hits.size() != classes.size() || hits.size() != f1s.size() * f2s.size()) bijection.passed = false;
        counts.sizes.push_back(one(x));
        bijection.sizes.push_back(one(x));
      }
}

inline void charpoly(Verification& v, int limit) {
  auto& rank = v.add("indicator-basis-rank");
  for (const auto& bound : {one(1), one(2), one(3), one(4), SizeVector{1, 1}, SizeVector{2, 1}, SizeVector{2, 2}}) {
    const auto [r, cols] = indicator_basis_rank(bound);
    if (r != cols) rank.passed = false;
    rank.sizes.push_back(bound);
  }

  auto& product = v.add("product-expansion");
  const auto x = CharacterPolynomial::cycle_count(1, 0, 1);
  for (int k = 1; k <= 4; ++k) {
    auto binom = [](int j) { return CharacterPolynomial::indicator(MultiClass{Partition(std::vector<int>(static_cast<std::size_t>(j), 1))}); };
    if (multiply(x, binom(k)) != Rational(k + 1) * binom(k + 1) + Rational(k) * binom(k)) product.passed = false;
    product.sizes.push_back(one(k + 1));
  }

  auto& expect = v.add("expectation-stability");
  for (int k = 0; k <= 4; ++k)
    for (const auto& mu : partitions_of(k)) {
      const MultiClass m{mu};
      const Rational expected =
          Rational(class_data(mu, k).class_size) / Rational(factorial(k));
      for (int n = k; n <= limit; ++n)
        if (expectation(CharacterPolynomial::indicator(m), one(n)) != expected) expect.passed = false;
    }
  for (int n = 0; n <= limit; ++n) expect.sizes.push_back(one(n));

  auto& inner_check = v.add("inner-product-stabilization");
  std::mt19937 rng(20240601u);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<MultiClass> monomials = multi_partitions_up_to(one(2));
  for (int trial = 0; trial < 5; ++trial) {
    CharacterPolynomial p(1), q(1);
    for (const auto& mu : monomials) {
      p.add_term(mu, coeff(rng));
      q.add_term(mu, coeff(rng));
    }
    if (p.is_zero() || q.is_zero()) continue;
    const Rational stable = stable_inner(p, q);
    for (int n = (p.degree() + q.degree())[0]; n <= limit; ++n)
      if (inner(p, q, one(n)) != stable) inner_check.passed = false;
  }
  for (int n = 0; n <= limit; ++n) inner_check.sizes.push_back(one(n));
}

inline void modcalc(Verification& v, int limit) {
  const Cutoffs cut{limit, limit};
  const int oracle_limit = std::min(limit, 5);

  auto& induction = v.add("induction-oracle");
  for (int c = 0; c <= 2; ++c) {
    std::vector<FiniteGSet> family{FiniteGSet::point(one(c)), FiniteGSet::regular(one(c))};
    for (const auto& h : subgroups(one(c), cut)) family.push_back(FiniteGSet::cosets(one(c), h));
    for (const auto& y : family) {
      const auto chi = ind_character(one(c), y.permutation_character());
      for (int d = c; d <= oracle_limit; ++d)
        if (chi.evaluate_on(one(d)) != induction_oracle(one(c), y, one(d), cut)) induction.passed = false;
    }
  }
  for (int d = 0; d <= oracle_limit; ++d) induction.sizes.push_back(one(d));

  auto& tensors = v.add("tensor-character");
  for (int c1 = 0; c1 <= 2; ++c1)
    for (int c2 = 0; c2 <= 2; ++c2)
      for (const auto& lambda : partitions_of(c1))
        for (const auto& mu : partitions_of(c2)) {
          const auto m = VirtualFreeModule::induction(ClassFunction::irreducible(MultiClass{lambda}));
          const auto n = VirtualFreeModule::induction(ClassFunction::irreducible(MultiClass{mu}));
          const auto t = module_character(tensor(m, n, cut));
          for (int d = 0; d <= std::min(limit, c1 + c2 + 1); ++d) {
            const SizeVector g = one(d);
            if (t.evaluate_on(g) != module_character(m).evaluate_on(g) * module_character(n).evaluate_on(g))
              tensors.passed = false;
          }
        }
  for (int d = 0; d <= std::min(limit, 5); ++d) tensors.sizes.push_back(one(d));

  auto& coinv = v.add("coinvariants-frobenius");
  for (int c = 0; c <= 3; ++c)
    for (const auto& lambda : partitions_of(c)) {
      const auto m = VirtualFreeModule::induction(ClassFunction::irreducible(MultiClass{lambda}));
      const Rational invariant = lambda.length() <= 1 ? 1 : 0;
      for (int d = 0; d <= limit; ++d) {
        const Rational dim = coinvariants_dim(m, one(d));
        if (dim != expectation(module_character(m), one(d))) coinv.passed = false;
        if (dim != (d < c ? Rational(0) : invariant)) coinv.passed = false;
      }
    }
  for (int d = 0; d <= limit; ++d) coinv.sizes.push_back(one(d));

  auto& duals = v.add("dual-involution");
  for (const auto& g : size_box(SizeVector{0, 0}, SizeVector{2, 2}))
    for (const auto& lambda : multi_partitions(g)) {
      const auto m = VirtualFreeModule::induction(ClassFunction::irreducible(lambda));
      if (dual(dual(m)) != m || module_character(dual(m)) != module_character(m)) duals.passed = false;
    }
  duals.sizes.push_back(SizeVector{2, 2});
}

inline void stability(Verification& v, int limit) {
  auto& polys = v.add("stable-character-polynomials");
  for (int k = 0; k <= 3; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const MultiClass l{lambda};
      for (int d = stable_from(l)[0]; d <= limit; ++d)
        if (stable_char_poly(l).evaluate_on(one(d)) != padded_character(l, one(d))) polys.passed = false;
    }
  for (int d = 0; d <= limit; ++d) polys.sizes.push_back(one(d));

  auto& gram = v.add("orthonormality");
  for (const auto& bound : {one(3), SizeVector{1, 1}}) {
    if (!orthonormality_report(bound).is_identity()) gram.passed = false;
    gram.sizes.push_back(bound + bound);
  }

  auto& rebuild = v.add("decomposition-reconstruction");
  for (int c = 0; c <= 2; ++c) {
    const auto m = VirtualFreeModule::induction(ClassFunction::trivial(one(c)));
    const auto dec = stable_decompose(m);
    const auto chi = module_character(m);
    for (int d = dec.valid_from[0]; d <= limit; ++d) {
      if (detail::recombine(dec.entries, one(d)) != chi.evaluate_on(one(d))) rebuild.passed = false;
      for (const auto& [lambda, r] : dec.entries)
        if (inner_product(chi.evaluate_on(one(d)), padded_character(lambda, one(d))) != r) rebuild.passed = false;
    }
  }
  for (int d = 0; d <= limit; ++d) rebuild.sizes.push_back(one(d));
}

}  // namespace suites

inline const std::map<std::string, std::function<void(Verification&, int)>>& suite_table() {
  static const std::map<std::string, std::function<void(Verification&, int)>> table{
      {"symcore", suites::symcore},       {"ficombinat", suites::ficombinat},
      {"charpoly", suites::charpoly},     {"modcalc", suites::modcalc},
      {"stability", suites::stability},
  };
  return table;
}

}  // namespace repstab::cli
