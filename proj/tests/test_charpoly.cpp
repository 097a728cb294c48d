#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "repstab/charpoly.hpp"
#include "repstab/ficombinat.hpp"
#include "repstab/xkpoly.hpp"

using namespace repstab;

namespace {

MultiClass fi(std::vector<int> parts) { return MultiClass{Partition(std::move(parts))}; }
MultiClass fi2(std::vector<int> a, std::vector<int> b) {
  return MultiClass{Partition(std::move(a)), Partition(std::move(b))};
}
CharacterPolynomial binom_fixed(int k) { return CharacterPolynomial::indicator(fi(std::vector<int>(static_cast<std::size_t>(k), 1))); }
const CharacterPolynomial X1 = CharacterPolynomial::cycle_count(1, 0, 1);

CharacterPolynomial random_polynomial(std::mt19937& rng, const SizeVector& bound) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  CharacterPolynomial p(bound.arity());
  for (const auto& mu : multi_partitions_up_to(bound)) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    p.add_term(mu, q);
  }
  return p;
}

}  // namespace

TEST(EvalIndicator, Examples) {
  EXPECT_EQ(eval_indicator(MultiClass::empty(1), fi({3, 1})), 1);
  EXPECT_EQ(eval_indicator(fi({2}), fi({2, 2})), 2);
  EXPECT_EQ(eval_indicator(fi({1, 1}), fi({1, 1, 1})), 3);
  EXPECT_EQ(eval_indicator(fi({1, 1, 1}), fi({2, 1})), 0);
  EXPECT_THROW(eval_indicator(fi({1}), fi2({1}, {1})), InputError);
}

TEST(EvalIndicator, MatchesOracle) {
  for (const auto& d : {SizeVector{5}, SizeVector{3, 2}, SizeVector{2, 3}})
    for (const auto& nu : conjugacy_classes(d)) {
      const auto sigma = MultiPermutation::of_cycle_type(nu);
      for (const auto& mu : multi_partitions_up_to(d))
        EXPECT_EQ(eval_indicator(mu, nu), Integer(static_cast<long>(indicator_oracle(mu, sigma))))
            << mu.str() << " at " << nu.str();
    }
}

TEST(CharacterPolynomial, Arithmetic) {
  CharacterPolynomial p = X1 + CharacterPolynomial::constant(1, 2);
  EXPECT_EQ(p.degree(), SizeVector{1});
  EXPECT_EQ((p - p).degree(), SizeVector{0});
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.coefficient(MultiClass::empty(1)), 2);
  EXPECT_THROW(p + CharacterPolynomial(2), InputError);
  EXPECT_THROW(p.add_term(fi2({1}, {}), 1), InputError);
}

TEST(Multiply, BinomialExpansion) {
  for (int k = 1; k <= 4; ++k) {
    const auto lhs = multiply(X1, binom_fixed(k));
    const auto rhs = Rational(k + 1) * binom_fixed(k + 1) + Rational(k) * binom_fixed(k);
    EXPECT_EQ(lhs, rhs) << k;
  }
}

TEST(Multiply, Examples) {
  const auto p = X1 + binom_fixed(2) + CharacterPolynomial::cycle_count(1, 0, 2);
  EXPECT_EQ(multiply(p, CharacterPolynomial::constant(1, 1)), p);
  EXPECT_EQ(multiply(X1, X1), X1 + Rational(2) * binom_fixed(2));
  for (int n = 3; n <= 4; ++n)
    for (const auto& nu : conjugacy_classes(SizeVector{n}))
      EXPECT_EQ(X1.evaluate(nu) * X1.evaluate(nu), (X1 + Rational(2) * binom_fixed(2)).evaluate(nu));
  EXPECT_TRUE(multiply(p, CharacterPolynomial(1)).is_zero());
}

TEST(Multiply, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const SizeVector b = t % 2 ? SizeVector{2} : SizeVector{1};
    const SizeVector b2 = t % 2 ? SizeVector{1, 1} : SizeVector{1, 0};
    const bool two = t >= 15;
    const SizeVector bound = two ? b2 : b;
    const auto p = random_polynomial(rng, bound);
    const auto q = random_polynomial(rng, bound);
    const auto r = random_polynomial(rng, bound);
    EXPECT_EQ(multiply(p, q), multiply(q, p));
    EXPECT_EQ(multiply(multiply(p, q), r), multiply(p, multiply(q, r)));
    EXPECT_EQ(multiply(p, q + r), multiply(p, q) + multiply(p, r));
    EXPECT_TRUE(multiply(p, q).degree().fits_in(p.degree() + q.degree()));
    for (const auto& nu : conjugacy_classes(bound + bound + SizeVector::filled(bound.arity(), 2)))
      EXPECT_EQ(multiply(p, q).evaluate(nu), p.evaluate(nu) * q.evaluate(nu));
  }
}

TEST(IndicatorBasis, FullColumnRank) {
  for (const auto& d : size_box(SizeVector{0}, SizeVector{5})) {
    const auto [rank, cols] = indicator_basis_rank(d);
    EXPECT_EQ(rank, cols) << d.str();
  }
  for (const auto& d : size_box(SizeVector{0, 0}, SizeVector{3, 3})) {
    const auto [rank, cols] = indicator_basis_rank(d);
    EXPECT_EQ(rank, cols) << d.str();
  }
}

TEST(IndicatorBasis, SingleGroupIsTooSmall) {
  // all indicators of degree <= 2 against the classes of S_2 alone
  const auto indicators = multi_partitions_up_to(SizeVector{2});
  ExactSolver s(detail::indicator_matrix(conjugacy_classes(SizeVector{2}), indicators));
  EXPECT_LT(s.rank(), indicators.size());
}

TEST(ExactSolver, Behaviour) {
  ExactSolver s({{2, 1}, {1, 3}, {1, 1}});
  EXPECT_EQ(s.rank(), 2u);
  const std::vector<Rational> b{3, 4, 2};
  EXPECT_EQ(s.solve(b), (std::vector<Rational>{1, 1}));
  const std::vector<Rational> bad{3, 4, 5};
  EXPECT_THROW(s.solve(bad), InconsistentSystem);
  ExactSolver deficient({{1, 2}, {2, 4}});
  EXPECT_THROW(deficient.solve(std::vector<Rational>{1, 2}), InconsistentSystem);
  EXPECT_THROW(ExactSolver({{1, 2}, {1}}), InputError);
}

TEST(Xk, Conversions) {
  EXPECT_EQ(to_xk(CharacterPolynomial::indicator(fi({3}))), XkPolynomial::variable(1, 0, 3));
  EXPECT_EQ(to_xk(CharacterPolynomial::constant(1, 1)), XkPolynomial::constant(1, 1));
  EXPECT_EQ(from_xk(XkPolynomial::constant(1, 1)), CharacterPolynomial::indicator(MultiClass::empty(1)));
  EXPECT_EQ(to_xk(CharacterPolynomial::indicator(fi({2, 1}))),
            XkPolynomial::variable(1, 0, 2) * XkPolynomial::variable(1, 0, 1));
  const auto x1 = XkPolynomial::variable(1, 0, 1);
  EXPECT_EQ(from_xk(x1 * x1), X1 + Rational(2) * binom_fixed(2));
}

TEST(Xk, RoundTripAndEvaluation) {
  std::mt19937 rng(5);
  for (const SizeVector& bound : {SizeVector{4}, SizeVector{2, 2}}) {
    for (int t = 0; t < 5; ++t) {
      const auto p = random_polynomial(rng, bound);
      const auto x = to_xk(p);
      EXPECT_EQ(from_xk(x), p);
      EXPECT_EQ(x.degree(), p.degree());
      for (const auto& nu : conjugacy_classes(bound + SizeVector::filled(bound.arity(), 1)))
        EXPECT_EQ(x.evaluate(nu), p.evaluate(nu));
    }
  }
}

TEST(Expectation, Examples) {
  EXPECT_EQ(expectation(CharacterPolynomial::constant(1, 1), SizeVector{4}), 1);
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= 7; ++n) {
      const auto xk = CharacterPolynomial::cycle_count(1, 0, k);
      EXPECT_EQ(expectation(xk, SizeVector{n}), Rational(1, k));
      if (n <= 6) {
        const Rational brute =
            oracle::average_product(n, [k](const oracle::Perm& p) { return oracle::cycles_of_length(p, k); },
                                    [](const oracle::Perm&) { return 1; });
        EXPECT_EQ(brute, Rational(1, k));
      }
    }
  for (int k = 0; k <= 4; ++k)
    for (const auto& mu : partitions_of(k)) {
      const Rational stable = Rational(class_data(mu, k).class_size) / Rational(factorial(k));
      EXPECT_EQ(stable_expectation(CharacterPolynomial::indicator(MultiClass{mu})), stable);
    }
}

TEST(Inner, Examples) {
  const auto one = CharacterPolynomial::constant(1, 1);
  EXPECT_EQ(stable_inner(one, one), 1);
  EXPECT_EQ(inner(X1, X1, SizeVector{1}), 1);
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(inner(X1, X1, SizeVector{n}), 2);
    EXPECT_EQ(oracle::average_product(n, oracle::fixed_points, oracle::fixed_points), 2);
  }
  const auto a = CharacterPolynomial::cycle_count(2, 0, 1);
  const auto b = CharacterPolynomial::cycle_count(2, 1, 1);
  for (const auto& d : size_box(SizeVector{1, 1}, SizeVector{3, 3})) EXPECT_EQ(inner(a, b, d), 1);
}

TEST(Inner, StabilizesAtDegreeSum) {
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto p = random_polynomial(rng, SizeVector{2});
    const auto q = random_polynomial(rng, SizeVector{3});
    const Rational stable = stable_inner(p, q);
    for (int n = (p.degree() + q.degree())[0]; n <= 8; ++n) EXPECT_EQ(inner(p, q, SizeVector{n}), stable);
    for (int n = p.degree()[0]; n <= 8; ++n) EXPECT_EQ(expectation(p, SizeVector{n}), stable_expectation(p));
  }
}

TEST(FitPolynomial, RejectsNonPolynomialData) {
  // the sign character is not a character polynomial of degree <= 1
  EXPECT_THROW(fit_polynomial(SizeVector{1},
                              [](const MultiClass& nu) {
                                int s = 1;
                                for (int part : nu[0].parts()) s *= part % 2 ? 1 : -1;
                                return Rational(s);
                              }),
               InconsistentSystem);
}
