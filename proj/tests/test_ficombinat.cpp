#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "repstab/ficombinat.hpp"
#include "repstab/symcore.hpp"

using namespace repstab;

namespace {

MultiInjection inj(std::vector<int> images, int codomain) {
  return MultiInjection({Injection(std::move(images), codomain)});
}

MultiPermutation perm(std::vector<int> images) { return MultiPermutation({Permutation(std::move(images))}); }

}  // namespace

TEST(Injections, Counts) {
  EXPECT_EQ(enumerate_injections(SizeVector{0}, SizeVector{5}).size(), 1u);
  EXPECT_EQ(enumerate_injections(SizeVector{2}, SizeVector{4}).size(), 12u);
  EXPECT_EQ(enumerate_injections(SizeVector{1, 2}, SizeVector{2, 3}).size(), 12u);
  EXPECT_TRUE(enumerate_injections(SizeVector{3}, SizeVector{2}).empty());
  EXPECT_THROW(enumerate_injections(SizeVector{1}, SizeVector{9}), CutoffExceeded);
  EXPECT_THROW(Injection({0, 0}, 2), InputError);
  EXPECT_THROW(Injection({2}, 2), InputError);
}

TEST(BinomialSet, Counts) {
  EXPECT_EQ(binomial_set(SizeVector{2}, SizeVector{5}).size(), 10u);
  EXPECT_EQ(binomial_set(SizeVector{3}, SizeVector{3}).size(), 1u);
  EXPECT_EQ(binomial_set(SizeVector{1, 1}, SizeVector{2, 2}).size(), 4u);
}

TEST(BinomialSet, FreeActionOrbitCount) {
  for (const auto& d : size_box(SizeVector{0}, SizeVector{6}))
    for (const auto& c : size_box(SizeVector{0}, d)) {
      const Integer lhs = Integer(static_cast<long>(binomial_set(c, d).size())) * group_classes(c).order;
      EXPECT_EQ(lhs, Integer(static_cast<long>(enumerate_injections(c, d).size()))) << c.str() << d.str();
    }
  for (const auto& d : size_box(SizeVector{0, 0}, SizeVector{3, 3}))
    for (const auto& c : size_box(SizeVector{0, 0}, d)) {
      const Integer lhs = Integer(static_cast<long>(binomial_set(c, d).size())) * group_classes(c).order;
      EXPECT_EQ(lhs, Integer(static_cast<long>(enumerate_injections(c, d).size())));
    }
}

TEST(IndicatorOracle, Examples) {
  const MultiClass point{Partition({1})};
  for (const auto& p : oracle::permutations(4))
    EXPECT_EQ(indicator_oracle(point, perm(p)), oracle::fixed_points(p));
  EXPECT_EQ(indicator_oracle(MultiClass{Partition({2, 1})}, perm({1, 0})), 0);
  EXPECT_EQ(indicator_oracle(MultiClass{Partition({2})}, perm({1, 0, 3, 2})), 2);
  EXPECT_THROW(indicator_oracle(point, MultiPermutation::identity(SizeVector{7})), CutoffExceeded);
}

TEST(IndicatorOracle, AgreesWithSubsetOracle) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : oracle::permutations(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& mu : partitions_of(k))
          EXPECT_EQ(indicator_oracle(MultiClass{mu}, perm(p)),
                    oracle::indicator(std::vector<int>(mu.parts().begin(), mu.parts().end()), p));
}

TEST(IndicatorOracle, ClassFunctionOnRandomConjugates) {
  std::mt19937 rng(11);
  for (const SizeVector& d : {SizeVector{6}, SizeVector{3, 3}}) {
    const auto group = all_permutations(d);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (const auto& nu : conjugacy_classes(d)) {
      const MultiPermutation sigma = MultiPermutation::of_cycle_type(nu);
      for (const auto& mu : multi_partitions_up_to(SizeVector::filled(d.arity(), 2))) {
        const long long base = indicator_oracle(mu, sigma);
        for (int t = 0; t < 20; ++t) {
          const auto& g = group[pick(rng)];
          EXPECT_EQ(indicator_oracle(mu, compose(compose(g, sigma), g.inverse())), base);
        }
      }
    }
  }
}

TEST(Pushout, Counts) {
  EXPECT_EQ(pushout_pairs(SizeVector{1}, SizeVector{1}, SizeVector{1}).size(), 1u);
  EXPECT_EQ(pushout_pairs(SizeVector{1}, SizeVector{1}, SizeVector{2}).size(), 2u);
  EXPECT_EQ(pushout_pairs(SizeVector{2}, SizeVector{2}, SizeVector{3}).size(), 24u);
  EXPECT_TRUE(pushout_pairs(SizeVector{1}, SizeVector{1}, SizeVector{3}).empty());
  for (int c1 = 0; c1 <= 3; ++c1)
    for (int c2 = 0; c2 <= 3; ++c2)
      for (int d = 0; d <= 6; ++d)
        EXPECT_EQ(static_cast<long>(pushout_pairs(SizeVector{c1}, SizeVector{c2}, SizeVector{d}).size()),
                  d >= std::max(c1, c2) ? oracle::pushout_count(c1, c2, d) : 0)
            << c1 << c2 << d;
}

TEST(Pushout, ActionsCloseAndCommute) {
  for (const auto& [c1, c2, d] : {std::tuple{SizeVector{2}, SizeVector{2}, SizeVector{3}},
                                  std::tuple{SizeVector{1, 1}, SizeVector{1, 0}, SizeVector{1, 1}},
                                  std::tuple{SizeVector{2}, SizeVector{1}, SizeVector{3}}}) {
    const auto po = pushout_pairs(c1, c2, d);
    const auto gd = all_permutations(d);
    const auto g1 = all_permutations(c1);
    const auto g2 = all_permutations(c2);
    for (std::size_t i = 0; i < po.size(); ++i)
      for (const auto& s : gd)
        for (const auto& h1 : g1)
          for (const auto& h2 : g2)
            EXPECT_EQ(po.left_act(s, po.right_act(i, h1, h2)), po.right_act(po.left_act(s, i), h1, h2));
    // free right action: orbits have |G_c1||G_c2| elements
    EXPECT_EQ(Integer(static_cast<long>(po.orbit_count())) * group_classes(c1).order * group_classes(c2).order,
              Integer(static_cast<long>(po.size())));
  }
}

TEST(WeakPushout, Examples) {
  const MultiInjection id1 = inj({0}, 1);
  EXPECT_TRUE(is_weak_pushout({id1, id1, id1, id1}));
  EXPECT_TRUE(satisfies_weak_pushout_property({id1, id1, id1, id1}));

  const MultiInjection empty = inj({}, 1);
  const Square into2{empty, empty, inj({0}, 2), inj({1}, 2)};
  EXPECT_TRUE(is_weak_pushout(into2));
  EXPECT_TRUE(satisfies_weak_pushout_property(into2, 2));

  const Square into3{empty, empty, inj({0}, 3), inj({1}, 3)};
  EXPECT_TRUE(is_pullback(into3));
  EXPECT_FALSE(is_weak_pushout(into3));
  EXPECT_FALSE(satisfies_weak_pushout_property(into3));

  const Square bad{empty, empty, inj({0}, 2), inj({0}, 2)};
  EXPECT_FALSE(is_pullback(bad));
  EXPECT_THROW(is_pullback({empty, empty, inj({0}, 2), inj({0}, 3)}), InputError);
}

TEST(WeakPushout, SetTestMatchesUniversalProperty) {
  // every pullback square over p with small sources into d
  for (int d = 0; d <= 3; ++d)
    for (int c1 = 0; c1 <= d; ++c1)
      for (int c2 = 0; c2 <= d; ++c2)
        for (const auto& g1 : enumerate_injections(SizeVector{c1}, SizeVector{d}))
          for (const auto& g2 : enumerate_injections(SizeVector{c2}, SizeVector{d})) {
            // the pullback square of (g1, g2) with increasing p-maps
            std::vector<int> a, b;
            for (int s = 0; s < c1; ++s)
              if (int t = g2[0].preimage(g1[0](s)); t >= 0) {
                a.push_back(s);
                b.push_back(t);
              }
            const Square sq{inj(a, c1), inj(b, c2), g1, g2};
            ASSERT_TRUE(is_pullback(sq));
            EXPECT_EQ(is_weak_pushout(sq), satisfies_weak_pushout_property(sq));
          }
}

TEST(PushoutBijection, BijectionSmall) {
  const SizeVector c1{1}, c2{2}, x{3};
  const auto classes = pushout_classes(c1, c2, x);
  std::set<std::pair<MultiInjection, MultiInjection>> images;
  for (const auto& k : classes) {
    const auto pair = pushout_class_to_pair(k);
    EXPECT_EQ(pair_to_pushout_class(pair.first, pair.second), k);
    images.insert(pair);
  }
  EXPECT_EQ(images.size(), classes.size());
  EXPECT_EQ(classes.size(), enumerate_injections(c1, x).size() * enumerate_injections(c2, x).size());
}

TEST(PushoutBijection, TwoCoordinates) {
  const SizeVector c1{1, 1}, c2{1, 0}, x{2, 2};
  const auto classes = pushout_classes(c1, c2, x);
  EXPECT_EQ(classes.size(), enumerate_injections(c1, x).size() * enumerate_injections(c2, x).size());
  for (const auto& f1 : enumerate_injections(c1, x))
    for (const auto& f2 : enumerate_injections(c2, x)) {
      const auto k = pair_to_pushout_class(f1, f2);
      EXPECT_TRUE(k.to_target.is_increasing());
      EXPECT_EQ(pushout_class_to_pair(k), std::make_pair(f1, f2));
    }
}
