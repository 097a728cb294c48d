#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "repstab/memo.hpp"
#include "repstab/partition.hpp"
#include "repstab/permutation.hpp"
#include "repstab/symcore.hpp"

using namespace repstab;

namespace {

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

ClassFunction fixed_points(int n) {
  return ClassFunction::from(SizeVector{n}, [](const MultiClass& mu) { return Rational(mu[0].multiplicity(1)); });
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), InputError);
  EXPECT_THROW(Partition({2, 0}), InputError);
  EXPECT_EQ(Partition::from_lengths({1, 3, 1}), Partition({3, 1, 1}));
  EXPECT_EQ(Partition({3, 1, 1}).multiplicity(1), 2);
  EXPECT_EQ(Partition({3, 1, 1}).str(), "(3,1,1)");
}

TEST(Partition, CountsMatchOracle) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0).front().empty());
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
  for (int n = 0; n <= 12; ++n) {
    const auto expected = oracle::partitions(n);
    const auto got = partitions_of(n);
    ASSERT_EQ(got.size(), expected.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(parts_of(got[i]), expected[i]);
  }
}

TEST(SizeVector, OrderAndBox) {
  EXPECT_TRUE(SizeVector({1, 2}).fits_in(SizeVector{2, 2}));
  EXPECT_FALSE(SizeVector({3, 0}).fits_in(SizeVector{2, 2}));
  EXPECT_EQ(size_box(SizeVector{0, 0}, SizeVector{1, 2}).size(), 6u);
  EXPECT_THROW(SizeVector({1}).require_same_arity(SizeVector{1, 1}), InputError);
  EXPECT_EQ(max(SizeVector{1, 3}, SizeVector{2, 0}), (SizeVector{2, 3}));
  EXPECT_THROW(SizeVector({-1}), InputError);
}

TEST(ClassData, SizesMatchEnumeration) {
  EXPECT_EQ(class_data(Partition({2, 1}), 3).class_size, 3);
  EXPECT_EQ(class_data(Partition({1, 1, 1, 1}), 4).class_size, 1);
  EXPECT_EQ(class_data(Partition({5}), 5).class_size, 24);
  EXPECT_THROW(class_data(Partition({2}), 3), InputError);
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      EXPECT_EQ(class_data(mu, n).class_size, oracle::class_size(parts_of(mu), n)) << mu.str();
}

TEST(ConjugacyClasses, ProductCounts) {
  EXPECT_EQ(conjugacy_classes(SizeVector{2, 2}).size(), 4u);
  EXPECT_EQ(conjugacy_classes(SizeVector{3}).size(), 3u);
  EXPECT_EQ(conjugacy_classes(SizeVector{4, 3}).size(), 15u);
  for (const SizeVector& g : {SizeVector{5}, SizeVector{3, 2}, SizeVector{2, 2, 1}}) {
    const auto& gc = group_classes(g);
    Integer sum = 0;
    for (const auto& s : gc.class_sizes) sum += s;
    EXPECT_EQ(sum, gc.order);
  }
}

TEST(Characters, Examples) {
  EXPECT_EQ(irreducible_character(Partition({2, 1}), Partition({3})), -1);
  EXPECT_EQ(irreducible_character(Partition({3, 1}), Partition({1, 1, 1, 1})), 3);
  for (const auto& mu : partitions_of(5)) EXPECT_EQ(irreducible_character(Partition({5}), mu), 1);
}

TEST(Characters, StandardRepresentationTrace) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : oracle::permutations(n)) {
      const Partition mu = Partition::from_lengths(oracle::cycle_type(p));
      EXPECT_EQ(irreducible_character(Partition({n - 1, 1}), mu), oracle::standard_trace(p));
    }
}

TEST(Characters, DimensionsMatchHookLength) {
  for (int n = 1; n <= 8; ++n) {
    const Partition identity = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    long total = 0;
    for (const auto& lambda : partitions_of(n)) {
      const long long dim = irreducible_character(lambda, identity);
      EXPECT_EQ(dim, oracle::hook_dimension(parts_of(lambda))) << lambda.str();
      total += static_cast<long>(dim * dim);
    }
    EXPECT_EQ(total, oracle::factorial(n));
  }
}

TEST(Characters, ColumnOrthogonality) {
  for (int n = 1; n <= 7; ++n) {
    const auto classes = partitions_of(n);
    for (const auto& mu : classes)
      for (const auto& nu : classes) {
        long long s = 0;
        for (const auto& lambda : classes) s += irreducible_character(lambda, mu) * irreducible_character(lambda, nu);
        if (mu == nu)
          EXPECT_EQ(Integer(static_cast<long>(s)), class_data(mu, n).centralizer);
        else
          EXPECT_EQ(s, 0);
      }
  }
}

TEST(Characters, ProductGroup) {
  const MultiClass lambda{Partition({2, 1}), Partition({1, 1})};
  const MultiClass mu{Partition({3}), Partition({2})};
  EXPECT_EQ(irreducible_character(lambda, mu), -1 * -1);
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(fixed_points(4), fixed_points(4)), 2);
  EXPECT_EQ(oracle::average_product(4, oracle::fixed_points, oracle::fixed_points), 2);
  const auto chi21 = ClassFunction::irreducible(MultiClass{Partition({2, 1})});
  const auto chi3 = ClassFunction::irreducible(MultiClass{Partition({3})});
  EXPECT_EQ(inner_product(chi21, chi21), 1);
  EXPECT_EQ(inner_product(chi21, chi3), 0);
  EXPECT_THROW(inner_product(chi21, fixed_points(4)), InputError);
}

TEST(Decompose, Examples) {
  const auto chi21 = ClassFunction::irreducible(MultiClass{Partition({2, 1})});
  EXPECT_EQ(decompose(chi21), (std::map<MultiClass, Rational>{{MultiClass{Partition({2, 1})}, 1}}));

  const std::map<MultiClass, Rational> regular{{MultiClass{Partition({3})}, 1},
                                               {MultiClass{Partition({2, 1})}, 2},
                                               {MultiClass{Partition({1, 1, 1})}, 1}};
  EXPECT_EQ(decompose(ClassFunction::regular(SizeVector{3})), regular);

  const std::map<MultiClass, Rational> transposition{{MultiClass{Partition({2})}, Rational(1, 2)},
                                                     {MultiClass{Partition({1, 1})}, Rational(-1, 2)}};
  EXPECT_EQ(decompose(ClassFunction::indicator(MultiClass{Partition({2})})), transposition);
}

TEST(Decompose, RoundTripOnRandomClassFunctions) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (const SizeVector& g : {SizeVector{4}, SizeVector{7}, SizeVector{3, 2}, SizeVector{2, 2, 2}}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ClassFunction f = ClassFunction::from(g, [&](const MultiClass&) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        return q;
      });
      EXPECT_EQ(reconstruct(g, decompose(f)), f);
    }
  }
}

TEST(Permutation, CycleTypesAgreeWithOracle) {
  for (int n = 0; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    EXPECT_EQ(perms.size(), static_cast<std::size_t>(oracle::factorial(n)));
    for (const auto& p : perms) EXPECT_EQ(parts_of(p.cycle_type()), oracle::cycle_type(p.images()));
  }
  for (const auto& mu : partitions_of(6)) EXPECT_EQ(Permutation::of_cycle_type(mu).cycle_type(), mu);
  EXPECT_THROW(Permutation({0, 0}), InputError);
}

TEST(Memo, ComputesOnce) {
  Memo<int, int> memo;
  int calls = 0;
  EXPECT_EQ(memo.get(3, [&] { return ++calls * 10; }), 10);
  EXPECT_EQ(memo.get(3, [&] { return ++calls * 10; }), 10);
  EXPECT_EQ(calls, 1);
}
