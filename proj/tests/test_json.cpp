#include <gtest/gtest.h>

#include "repstab/json_io.hpp"

using namespace repstab;
using repstab::json::Json;

namespace {
MultiClass fi(std::vector<int> parts) { return MultiClass{Partition(std::move(parts))}; }
}  // namespace

TEST(Rational, TextForm) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(Rational(-2)), "-2/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("1/-2"), InputError);
  EXPECT_THROW(parse_rational("0.5"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Json, PolynomialCanonicalForm) {
  CharacterPolynomial p(1);
  p.add_term(fi({1, 1}), 2);
  p.add_term(fi({1, 1, 1}), 3);
  p.add_term(MultiClass::empty(1), Rational(-1, 2));
  EXPECT_EQ(json::to_json(p).dump(),
            R"({"m":1,"terms":[{"coeff":"-1/2","mu":[[]]},{"coeff":"2/1","mu":[[1,1]]},{"coeff":"3/1","mu":[[1,1,1]]}]})");
  EXPECT_EQ(json::polynomial_from(json::to_json(p)), p);
  EXPECT_EQ(json::to_json(json::polynomial_from(json::to_json(p))).dump(), json::to_json(p).dump());
}

TEST(Json, PolynomialAcceptsShorthand) {
  const auto j = json::parse(R"({"m":1,"terms":[{"coeff":2,"mu":[2]},{"coeff":"1/3","mu":[[2]]}]})");
  EXPECT_EQ(json::polynomial_from(j), CharacterPolynomial::indicator(fi({2}), Rational(7, 3)));
}

TEST(Json, PolynomialRejectsMalformed) {
  EXPECT_THROW(json::polynomial_from(json::parse(R"({"terms":[]})")), InputError);
  EXPECT_THROW(json::polynomial_from(json::parse(R"({"m":2,"terms":[{"coeff":"1","mu":[1]}]})")), InputError);
  EXPECT_THROW(json::polynomial_from(json::parse(R"({"m":1,"terms":[{"coeff":"1","mu":[1,2]}]})")), InputError);
  EXPECT_THROW(json::polynomial_from(json::parse(R"({"m":1,"terms":[{"coeff":0.5,"mu":[1]}]})")), InputError);
  EXPECT_THROW(json::parse("{"), InputError);
}

TEST(Json, ModuleRoundTrip) {
  VirtualFreeModule m(2);
  m.add(Rational(3, 2), ClassFunction::regular(SizeVector{1, 2}));
  m.add(-1, ClassFunction::trivial(SizeVector{0, 1}));
  const Json j = json::to_json(m);
  EXPECT_EQ(j["summands"][0]["degree"].dump(), "[0,1]");
  EXPECT_EQ(j["summands"][1]["rep"][0].dump(), R"({"class":[[1],[2]],"value":"0/1"})");
  EXPECT_EQ(json::module_from(j), m);
  EXPECT_EQ(json::to_json(json::module_from(j)).dump(), j.dump());
}

TEST(Json, ModuleRejectsIncompleteRep) {
  const auto j = json::parse(
      R"({"m":1,"summands":[{"coeff":"1/1","degree":[2],"rep":[{"class":[[2]],"value":"1/1"}]}]})");
  EXPECT_THROW(json::module_from(j), InputError);
}

TEST(Json, DecompositionRoundTrip) {
  StableDecomposition d{{{fi({}), 1}, {fi({1}), 2}}, SizeVector{4}};
  const Json j = json::to_json(d);
  EXPECT_EQ(j.dump(), R"({"valid_from":[4],"entries":[{"lambda":[[]],"mult":"1/1"},{"lambda":[[1]],"mult":"2/1"}]})");
  const auto back = json::decomposition_from(j);
  EXPECT_EQ(back.entries, d.entries);
  EXPECT_EQ(back.valid_from, d.valid_from);
}
