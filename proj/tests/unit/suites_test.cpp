#include <gtest/gtest.h>

#include "nmfo/errors.hpp"
#include "nmfo/schema.hpp"
#include "nmfo/suites.hpp"

using namespace nmfo;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

void expect_witnesses_reproduce(const VerdictReport& r) {
  for (const auto& c : r.claims) {
    if (!c.pass) {
      EXPECT_TRUE(c.witness.has_value()) << c.id;
    }
    if (c.witness && !c.witness->model.empty()) {
      EXPECT_EQ(reevaluate(*c.witness), c.witness->value) << c.id;
    }
  }
}

}  // namespace

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 9u);
  EXPECT_THROW(verify_suite("nope"), Error);
}

TEST(Suites, SnBpPasses) {
  const VerdictReport r = verify_suite("sn-bp");
  EXPECT_EQ(r.claims.size(), 32u);
  EXPECT_TRUE(r.pass());
  expect_witnesses_reproduce(r);
}

TEST(Suites, SeparationsRecordIndexing) {
  const VerdictReport r = verify_suite("separations");
  EXPECT_TRUE(r.pass());
  EXPECT_FALSE(r.notes.empty());
  expect_witnesses_reproduce(r);
}

TEST(Suites, ShiftingWitnessesReproduce) {
  const VerdictReport r = verify_suite("shifting", {1, 20});
  expect_witnesses_reproduce(r);
  for (const auto& c : r.claims)
    if (c.id == "law15/nm-prime-inf/witness") {
      EXPECT_TRUE(c.pass);
      EXPECT_EQ(c.observed, "1/2");
    }
}

TEST(Suites, SmallSampledSuitesPass) {
  for (const char* name : {"order-type", "rotation-star", "cut", "collapse", "tautinc"}) {
    const VerdictReport r = verify_suite(name, {7, 10});
    EXPECT_TRUE(r.pass()) << name;
    expect_witnesses_reproduce(r);
  }
}

TEST(Suites, DeterministicJson) {
  const auto a = to_json(verify_suite("cut", {3, 15})).dump();
  const auto b = to_json(verify_suite("cut", {3, 15})).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(to_json(verify_suite("cut", {3, 5}), true).dump().find("elapsed_ms"), std::string::npos);
}

TEST(Witnesses, Constructed) {
  EXPECT_EQ(eval_omega(star_countermodel(), schema("star")).value, R(1, 2));
  for (const char* name : {"nm-prime-inf", "std-nm", "a:3/4"}) {
    const ChainSpec c = ChainSpec::parse(name);
    for (int law = 15; law <= 18; ++law) {
      const OmegaValue v = eval_omega(shifting_witness(c, law), shifting_law(law));
      ASSERT_TRUE(v.ok()) << name << " " << law;
      EXPECT_EQ(v.value, R(1, 2)) << name << " " << law;
    }
    EXPECT_LT(eval_omega(order_type_witness(c, true), schema("cup")).value, R(1));
    EXPECT_LT(eval_omega(order_type_witness(c, false), schema("cdown")).value, R(1));
  }
  EXPECT_EQ(eval_omega(order_type_witness(ChainSpec::g_down(), true), schema("cup")).value, R(0));
  EXPECT_THROW(order_type_witness(ChainSpec::g_down(), false), ModelError);
  EXPECT_THROW(shifting_witness(ChainSpec::nm_inf(), 15), ModelError);
}
