#include <random>

#include <gtest/gtest.h>

#include "nmfo/decide.hpp"
#include "nmfo/errors.hpp"
#include "nmfo/generate.hpp"
#include "nmfo/schema.hpp"

using namespace nmfo;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Independent truth-table check: every assignment drawn from the carrier.
bool brute_valid(const ChainSpec& c, const Formula& f) {
  const auto atoms = propositional_atoms(f);
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  const auto xs = enumerate(c);
  std::vector<std::size_t> idx(names.size(), 0);
  for (;;) {
    std::map<std::string, Rational> a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = xs[idx[i]];
    if (eval_prop(c, a, f).value() != R(1)) return false;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == xs.size()) idx[k++] = 0;
    if (k == idx.size()) return true;
  }
}

}  // namespace

TEST(PropValid, SpecExamples) {
  EXPECT_TRUE(prop_valid(ChainSpec::nm_finite(5), schema("sn:2")).valid);
  const PropResult r = prop_valid(ChainSpec::nm_finite(6), schema("sn:2"));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(eval_prop(ChainSpec::nm_finite(6), r.counter, schema("sn:2")).value(), r.value);
  EXPECT_LT(r.value, R(1));
  EXPECT_TRUE(prop_valid(ChainSpec::nm_finite(4), schema("bp")).valid);
  EXPECT_FALSE(prop_valid(ChainSpec::nm_finite(5), schema("bp")).valid);
  EXPECT_THROW(prop_valid(ChainSpec::nm_finite(5), parse("forall x. P(x)")), Error);
  EXPECT_THROW(prop_valid(ChainSpec::nm_inf(), parse("p")), Error);
}

TEST(PropValid, SnThresholdPattern) {
  for (int size = 2; size <= 9; ++size)
    for (int n = 1; n <= 3; ++n)
      EXPECT_EQ(prop_valid(ChainSpec::nm_finite(size), schema("sn", {n})).valid, size < 2 * n + 2) << size << " " << n;
}

TEST(PropValid, AgreesWithBruteForceAndSearch) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const ChainSpec c = ChainSpec::nm_finite(3 + i % 3);
    const Formula f = random_formula(rng, prop_gen_options({"p", "q", "r"}, 4));
    const PropResult r = prop_valid(c, f);
    const SearchResult s = search_countermodel(c, f, 1);
    EXPECT_EQ(r.valid, brute_valid(c, f)) << print(f);
    EXPECT_EQ(r.valid, s.status == SearchResult::Status::None) << print(f);
  }
}

TEST(PropValid, GodelChains) {
  EXPECT_TRUE(prop_valid(ChainSpec::g_finite(3), parse("(p -> q) \\/ (q -> p)")).valid);
  EXPECT_TRUE(prop_valid(ChainSpec::g_finite(4), parse("p /\\ ~p -> q")).valid);
  EXPECT_FALSE(prop_valid(ChainSpec::g_finite(3), parse("p \\/ ~p")).valid);
  EXPECT_TRUE(prop_valid(ChainSpec::g_finite(2), parse("p \\/ ~p")).valid);
}

TEST(Search, SpecExamples) {
  EXPECT_EQ(search_countermodel(ChainSpec::nm_finite(4), shifting_law(15), 3).status, SearchResult::Status::None);
  EXPECT_EQ(search_countermodel(ChainSpec::nm_finite(2), schema("cup"), 2).status, SearchResult::Status::None);
  const SearchResult s = search_countermodel(ChainSpec::nm_finite(3), schema("sep:2"), 1);
  ASSERT_EQ(s.status, SearchResult::Status::Found);
  EXPECT_EQ(s.model->value("p1", {}), R(1));
  EXPECT_EQ(s.model->value("p2", {}), R(1, 2));
  EXPECT_EQ(s.model->value("p3", {}), R(0));
  EXPECT_EQ(s.value, R(1, 2));
}

TEST(Search, BudgetIsDistinctFromNone) {
  const SearchResult s = search_countermodel(ChainSpec::nm_finite(4), shifting_law(15), 3, 100);
  EXPECT_EQ(s.status, SearchResult::Status::BudgetExceeded);
  EXPECT_THROW(search_countermodel(ChainSpec::nm_inf(), shifting_law(15), 2), Error);
}

TEST(Classify, SpecExamples) {
  const Classification p = classify_chain(ChainSpec::nm_prime_inf());
  EXPECT_TRUE(p.has_fixpoint);
  EXPECT_FALSE(p.all_have_predecessor);
  for (int i = 1; i <= 14; ++i) EXPECT_EQ(p.laws[i], true) << i;
  for (int i = 15; i <= 18; ++i) EXPECT_EQ(p.laws[i], false) << i;
  EXPECT_EQ(p.cup, false);
  EXPECT_EQ(p.cdown, false);

  const Classification n = classify_chain(ChainSpec::nm_inf());
  EXPECT_TRUE(n.has_fixpoint);
  EXPECT_TRUE(n.all_have_predecessor);
  for (int i = 1; i <= 18; ++i) EXPECT_EQ(n.laws[i], true) << i;
  EXPECT_EQ(n.cup, true);
  EXPECT_EQ(n.cdown, true);

  const Classification f = classify_chain(ChainSpec::nm_finite(4));
  EXPECT_FALSE(f.has_fixpoint);
  for (int i = 1; i <= 18; ++i) EXPECT_EQ(f.laws[i], true) << i;
  EXPECT_EQ(f.sn_threshold, 2);
  EXPECT_EQ(f.bp, true);
  EXPECT_EQ(classify_chain(ChainSpec::nm_finite(5)).bp, false);
}

TEST(Classify, GodelOrderTypes) {
  EXPECT_EQ(classify_chain(ChainSpec::g_up()).cup, true);
  EXPECT_EQ(classify_chain(ChainSpec::g_down()).cup, false);
  EXPECT_EQ(classify_chain(ChainSpec::g_down()).cdown, true);
  EXPECT_EQ(classify_chain(ChainSpec::std_g()).cdown, false);
}
