#include <random>

#include <gtest/gtest.h>

#include "nmfo/errors.hpp"
#include "nmfo/generate.hpp"
#include "nmfo/transform.hpp"

using namespace nmfo;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// |α| = max(α, 1-α); values above go to 1, values below 1-|α| to 0.
Rational ref_cut(const Rational& alpha, const Rational& v) {
  const Rational a = max(alpha, R(1) - alpha);
  if (v > a) return R(1);
  if (v < R(1) - a) return R(0);
  return v;
}

}  // namespace

TEST(Rotate, Chains) {
  EXPECT_EQ(rotate(ChainSpec::g_finite(3), true).chain, ChainSpec::nm_finite(5));
  EXPECT_EQ(rotate(ChainSpec::g_finite(3), false).chain, ChainSpec::nm_finite(4));
  EXPECT_EQ(rotate(ChainSpec::g_up(), true).chain, ChainSpec::nm_inf());
  EXPECT_EQ(rotate(ChainSpec::g_up(), false).chain, ChainSpec::nm_inf_minus());
  EXPECT_EQ(rotate(ChainSpec::g_down(), true).chain, ChainSpec::nm_prime_inf());
  EXPECT_EQ(rotate(ChainSpec::g_down(), false).chain, ChainSpec::nm_prime_inf_minus());
  EXPECT_THROW(rotate(ChainSpec::std_g(), true), ChainError);
  EXPECT_THROW(rotate(ChainSpec::nm_inf(), true), ChainError);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(rotate(ChainSpec::g_finite(n), true).chain.size(), 2 * n - 1);
}

TEST(Rotate, CorrespondenceIsOntoPositives) {
  for (int n = 2; n <= 5; ++n)
    for (bool fix : {true, false}) {
      const ChainSpec g = ChainSpec::g_finite(n);
      const Rotation r = rotate(g, fix);
      EXPECT_EQ(r.correspondence.size(), static_cast<size_t>(n));
      std::set<Rational> image;
      for (const auto& [a, b] : r.correspondence) {
        EXPECT_EQ(rotation_image(g, fix, a), b);
        image.insert(b);
      }
      std::set<Rational> want = {R(0)};
      for (const auto& x : enumerate(r.chain))
        if (is_positive(x)) want.insert(x);
      EXPECT_EQ(image, want);
    }
  EXPECT_EQ(rotation_image(ChainSpec::g_up(), true, R(2, 3)), R(3, 4));
  EXPECT_EQ(rotation_image(ChainSpec::g_down(), true, R(1, 3)), R(2, 3));
}

TEST(Star, Examples) {
  EXPECT_EQ(star(parse("P(x)")), parse("P(x) & P(x)"));
  EXPECT_EQ(star(parse("bot")), parse("bot"));
  EXPECT_EQ(print(star(parse("P(x) -> q")), PrintStyle::Compact), "((P(x)&P(x))->(q&q))&((P(x)&P(x))->(q&q))");
  EXPECT_EQ(star(parse("forall x. P(x)")), Formula::square(parse("forall x. P(x) & P(x)")));
  EXPECT_EQ(star(parse("exists x. P(x)")), star(parse("~forall x. ~P(x)")));
}

TEST(Star, CorrespondenceSmall) {
  std::mt19937_64 rng(8);
  GenOptions opt;
  opt.allow_exists = false;
  for (int n = 2; n <= 4; ++n) {
    const ChainSpec g = ChainSpec::g_finite(n);
    for (int i = 0; i < 100; ++i) {
      const Formula f = random_formula(rng, opt);
      const FiniteModel m = random_model(g, 2, predicate_arities(f), rng);
      for (bool fix : {true, false})
        EXPECT_EQ(rotation_image(g, fix, model_value_raw(m, f)), model_value_raw(rotate_model(m, fix), star(f)));
    }
  }
}

TEST(Cut, ValueExamples) {
  EXPECT_EQ(cut_value(R(3, 4), R(9, 10)), R(1));
  EXPECT_EQ(cut_value(R(3, 4), R(1, 3)), R(1, 3));
  EXPECT_EQ(cut_value(R(1, 4), R(1, 5)), R(0));
  for (int a = 1; a < 10; ++a)
    for (int v = 0; v <= 10; ++v) EXPECT_EQ(cut_value(R(a, 10), R(v, 10)), ref_cut(R(a, 10), R(v, 10)));
}

TEST(Cut, ModelPreconditions) {
  FiniteModel m(ChainSpec::nm_inf(), {"a"});
  m.declare("P", 1);
  m.set("P", std::vector<int>{0}, R(4, 5));
  EXPECT_EQ(cut_model(m, R(3, 4)).value("P", {0}), R(1));
  EXPECT_THROW(cut_model(m, R(0)), Error);
  EXPECT_THROW(cut_model(m, R(1)), Error);
  EXPECT_THROW(cut_model(m, R(2, 5)), Error);
  FiniteModel f(ChainSpec::nm_finite(5), {"a"});
  EXPECT_THROW(cut_model(f, R(1, 2)), Error);
}

TEST(Cut, CommutesWithEvaluation) {
  std::mt19937_64 rng(12);
  for (const char* name : {"nm-inf", "std-nm"}) {
    const ChainSpec c = ChainSpec::parse(name);
    for (int i = 0; i < 200; ++i) {
      const Formula f = random_formula(rng);
      const FiniteModel m = random_model(c, 2, predicate_arities(f), rng);
      Rational alpha;
      do alpha = sample_element(c, rng);
      while (alpha.sign() == 0 || alpha == R(1));
      EXPECT_EQ(model_value_raw(cut_model(m, alpha), f), ref_cut(alpha, model_value_raw(m, f)));
    }
  }
}

TEST(Cut, OmegaTailsClipped) {
  const OmegaModel m(ChainSpec::nm_inf(), {{"P", {{}, {R(1), R(-1), 0}}}}, {});
  const OmegaModel c = cut_model(m, R(3, 4));
  const EventualSeq& s = c.monadic().at("P");
  for (long j = 0; j < 30; ++j) EXPECT_EQ(s.at(j), ref_cut(R(3, 4), R(1) - R(1, j + 1))) << j;
}

TEST(Collapse, Examples) {
  FiniteModel m(ChainSpec::nm_finite(5), {"a", "b", "c", "d", "e"});
  m.declare("P", 1);
  const std::vector<Rational> v = {R(3, 4), R(1, 2), R(1, 4), R(1), R(0)};
  for (int i = 0; i < 5; ++i) m.set("P", std::vector<int>{i}, v[i]);
  const std::vector<Rational> want = {R(3, 4), R(0), R(0), R(1), R(0)};
  EXPECT_EQ(positive_collapse(m).table("P"), want);
  EXPECT_EQ(collapse_value(R(1, 2)), R(0));
}

TEST(Embed, SpecExamples) {
  const ChainEmbedding e = embed_finite(ChainSpec::nm_finite(5), ChainSpec::nm_inf());
  const std::vector<std::pair<Rational, Rational>> want = {
      {R(0), R(0)}, {R(1, 4), R(1, 3)}, {R(1, 2), R(1, 2)}, {R(3, 4), R(2, 3)}, {R(1), R(1)}};
  EXPECT_EQ(e.map, want);
  EXPECT_TRUE(check_embedding(e).ok);
  const ChainEmbedding e3 = embed_finite(ChainSpec::nm_finite(3), ChainSpec::nm_inf());
  const std::vector<std::pair<Rational, Rational>> want3 = {{R(0), R(0)}, {R(1, 2), R(1, 2)}, {R(1), R(1)}};
  EXPECT_EQ(e3.map, want3);
  EXPECT_TRUE(check_embedding(embed_finite(ChainSpec::nm_finite(4), ChainSpec::nm_inf_minus())).ok);
  EXPECT_THROW(embed_finite(ChainSpec::nm_finite(5), ChainSpec::nm_inf_minus()), EmbeddingError);
  EXPECT_THROW(embed_finite(ChainSpec::nm_finite(5), ChainSpec::nm_finite(6)), EmbeddingError);
  EXPECT_THROW(embed_finite(ChainSpec::nm_finite(7), ChainSpec::nm_finite(5)), EmbeddingError);
}

TEST(Embed, PrimedMap) {
  const ChainEmbedding e = embed_finite(ChainSpec::nm_finite(5), ChainSpec::nm_prime_inf());
  EXPECT_EQ(e.apply(R(3, 4)), R(3, 4));
  EXPECT_EQ(e.apply(R(1, 4)), R(1, 4));
  EXPECT_EQ(e.apply(R(1, 2)), R(1, 2));
  EXPECT_TRUE(check_embedding(e).ok);
}

TEST(Embed, RejectsBrokenMaps) {
  const ChainSpec s = ChainSpec::nm_finite(5);
  const ChainEmbedding bad{s, ChainSpec::nm_inf(),
                           {{R(0), R(0)}, {R(1, 4), R(1, 3)}, {R(1, 2), R(1, 2)}, {R(3, 4), R(3, 4)}, {R(1), R(1)}}};
  const EmbeddingCheck chk = check_embedding(bad);
  EXPECT_FALSE(chk.ok);
  EXPECT_FALSE(chk.counterexample.empty());
  const ChainSpec four = ChainSpec::nm_finite(4);
  ChainEmbedding id{four, four, {}};
  for (const auto& x : enumerate(four)) id.map.emplace_back(x, x);
  EXPECT_TRUE(check_embedding(id).ok);
}

TEST(Rehouse, RankMap) {
  FiniteModel m(ChainSpec::nm_inf(), {"a", "b"});
  m.declare("P", 1);
  m.set("P", std::vector<int>{0}, R(1, 3));
  m.set("P", std::vector<int>{1}, R(1));
  const Rehoused r = rehouse_finite(m);
  // closure of {1/3, 1} under negation with 0 and 1: {0, 1/3, 2/3, 1}
  EXPECT_EQ(r.model.chain(), ChainSpec::nm_finite(4));
  EXPECT_EQ(r.rank.at(R(1, 3)), R(1, 3));
  EXPECT_EQ(r.rank.at(R(2, 3)), R(2, 3));
  EXPECT_EQ(r.model.value("P", {0}), R(1, 3));
}
