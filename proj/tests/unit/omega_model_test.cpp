#include <random>

#include <gtest/gtest.h>

#include "nmfo/errors.hpp"
#include "nmfo/model_io.hpp"
#include "nmfo/omega_model.hpp"
#include "nmfo/schema.hpp"
#include "nmfo/suites.hpp"

using namespace nmfo;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

EventualSeq tail(const Rational& base, const Rational& coeff, long shift = 0) { return {{}, {base, coeff, shift}}; }

Rational scalar(const ChainSpec& c, SeqOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case SeqOp::TNorm: return tnorm(c, x, y);
    case SeqOp::Residuum: return residuum(c, x, y);
    case SeqOp::Min: return min(x, y);
    case SeqOp::Max: return max(x, y);
    case SeqOp::Negation: return negation(c, x);
  }
  return x;
}

// Minimum over the first k indices: an upper bound on the infimum.
Rational prefix_min(const EventualSeq& s, long k) {
  Rational m = s.at(0);
  for (long j = 1; j < k; ++j) m = min(m, s.at(j));
  return m;
}

}  // namespace

TEST(Seq, SpecExamples) {
  const auto c = ChainSpec::nm_prime_inf();
  EXPECT_EQ(seq_negate(c, tail(R(1, 2), R(1, 2))), tail(R(1, 2), R(-1, 2)));
  EXPECT_EQ(seq_apply(c, SeqOp::TNorm, tail(R(1, 2), R(1, 2)), EventualSeq::constant(R(1, 2))),
            EventualSeq::constant(R(1, 2)));

  const EventualSeq m = seq_apply(ChainSpec::nm_inf(), SeqOp::Min, tail(R(0), R(1)), EventualSeq::constant(R(1, 4)));
  const std::map<long, Rational> want = {{0, R(1, 4)}, {1, R(1, 4)}, {2, R(1, 4)}};
  EXPECT_EQ(m.exceptions, want);
  for (long j = 3; j < 40; ++j) EXPECT_EQ(m.at(j), R(1, j + 1));
}

TEST(Seq, InfSupExamples) {
  EXPECT_EQ(seq_inf(ChainSpec::nm_inf(), tail(R(0), R(1))), R(0));
  EXPECT_FALSE(seq_inf(ChainSpec::nm_prime_inf_minus(), tail(R(1, 2), R(1, 2))).has_value());
  EXPECT_EQ(seq_inf(ChainSpec::nm_prime_inf(), tail(R(1, 2), R(1, 2))), R(1, 2));
  EXPECT_EQ(seq_sup(ChainSpec::nm_prime_inf(), tail(R(1, 2), R(-1, 2))), R(1, 2));
  EXPECT_FALSE(seq_sup(ChainSpec::nm_prime_inf_minus(), tail(R(1, 2), R(-1, 2))).has_value());
  // attained
  EXPECT_EQ(seq_inf(ChainSpec::nm_inf(), tail(R(1), R(-1), 1)), R(1, 2));
  EXPECT_EQ(seq_sup(ChainSpec::nm_inf(), tail(R(0), R(1))), R(1));
  EventualSeq e = tail(R(1), R(-1), 1);
  e.exceptions[4] = R(1, 3);
  EXPECT_EQ(seq_inf(ChainSpec::nm_inf(), e), R(1, 3));
}

TEST(Seq, Membership) {
  EXPECT_TRUE(seq_in_chain(ChainSpec::nm_inf(), tail(R(0), R(1))));
  EXPECT_TRUE(seq_in_chain(ChainSpec::nm_inf(), tail(R(1), R(-1), 2)));
  EXPECT_FALSE(seq_in_chain(ChainSpec::nm_inf(), tail(R(0), R(2))));
  EXPECT_FALSE(seq_in_chain(ChainSpec::nm_inf_minus(), tail(R(0), R(1), 1)));
  EXPECT_TRUE(seq_in_chain(ChainSpec::nm_inf_minus(), tail(R(0), R(1), 2)));
  EXPECT_TRUE(seq_in_chain(ChainSpec::nm_prime_inf(), tail(R(1, 2), R(1, 2))));
  EXPECT_FALSE(seq_in_chain(ChainSpec::nm_prime_inf(), tail(R(1, 2), R(1, 3))));
  EXPECT_TRUE(seq_in_chain(ChainSpec::parse("a:3/4"), tail(R(1, 2), R(1, 4))));
  EXPECT_FALSE(seq_in_chain(ChainSpec::parse("a:3/4"), tail(R(1, 2), R(1, 2))));
  EXPECT_THROW(OmegaModel(ChainSpec::nm_inf(), {{"P", tail(R(0), R(2))}}, {}), ModelError);
  EXPECT_THROW(OmegaModel(ChainSpec::parse("nm3"), {}, {}), ModelError);
}

TEST(Seq, PointwiseSoundness) {
  std::mt19937_64 rng(17);
  const std::vector<SeqOp> ops = {SeqOp::TNorm, SeqOp::Residuum, SeqOp::Min, SeqOp::Max, SeqOp::Negation};
  int checked = 0;
  for (const char* name : {"nm-inf", "nm-inf-minus", "nm-prime-inf", "nm-prime-inf-minus", "std-nm"}) {
    const auto c = ChainSpec::parse(name);
    for (int i = 0; i < 100; ++i) {
      const OmegaModel m = random_omega_model(c, {{"P", 1}, {"Q", 1}}, rng);
      const SeqOp op = ops[static_cast<std::size_t>(i) % ops.size()];
      const EventualSeq& a = m.monadic().at("P");
      const EventualSeq& b = m.monadic().at("Q");
      const EventualSeq r = seq_apply(c, op, a, b);
      for (int k = 0; k < 100; ++k) {
        const long j = k < 50 ? k : std::uniform_int_distribution<long>(0, 100000)(rng);
        ASSERT_EQ(r.at(j), scalar(c, op, a.at(j), b.at(j))) << name << " j=" << j;
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, 500);
}

TEST(Seq, TruncationBoundsInfimum) {
  std::mt19937_64 rng(23);
  for (const char* name : {"nm-inf", "nm-prime-inf", "std-nm"}) {
    const auto c = ChainSpec::parse(name);
    for (int i = 0; i < 50; ++i) {
      const EventualSeq s = random_omega_model(c, {{"P", 1}}, rng).monadic().at("P");
      const auto inf = seq_inf(c, s);
      if (!inf) continue;
      Rational prev = prefix_min(s, 1);
      for (long k : {10L, 100L, 1000L}) {
        const Rational pm = prefix_min(s, k);
        EXPECT_LE(pm, prev);
        EXPECT_GE(pm, *inf);
        prev = pm;
      }
    }
  }
}

TEST(EvalOmega, SpecExamples) {
  const OmegaModel star = OmegaModel(ChainSpec::nm_prime_inf(), {{"P", tail(R(1, 2), R(1, 2))}}, {{"q", R(1, 2)}});
  EXPECT_EQ(eval_omega(star, schema("star")).value, R(1, 2));
  const OmegaModel inf = OmegaModel(ChainSpec::nm_inf(), {{"P", tail(R(0), R(1))}}, {{"q", R(1, 3)}});
  const OmegaValue v = eval_omega(inf, schema("star"));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.value, R(1));
  const OmegaModel down = OmegaModel(ChainSpec::nm_prime_inf(), {{"P", tail(R(1, 2), R(-1, 2))}}, {});
  EXPECT_EQ(eval_omega(down, schema("cdown")).value, R(1, 2));
}

TEST(EvalOmega, UnsafeAndUnsupported) {
  const OmegaModel m = OmegaModel(ChainSpec::nm_prime_inf_minus(), {{"P", tail(R(1, 2), R(1, 2))}}, {});
  EXPECT_EQ(eval_omega(m, parse("forall x. P(x)")).status, OmegaValue::Status::Unsafe);
  EXPECT_EQ(eval_omega(m, parse("forall x. forall y. P(x) -> P(y)")).status, OmegaValue::Status::Unsupported);
}

TEST(EvalOmega, StarVanishesOnTruncations) {
  const OmegaModel m = star_countermodel();
  EXPECT_EQ(eval_omega(m, schema("star")).value, R(1, 2));
  for (int k = 1; k <= 50; ++k) EXPECT_EQ(model_value_raw(truncate(m, k), schema("star")), R(1)) << k;
}

TEST(EvalOmega, AgreesWithTruncationOnQuantifierFree) {
  std::mt19937_64 rng(3);
  const Formula f = parse("P(x) & Q(x) -> q");
  for (int i = 0; i < 50; ++i) {
    const OmegaModel m = random_omega_model(ChainSpec::nm_inf(), {{"P", 1}, {"Q", 1}, {"q", 0}}, rng);
    // the infimum over all of ℕ is at most the infimum over a prefix
    const OmegaValue v = eval_omega(m, f);
    ASSERT_TRUE(v.ok());
    EXPECT_LE(v.value, model_value_raw(truncate(m, 30), f));
  }
}

TEST(OmegaIo, RoundTrip) {
  const auto j = nlohmann::json::parse(
      R"j({"chain": "nm-prime-inf", "monadic": {"P": {"tail": {"base": "1/2", "coeff": "1/2", "shift": 0}, "exceptions": {}}}, "zeroary": {"q": "1/2"}})j");
  const OmegaModel m = omega_model_from_json(j);
  EXPECT_EQ(m.monadic().at("P"), tail(R(1, 2), R(1, 2)));
  const OmegaModel back = omega_model_from_json(to_json(m));
  EXPECT_EQ(back.monadic(), m.monadic());
  EXPECT_EQ(back.zeroary(), m.zeroary());
  EXPECT_TRUE(std::holds_alternative<OmegaModel>(model_from_json(j)));
}
