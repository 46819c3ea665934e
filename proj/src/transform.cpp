#include "nmfo/transform.hpp"

#include <set>

#include "nmfo/errors.hpp"

namespace nmfo {

namespace {

const Rational kOne(1);
const Rational kHalf(1, 2);

FiniteModel remap(const FiniteModel& m, const ChainSpec& chain, const std::function<Rational(const Rational&)>& f) {
  FiniteModel out(chain, m.domain());
  for (const auto& [name, arity] : m.signature()) {
    out.declare(name, arity);
    const auto& src = m.table(name);
    auto& dst = out.table(name);
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i] = f(src[i]);
      if (!mem(chain, dst[i])) throw ChainError(dst[i].str() + " is not an element of " + chain.name());
    }
  }
  for (const auto& [name, idx] : m.constants()) out.set_constant(name, m.domain()[static_cast<std::size_t>(idx)]);
  return out;
}

}  // namespace

Rational rotation_image(const ChainSpec& g, bool with_fixpoint, const Rational& x) {
  if (!mem(g, x)) throw ChainError(x.str() + " is not an element of " + g.name());
  if (x.sign() == 0) return Rational(0);
  switch (g.kind()) {
    case ChainKind::Gfin: {
      const long n = g.size();
      const Rational i = x * Rational(n - 1);
      return with_fixpoint ? (Rational(n - 1) + i) / Rational(2 * n - 2) : (Rational(n - 2) + i) / Rational(2 * n - 3);
    }
    case ChainKind::Gup: {
      if (x == kOne) return kOne;
      // x = 1 - 1/m  ↦  1 - 1/(m+1)
      const Rational m = kOne / (kOne - x);
      return kOne - kOne / (m + kOne);
    }
    case ChainKind::Gdown: return kHalf + x / Rational(2);
    default: throw ChainError("rotation is defined for g<k>, g-up and g-down, not " + g.name());
  }
}

Rotation rotate(const ChainSpec& g, bool with_fixpoint) {
  Rotation out{ChainSpec::nm_inf(), {}};
  switch (g.kind()) {
    case ChainKind::Gfin:
      out.chain = ChainSpec::nm_finite(with_fixpoint ? 2 * g.size() - 1 : 2 * g.size() - 2);
      for (const auto& x : enumerate(g)) out.correspondence.emplace_back(x, rotation_image(g, with_fixpoint, x));
      return out;
    case ChainKind::Gup: out.chain = with_fixpoint ? ChainSpec::nm_inf() : ChainSpec::nm_inf_minus(); return out;
    case ChainKind::Gdown:
      out.chain = with_fixpoint ? ChainSpec::nm_prime_inf() : ChainSpec::nm_prime_inf_minus();
      return out;
    default: throw ChainError("rotation is defined for g<k>, g-up and g-down, not " + g.name());
  }
}

FiniteModel rotate_model(const FiniteModel& m, bool with_fixpoint) {
  const ChainSpec& g = m.chain();
  return remap(m, rotate(g, with_fixpoint).chain,
               [&](const Rational& v) { return rotation_image(g, with_fixpoint, v); });
}

namespace {

Formula star_rec(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return Formula::square(f);
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::And: return Formula::conj(star_rec(f.lhs()), star_rec(f.rhs()));
    case Formula::Kind::Strong: return Formula::strong(star_rec(f.lhs()), star_rec(f.rhs()));
    case Formula::Kind::Implies: return Formula::square(Formula::implies(star_rec(f.lhs()), star_rec(f.rhs())));
    case Formula::Kind::Forall: return Formula::square(Formula::forall(f.variable(), star_rec(f.body())));
    case Formula::Kind::Exists: break;
  }
  throw Error("star: unexpected existential quantifier");
}

void require_cut_chain(const ChainSpec& c, const Rational& alpha) {
  if (c.kind() != ChainKind::NMinf && c.kind() != ChainKind::StdNM)
    throw ModelError("cut models are defined over nm-inf and std-nm, not " + c.name());
  if (alpha.sign() <= 0 || alpha >= kOne) throw ModelError("alpha must satisfy 0 < alpha < 1");
  if (!mem(c, alpha)) throw ModelError(alpha.str() + " is not an element of " + c.name());
}

void require_nm(const ChainSpec& c) {
  if (!c.is_nm()) throw ModelError("positive collapse needs an NM chain, not " + c.name());
}

}  // namespace

Formula star(const Formula& f) { return star_rec(eliminate_exists(f)); }

Rational cut_value(const Rational& alpha, const Rational& v) {
  const Rational a = max(alpha, kOne - alpha);
  if (v > a) return kOne;
  if (v < kOne - a) return Rational(0);
  return v;
}

FiniteModel cut_model(const FiniteModel& m, const Rational& alpha) {
  require_cut_chain(m.chain(), alpha);
  return m.map_values([&](const Rational& v) { return cut_value(alpha, v); });
}

OmegaModel cut_model(const OmegaModel& m, const Rational& alpha) {
  require_cut_chain(m.chain(), alpha);
  const Rational a = max(alpha, kOne - alpha);
  auto f = [&](const Rational& v) { return cut_value(alpha, v); };
  std::map<std::string, EventualSeq> monadic;
  for (const auto& [name, s] : m.monadic()) monadic[name] = seq_map_step(s, {kOne - a, a}, f);
  std::map<std::string, Rational> zeroary;
  for (const auto& [name, v] : m.zeroary()) zeroary[name] = f(v);
  return OmegaModel(m.chain(), std::move(monadic), std::move(zeroary));
}

Rational collapse_value(const Rational& v) { return is_positive(v) ? v : Rational(0); }

FiniteModel positive_collapse(const FiniteModel& m) {
  require_nm(m.chain());
  return m.map_values(collapse_value);
}

OmegaModel positive_collapse(const OmegaModel& m) {
  require_nm(m.chain());
  std::map<std::string, EventualSeq> monadic;
  for (const auto& [name, s] : m.monadic()) monadic[name] = seq_map_step(s, {kHalf}, collapse_value);
  std::map<std::string, Rational> zeroary;
  for (const auto& [name, v] : m.zeroary()) zeroary[name] = collapse_value(v);
  return OmegaModel(m.chain(), std::move(monadic), std::move(zeroary));
}

const Rational& ChainEmbedding::apply(const Rational& x) const {
  for (const auto& [a, b] : map)
    if (a == x) return b;
  throw EmbeddingError(x.str() + " is not an element of " + source.name());
}

ChainEmbedding embed_finite(const ChainSpec& source, const ChainSpec& target) {
  if (source.kind() != ChainKind::NMfin) throw EmbeddingError("embedding source must be nm<k>, not " + source.name());
  const int k = source.size();
  const std::vector<Rational> c = enumerate(source);  // c[0] = 0 < ... < c[k-1] = 1
  const bool fix = source.has_fixpoint();
  ChainEmbedding e{source, target, {}};

  // 1-based indices as in c_1 < ... < c_k. Positive c_j have j > (k+1)/2.
  const int least_pos = (k + 1) / 2 + 1;  // index of the least positive element
  const int greatest_neg = (k + 1) / 2 - (fix ? 1 : 0);  // index of the greatest negative element
  std::vector<Rational> image(static_cast<std::size_t>(k));
  image[0] = Rational(0);
  image[static_cast<std::size_t>(k - 1)] = kOne;
  if (fix) image[static_cast<std::size_t>(k / 2)] = kHalf;

  switch (target.kind()) {
    case ChainKind::NMinfMinus:
    case ChainKind::NMprimeInfMinus:
      if (fix) throw EmbeddingError(source.name() + " has a fixpoint; " + target.name() + " has none");
      [[fallthrough]];
    case ChainKind::NMinf:
    case ChainKind::NMprimeInf: {
      const bool prime = target.kind() == ChainKind::NMprimeInf || target.kind() == ChainKind::NMprimeInfMinus;
      for (int j = least_pos; j < k; ++j) {
        image[static_cast<std::size_t>(j - 1)] = prime ? kHalf + kOne / Rational(2 * (2 + (k - 1) - j))
                                                       : kOne - kOne / Rational(3 + (j - least_pos));
      }
      for (int i = 2; i <= greatest_neg; ++i) {
        image[static_cast<std::size_t>(i - 1)] = prime ? kHalf - kOne / Rational(2 * (2 + i - 2))
                                                       : kOne / Rational(3 + (greatest_neg - i));
      }
      break;
    }
    case ChainKind::NMfin: {
      const int n = target.size();
      if (n < k) throw EmbeddingError(target.name() + " is smaller than " + source.name());
      if ((n - k) % 2 != 0) throw EmbeddingError(source.name() + " and " + target.name() + " differ in parity");
      const std::vector<Rational> t = enumerate(target);
      // Positives onto the top positives of the target, in order.
      for (int j = least_pos; j < k; ++j) image[static_cast<std::size_t>(j - 1)] = t[static_cast<std::size_t>(n - k + j - 1)];
      for (int i = 2; i <= greatest_neg; ++i)
        image[static_cast<std::size_t>(i - 1)] = kOne - image[static_cast<std::size_t>(k - i)];
      break;
    }
    default: throw EmbeddingError("no embedding of " + source.name() + " into " + target.name());
  }
  for (int i = 0; i < k; ++i) e.map.emplace_back(c[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(i)]);
  return e;
}

EmbeddingCheck check_embedding(const ChainEmbedding& e) {
  const ChainSpec& s = e.source;
  const ChainSpec& t = e.target;
  auto fail = [](std::string why) { return EmbeddingCheck{false, std::move(why)}; };
  std::vector<Rational> xs;
  for (const auto& [a, b] : e.map) {
    if (!mem(s, a)) return fail(a.str() + " is not in " + s.name());
    if (!mem(t, b)) return fail("image " + b.str() + " of " + a.str() + " is not in " + t.name());
    xs.push_back(a);
  }
  if (s.is_finite() && xs.size() != enumerate(s).size()) return fail("map is not total on " + s.name());
  if (e.apply(Rational(0)).sign() != 0) return fail("0 is not mapped to 0");
  if (e.apply(kOne) != kOne) return fail("1 is not mapped to 1");
  if (s.has_fixpoint() && t.has_fixpoint() && e.apply(kHalf) != kHalf) return fail("fixpoint is not mapped to fixpoint");
  for (const auto& x : xs) {
    const Rational& fx = e.apply(x);
    if (e.apply(negation(s, x)) != negation(t, fx)) return fail("negation not preserved at " + x.str());
    for (const auto& y : xs) {
      const Rational& fy = e.apply(y);
      if (x < y && !(fx < fy)) return fail("order not preserved at (" + x.str() + ", " + y.str() + ")");
      if (x != y && fx == fy) return fail("not injective at (" + x.str() + ", " + y.str() + ")");
      const std::string at = " at (" + x.str() + ", " + y.str() + ")";
      if (e.apply(tnorm(s, x, y)) != tnorm(t, fx, fy)) return fail("t-norm not preserved" + at);
      if (e.apply(residuum(s, x, y)) != residuum(t, fx, fy)) return fail("residuum not preserved" + at);
      if (e.apply(meet(x, y)) != meet(fx, fy)) return fail("min not preserved" + at);
      if (e.apply(join(x, y)) != join(fx, fy)) return fail("max not preserved" + at);
    }
  }
  return {};
}

Rehoused rehouse_finite(const FiniteModel& m) {
  if (!m.chain().is_nm()) throw ModelError("rehousing needs an NM chain, not " + m.chain().name());
  std::set<Rational> used = {Rational(0), kOne};
  for (const auto& [name, arity] : m.signature())
    for (const auto& v : m.table(name)) {
      used.insert(v);
      used.insert(kOne - v);
    }
  const long size = static_cast<long>(used.size());
  std::map<Rational, Rational> rank;
  long i = 0;
  for (const auto& v : used) rank.emplace(v, Rational(i++, size - 1));
  const ChainSpec target = ChainSpec::nm_finite(static_cast<int>(size));
  FiniteModel out = remap(m, target, [&](const Rational& v) { return rank.at(v); });
  return {std::move(out), std::move(rank)};
}

}  // namespace nmfo
