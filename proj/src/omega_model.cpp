#include "nmfo/omega_model.hpp"

#include <algorithm>

#include "nmfo/errors.hpp"

namespace nmfo {

namespace {

const Rational kOne(1);
const Rational kHalf(1, 2);

// Past this index a settle point is treated as a modelling error rather
// than something to unfold pointwise.
constexpr long kMaxSettle = 10'000'000;

long to_index(const mpz_class& z) {
  if (z > kMaxSettle) throw Error("sequence comparison settles only after index " + z.get_str());
  return z.get_si();
}

TailExpr normalized(TailExpr t) {
  if (t.coeff.sign() == 0) t.shift = 0;
  return t;
}

TailExpr negated(const TailExpr& t) { return normalized({kOne - t.base, -t.coeff, t.shift}); }

// Index from which sign(t1(j) - t2(j)) no longer changes. Multiplying the
// difference by (j+Sa)(j+Sb) gives the quadratic A j² + B j + C.
long settle(const TailExpr& t1, const TailExpr& t2) {
  const Rational d = t1.base - t2.base;
  const Rational sa(t1.shift + 1);
  const Rational sb(t2.shift + 1);
  const Rational a = d;
  const Rational b = d * (sa + sb) + t1.coeff - t2.coeff;
  const Rational c = d * sa * sb + t1.coeff * sb - t2.coeff * sa;
  if (a.sign() != 0) {
    const Rational bound = kOne + max(abs(b / a), abs(c / a));
    return to_index(bound.floor() + 1);
  }
  if (b.sign() != 0) return to_index(abs(c / b).floor() + 1);
  return 0;
}

Rational scalar(const ChainSpec& c, SeqOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case SeqOp::TNorm: return tnorm(c, x, y);
    case SeqOp::Residuum: return residuum(c, x, y);
    case SeqOp::Min: return meet(x, y);
    case SeqOp::Max: return join(x, y);
    case SeqOp::Negation: return negation(c, x);
  }
  return x;
}

std::optional<Rational> min_exception(const EventualSeq& s) {
  std::optional<Rational> out;
  for (const auto& [j, v] : s.exceptions) out = out ? min(*out, v) : v;
  return out;
}

std::optional<Rational> max_exception(const EventualSeq& s) {
  std::optional<Rational> out;
  for (const auto& [j, v] : s.exceptions) out = out ? max(*out, v) : v;
  return out;
}

bool unit_fraction(const Rational& r) { return r.sign() > 0 && r.num() == 1; }

bool in_unit(const Rational& q) { return q.sign() >= 0 && q <= kOne; }

}  // namespace

Rational TailExpr::at(long j) const {
  if (coeff.sign() == 0) return base;
  return base + coeff / Rational(j + shift + 1);
}

Rational EventualSeq::at(long j) const {
  if (auto it = exceptions.find(j); it != exceptions.end()) return it->second;
  return tail.at(j);
}

long EventualSeq::first_tail_index() const {
  long j = 0;
  while (exceptions.contains(j)) ++j;
  return j;
}

long EventualSeq::exception_end() const { return exceptions.empty() ? 0 : exceptions.rbegin()->first + 1; }

EventualSeq seq_apply(const ChainSpec& c, SeqOp op, const EventualSeq& a, const EventualSeq& b) {
  const EventualSeq& rhs = op == SeqOp::Negation ? a : b;
  const std::vector<TailExpr> cands = {a.tail,
                                       rhs.tail,
                                       negated(a.tail),
                                       negated(rhs.tail),
                                       TailExpr::constant(Rational(0)),
                                       TailExpr::constant(kOne)};
  long n = std::max(a.exception_end(), rhs.exception_end());
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t k = i + 1; k < cands.size(); ++k) n = std::max(n, settle(cands[i], cands[k]));

  // Past n every comparison among candidates is fixed, so the candidate
  // matching the value at n matches it everywhere after. Candidates equal
  // at n are then identical tails.
  const Rational v = scalar(c, op, a.tail.at(n), rhs.tail.at(n));
  EventualSeq out;
  for (const auto& t : cands)
    if (t.at(n) == v) {
      out.tail = normalized(t);
      break;
    }
  for (long j = 0; j < n; ++j) {
    Rational w = scalar(c, op, a.at(j), rhs.at(j));
    if (w != out.tail.at(j)) out.exceptions.emplace(j, std::move(w));
  }
  return out;
}

EventualSeq seq_negate(const ChainSpec& c, const EventualSeq& a) { return seq_apply(c, SeqOp::Negation, a, a); }

EventualSeq seq_map_step(const EventualSeq& s, const std::vector<Rational>& breakpoints,
                         const std::function<Rational(const Rational&)>& f) {
  long n = s.exception_end();
  for (const auto& bp : breakpoints) n = std::max(n, settle(s.tail, TailExpr::constant(bp)));
  const Rational t0 = s.tail.at(n);
  const Rational t1 = s.tail.at(n + 1);
  EventualSeq out;
  if (f(t0) == t0 && f(t1) == t1)
    out.tail = s.tail;
  else
    out.tail = TailExpr::constant(f(t1));
  for (long j = 0; j < n; ++j) {
    Rational w = f(s.at(j));
    if (w != out.tail.at(j)) out.exceptions.emplace(j, std::move(w));
  }
  return out;
}

std::optional<Rational> seq_inf(const ChainSpec& c, const EventualSeq& s) {
  const auto low = min_exception(s);
  const int sign = s.tail.coeff.sign();
  if (sign > 0) {
    // Tail decreases toward its base without reaching it.
    if (low && *low <= s.tail.base) return *low;
    return floor_in(c, s.tail.base);
  }
  const Rational tail_min = sign < 0 ? s.tail.at(s.first_tail_index()) : s.tail.base;
  return low ? min(*low, tail_min) : tail_min;
}

std::optional<Rational> seq_sup(const ChainSpec& c, const EventualSeq& s) {
  const auto high = max_exception(s);
  const int sign = s.tail.coeff.sign();
  if (sign < 0) {
    if (high && *high >= s.tail.base) return *high;
    return ceil_in(c, s.tail.base);
  }
  const Rational tail_max = sign > 0 ? s.tail.at(s.first_tail_index()) : s.tail.base;
  return high ? max(*high, tail_max) : tail_max;
}

bool seq_in_chain(const ChainSpec& c, const EventualSeq& s) {
  for (const auto& [j, v] : s.exceptions)
    if (j < 0 || !in_unit(v) || !mem(c, v)) return false;
  const TailExpr& t = s.tail;
  if (t.shift < 0) return false;
  if (t.is_constant()) return in_unit(t.base) && mem(c, t.base);
  const long j0 = s.first_tail_index();
  switch (c.kind()) {
    case ChainKind::NMinf:
    case ChainKind::NMinfMinus: {
      const bool low = t.base.sign() == 0 && unit_fraction(t.coeff);
      const bool high = t.base == kOne && unit_fraction(-t.coeff);
      if (!low && !high) return false;
      if (c.kind() == ChainKind::NMinfMinus) {
        // Value 1/2 occurs where d(j+S) = 2.
        for (long k = 0; k <= 2; ++k)
          if (t.at(k) == kHalf && !s.exceptions.contains(k)) return false;
      }
      return true;
    }
    case ChainKind::NMprimeInf:
    case ChainKind::NMprimeInfMinus: {
      const Rational a = abs(t.coeff);
      return t.base == kHalf && a.num() == 1 && a.den() % 2 == 0;
    }
    case ChainKind::Gup: return t.base == kOne && unit_fraction(-t.coeff);
    case ChainKind::Gdown: return t.base.sign() == 0 && unit_fraction(t.coeff);
    case ChainKind::StdNM:
    case ChainKind::StdG: return in_unit(t.base) && in_unit(t.at(j0));
    case ChainKind::Aalpha: {
      const Rational lo = kOne - c.alpha();
      auto band = [&](const Rational& q) { return lo <= q && q <= c.alpha(); };
      return band(t.base) && band(t.at(j0));
    }
    case ChainKind::NMfin:
    case ChainKind::Gfin: break;
  }
  return false;
}

OmegaModel::OmegaModel(ChainSpec chain, std::map<std::string, EventualSeq> monadic,
                       std::map<std::string, Rational> zeroary)
    : chain_(std::move(chain)), monadic_(std::move(monadic)), zeroary_(std::move(zeroary)) {
  if (chain_.is_finite()) throw ModelError("omega-models need an infinite chain, got " + chain_.name());
  for (const auto& [name, s] : monadic_) {
    if (zeroary_.contains(name)) throw ArityError("predicate '" + name + "' is both monadic and 0-ary");
    if (!seq_in_chain(chain_, s)) throw ModelError("sequence for '" + name + "' is not provably inside " + chain_.name());
  }
  for (const auto& [name, v] : zeroary_)
    if (!mem(chain_, v)) throw ChainError(v.str() + " is not an element of " + chain_.name());
}

namespace {

struct Unsafe {
  std::string detail;
};
struct Unsupported {
  std::string detail;
};

// Value of a subformula: a constant when `var` is empty, otherwise a
// sequence indexed by the individual assigned to `var`.
struct SymValue {
  std::optional<std::string> var;
  EventualSeq seq;
};

class OmegaEvaluator {
 public:
  explicit OmegaEvaluator(const OmegaModel& m) : m_(m) {}

  SymValue eval(const Formula& f) {
    const ChainSpec& c = m_.chain();
    switch (f.kind()) {
      case Formula::Kind::Bottom: return {std::nullopt, EventualSeq::constant(Rational(0))};
      case Formula::Kind::Atom: {
        const auto& args = f.args();
        if (args.empty()) {
          auto it = m_.zeroary().find(f.predicate());
          if (it == m_.zeroary().end()) throw ModelError("uninterpreted predicate '" + f.predicate() + "'");
          return {std::nullopt, EventualSeq::constant(it->second)};
        }
        if (args.size() > 1) throw Unsupported{"predicate '" + f.predicate() + "' is not monadic"};
        auto it = m_.monadic().find(f.predicate());
        if (it == m_.monadic().end()) throw ModelError("uninterpreted predicate '" + f.predicate() + "'");
        return {args[0], it->second};
      }
      case Formula::Kind::And:
      case Formula::Kind::Strong:
      case Formula::Kind::Implies: {
        SymValue a = eval(f.lhs());
        SymValue b = eval(f.rhs());
        if (a.var && b.var && *a.var != *b.var)
          throw Unsupported{"subformula has free variables " + *a.var + " and " + *b.var};
        const SeqOp op = f.kind() == Formula::Kind::And      ? SeqOp::Min
                         : f.kind() == Formula::Kind::Strong ? SeqOp::TNorm
                                                             : SeqOp::Residuum;
        return {a.var ? a.var : b.var, seq_apply(c, op, a.seq, b.seq)};
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        SymValue body = eval(f.body());
        if (!body.var || *body.var != f.variable()) return body;
        return {std::nullopt, EventualSeq::constant(close(f.kind() == Formula::Kind::Forall, body.seq, f))};
      }
    }
    return {std::nullopt, EventualSeq::constant(Rational(0))};
  }

  Rational close(bool universal, const EventualSeq& s, const Formula& f) {
    auto v = universal ? seq_inf(m_.chain(), s) : seq_sup(m_.chain(), s);
    if (!v)
      throw Unsafe{std::string(universal ? "infimum" : "supremum") + " does not exist in " + m_.chain().name() +
                   " for " + print(f)};
    return *v;
  }

 private:
  const OmegaModel& m_;
};

}  // namespace

OmegaValue eval_omega(const OmegaModel& m, const Formula& f) {
  OmegaEvaluator ev(m);
  try {
    SymValue v = ev.eval(f);
    Rational out = v.var ? ev.close(true, v.seq, f) : v.seq.tail.base;
    return {OmegaValue::Status::Value, std::move(out), {}};
  } catch (const Unsafe& u) {
    return {OmegaValue::Status::Unsafe, Rational(0), u.detail};
  } catch (const Unsupported& u) {
    return {OmegaValue::Status::Unsupported, Rational(0), u.detail};
  }
}

FiniteModel truncate(const OmegaModel& m, int size) {
  FiniteModel out(m.chain(), default_domain(size));
  for (const auto& [name, s] : m.monadic()) {
    out.declare(name, 1);
    for (int j = 0; j < size; ++j) out.set(name, std::vector<int>{j}, s.at(j));
  }
  for (const auto& [name, v] : m.zeroary()) {
    out.declare(name, 0);
    out.set(name, std::vector<int>{}, v);
  }
  return out;
}

namespace {

TailExpr random_tail(const ChainSpec& c, std::mt19937_64& rng) {
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (uniform(0, 3) == 0) return TailExpr::constant(sample_element(c, rng));
  const long shift = uniform(0, 3);
  const int d = uniform(1, 3);
  const int sign = uniform(0, 1) ? 1 : -1;
  switch (c.kind()) {
    case ChainKind::NMinf:
    case ChainKind::NMinfMinus:
      return sign > 0 ? TailExpr{Rational(0), Rational(1, d), shift} : TailExpr{kOne, Rational(-1, d), shift};
    case ChainKind::NMprimeInf:
    case ChainKind::NMprimeInfMinus: return {kHalf, Rational(sign, 2 * d), shift};
    case ChainKind::Gup: return {kOne, Rational(-1, d), shift};
    case ChainKind::Gdown: return {Rational(0), Rational(1, d), shift};
    case ChainKind::StdNM:
    case ChainKind::StdG:
    case ChainKind::Aalpha: return {sample_element(c, rng), Rational(sign, uniform(2, 16)), shift};
    case ChainKind::NMfin:
    case ChainKind::Gfin: break;
  }
  throw ModelError("omega-models need an infinite chain");
}

}  // namespace

OmegaModel random_omega_model(const ChainSpec& c, const std::map<std::string, int>& signature, std::mt19937_64& rng) {
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::map<std::string, EventualSeq> monadic;
  std::map<std::string, Rational> zeroary;
  for (const auto& [name, arity] : signature) {
    if (arity == 0) {
      zeroary[name] = sample_element(c, rng);
      continue;
    }
    if (arity != 1) throw ArityError("omega-models support only monadic and 0-ary predicates");
    EventualSeq s;
    for (int attempt = 0;; ++attempt) {
      s = EventualSeq{};
      s.tail = attempt < 200 ? random_tail(c, rng) : TailExpr::constant(sample_element(c, rng));
      const int k = uniform(0, 2);
      for (int i = 0; i < k; ++i) s.exceptions[uniform(0, 5)] = sample_element(c, rng);
      if (seq_in_chain(c, s)) break;
    }
    monadic[name] = std::move(s);
  }
  return OmegaModel(c, std::move(monadic), std::move(zeroary));
}

}  // namespace nmfo
