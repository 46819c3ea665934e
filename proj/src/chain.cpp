#include "nmfo/chain.hpp"

#include <cctype>

#include "nmfo/errors.hpp"

namespace nmfo {

namespace {

const Rational kHalf(1, 2);

// r = 1/m for a positive integer m.
bool unit_fraction(const Rational& r) { return r.sign() > 0 && r.num() == 1; }

bool in_unit_interval(const Rational& q) { return q.sign() >= 0 && q <= Rational(1); }

Rational inverse_int(const mpz_class& m) { return Rational(mpq_class(1, m)); }

bool parse_positive_int(std::string_view digits, int& out) {
  if (digits.empty() || digits.size() > 6) return false;
  int v = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    v = v * 10 + (ch - '0');
  }
  out = v;
  return true;
}

void require_unit(const Rational& q) {
  if (!in_unit_interval(q)) throw ChainError("value " + q.str() + " outside [0,1]");
}

}  // namespace

ChainSpec ChainSpec::nm_finite(int n) {
  if (n < 2) throw ChainError("finite NM chain needs at least 2 elements");
  ChainSpec c(ChainKind::NMfin);
  c.size_ = n;
  return c;
}

ChainSpec ChainSpec::g_finite(int n) {
  if (n < 2) throw ChainError("finite Gödel chain needs at least 2 elements");
  ChainSpec c(ChainKind::Gfin);
  c.size_ = n;
  return c;
}

ChainSpec ChainSpec::a_alpha(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha >= Rational(1)) throw ChainError("A_alpha needs 0 < alpha < 1, got " + alpha.str());
  ChainSpec c(ChainKind::Aalpha);
  c.alpha_ = max(alpha, Rational(1) - alpha);
  return c;
}

ChainSpec ChainSpec::parse(std::string_view name) {
  if (name == "nm-inf") return nm_inf();
  if (name == "nm-inf-minus") return nm_inf_minus();
  if (name == "nm-prime-inf") return nm_prime_inf();
  if (name == "nm-prime-inf-minus") return nm_prime_inf_minus();
  if (name == "std-nm") return std_nm();
  if (name == "g-up") return g_up();
  if (name == "g-down") return g_down();
  if (name == "std-g") return std_g();
  if (name.starts_with("a:")) {
    try {
      return a_alpha(Rational::parse(name.substr(2)));
    } catch (const ChainError&) {
      throw;
    } catch (const Error& e) {
      throw ChainError("bad chain name '" + std::string(name) + "': " + e.what());
    }
  }
  int n = 0;
  if (name.starts_with("nm") && parse_positive_int(name.substr(2), n)) return nm_finite(n);
  if (name.starts_with("g") && parse_positive_int(name.substr(1), n)) return g_finite(n);
  throw ChainError("unknown chain '" + std::string(name) + "'");
}

std::string ChainSpec::name() const {
  switch (kind_) {
    case ChainKind::NMfin: return "nm" + std::to_string(size_);
    case ChainKind::NMinf: return "nm-inf";
    case ChainKind::NMinfMinus: return "nm-inf-minus";
    case ChainKind::NMprimeInf: return "nm-prime-inf";
    case ChainKind::NMprimeInfMinus: return "nm-prime-inf-minus";
    case ChainKind::StdNM: return "std-nm";
    case ChainKind::Aalpha: return "a:" + alpha_.str();
    case ChainKind::Gfin: return "g" + std::to_string(size_);
    case ChainKind::Gup: return "g-up";
    case ChainKind::Gdown: return "g-down";
    case ChainKind::StdG: return "std-g";
  }
  return {};
}

bool ChainSpec::is_nm() const {
  switch (kind_) {
    case ChainKind::Gfin:
    case ChainKind::Gup:
    case ChainKind::Gdown:
    case ChainKind::StdG:
      return false;
    default:
      return true;
  }
}

bool ChainSpec::has_fixpoint() const {
  switch (kind_) {
    case ChainKind::NMfin: return size_ % 2 == 1;
    case ChainKind::NMinf:
    case ChainKind::NMprimeInf:
    case ChainKind::StdNM:
    case ChainKind::Aalpha:
      return true;
    default:
      return false;
  }
}

bool ChainSpec::is_complete() const { return kind_ != ChainKind::NMprimeInfMinus; }

bool ChainSpec::all_have_predecessor() const {
  switch (kind_) {
    case ChainKind::NMprimeInf:
    case ChainKind::StdNM:
    case ChainKind::StdG:
      return false;
    case ChainKind::Aalpha:
      // Only the degenerate A_{1/2} = {0, 1/2, 1} is not dense in the middle.
      return alpha_ == kHalf;
    default:
      return true;
  }
}

bool mem(const ChainSpec& c, const Rational& q) {
  if (!in_unit_interval(q)) return false;
  const Rational one(1);
  switch (c.kind()) {
    case ChainKind::NMfin:
    case ChainKind::Gfin:
      return (q * Rational(c.size() - 1)).is_integer();
    case ChainKind::NMinf:
      return unit_fraction(q) || unit_fraction(one - q);
    case ChainKind::NMinfMinus:
      return q != kHalf && (unit_fraction(q) || unit_fraction(one - q));
    case ChainKind::NMprimeInf:
      return q == kHalf || unit_fraction(abs(Rational(2) * q - one));
    case ChainKind::NMprimeInfMinus:
      return q != kHalf && unit_fraction(abs(Rational(2) * q - one));
    case ChainKind::StdNM:
    case ChainKind::StdG:
      return true;
    case ChainKind::Aalpha:
      return q.sign() == 0 || q == one || (one - c.alpha() <= q && q <= c.alpha());
    case ChainKind::Gup:
      return q == one || unit_fraction(one - q);
    case ChainKind::Gdown:
      return q.sign() == 0 || unit_fraction(q);
  }
  return false;
}

ChainElement::ChainElement(ChainSpec chain, Rational value) : chain_(std::move(chain)), value_(std::move(value)) {
  if (!mem(chain_, value_)) throw ChainError(value_.str() + " is not an element of " + chain_.name());
}

Rational negation(const ChainSpec& c, const Rational& x) {
  if (c.is_nm()) return Rational(1) - x;
  return x.sign() == 0 ? Rational(1) : Rational(0);
}

Rational tnorm(const ChainSpec& c, const Rational& x, const Rational& y) {
  if (c.is_nm() && x <= Rational(1) - y) return Rational(0);
  return min(x, y);
}

Rational residuum(const ChainSpec& c, const Rational& x, const Rational& y) {
  if (x <= y) return Rational(1);
  if (c.is_nm()) return max(Rational(1) - x, y);
  return y;
}

namespace {

const ChainSpec& common_chain(const ChainElement& x, const ChainElement& y) {
  if (!(x.chain() == y.chain()))
    throw ChainError("operands from different chains: " + x.chain().name() + " and " + y.chain().name());
  return x.chain();
}

}  // namespace

ChainElement negation(const ChainElement& x) { return {x.chain(), negation(x.chain(), x.value())}; }

ChainElement tnorm(const ChainElement& x, const ChainElement& y) {
  const auto& c = common_chain(x, y);
  return {c, tnorm(c, x.value(), y.value())};
}

ChainElement residuum(const ChainElement& x, const ChainElement& y) {
  const auto& c = common_chain(x, y);
  return {c, residuum(c, x.value(), y.value())};
}

ChainElement meet(const ChainElement& x, const ChainElement& y) { return {common_chain(x, y), meet(x.value(), y.value())}; }
ChainElement join(const ChainElement& x, const ChainElement& y) { return {common_chain(x, y), join(x.value(), y.value())}; }

std::optional<Rational> fixpoint(const ChainSpec& c) {
  if (c.has_fixpoint()) return kHalf;
  return std::nullopt;
}

bool is_positive(const Rational& x) { return x > Rational(1) - x; }

namespace {

Rational floor_nm_inf(const Rational& q) {
  const Rational one(1);
  if (q == one) return one;
  if (q >= kHalf) return one - inverse_int((one / (one - q)).floor());
  if (q.sign() > 0) return inverse_int((one / q).ceil());
  return Rational(0);
}

// Shared by NMprimeInf and its fixpoint-free subalgebra for q != 1/2.
Rational floor_nm_prime(const Rational& q) {
  const Rational one(1);
  if (q == one) return one;
  if (q == kHalf) return kHalf;
  if (q < kHalf) return kHalf - inverse_int((one / (one - Rational(2) * q)).floor()) / Rational(2);
  return kHalf + inverse_int((one / (Rational(2) * q - one)).ceil()) / Rational(2);
}

std::optional<Rational> floor_nm(const ChainSpec& c, const Rational& q) {
  const Rational one(1);
  switch (c.kind()) {
    case ChainKind::NMfin: {
      const Rational step(1, c.size() - 1);
      return Rational(mpq_class((q / step).floor())) * step;
    }
    case ChainKind::NMinf: return floor_nm_inf(q);
    case ChainKind::NMinfMinus: {
      Rational r = floor_nm_inf(q);
      if (r == kHalf) return Rational(1, 3);
      return r;
    }
    case ChainKind::NMprimeInf: return floor_nm_prime(q);
    case ChainKind::NMprimeInfMinus:
      if (q == kHalf) return std::nullopt;
      return floor_nm_prime(q);
    case ChainKind::StdNM: return q;
    case ChainKind::Aalpha:
      if (q == one) return one;
      if (q >= c.alpha()) return c.alpha();
      if (q >= one - c.alpha()) return q;
      return Rational(0);
    default: break;
  }
  throw ChainError("not an NM chain: " + c.name());
}

}  // namespace

std::optional<Rational> floor_in(const ChainSpec& c, const Rational& q) {
  require_unit(q);
  const Rational one(1);
  switch (c.kind()) {
    case ChainKind::Gfin: {
      const Rational step(1, c.size() - 1);
      return Rational(mpq_class((q / step).floor())) * step;
    }
    case ChainKind::Gup:
      if (q == one) return one;
      return one - inverse_int((one / (one - q)).floor());
    case ChainKind::Gdown:
      if (q.sign() == 0) return Rational(0);
      return inverse_int((one / q).ceil());
    case ChainKind::StdG: return q;
    default: return floor_nm(c, q);
  }
}

std::optional<Rational> ceil_in(const ChainSpec& c, const Rational& q) {
  require_unit(q);
  const Rational one(1);
  switch (c.kind()) {
    case ChainKind::Gfin: {
      const Rational step(1, c.size() - 1);
      return Rational(mpq_class((q / step).ceil())) * step;
    }
    case ChainKind::Gup:
      if (q == one) return one;
      return one - inverse_int((one / (one - q)).ceil());
    case ChainKind::Gdown:
      if (q.sign() == 0) return Rational(0);
      return inverse_int((one / q).floor());
    case ChainKind::StdG: return q;
    default: {
      // NM carriers are closed under 1 - x.
      auto r = floor_nm(c, one - q);
      if (!r) return std::nullopt;
      return one - *r;
    }
  }
}

bool has_predecessor(const ChainSpec& c, const Rational& x) {
  if (!mem(c, x)) throw ChainError(x.str() + " is not an element of " + c.name());
  switch (c.kind()) {
    case ChainKind::NMprimeInf: return x != kHalf;
    case ChainKind::StdNM:
    case ChainKind::StdG:
      return false;
    case ChainKind::Aalpha: return x == Rational(1) - c.alpha();
    default: return true;
  }
}

std::vector<Rational> enumerate(const ChainSpec& c) {
  if (!c.is_finite()) throw ChainError("cannot enumerate infinite chain " + c.name());
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (int i = 0; i < c.size(); ++i) out.emplace_back(i, c.size() - 1);
  return out;
}

Rational sample_element(const ChainSpec& c, std::mt19937_64& rng) {
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Rational one(1);
  switch (c.kind()) {
    case ChainKind::NMfin:
    case ChainKind::Gfin:
      return Rational(uniform(0, c.size() - 1), c.size() - 1);
    case ChainKind::NMinf:
    case ChainKind::NMinfMinus:
      for (;;) {
        const Rational r(1, uniform(1, 6));
        Rational v = uniform(0, 1) ? r : one - r;
        if (mem(c, v)) return v;
      }
    case ChainKind::NMprimeInf:
    case ChainKind::NMprimeInfMinus:
      for (;;) {
        if (uniform(0, 7) == 0) {
          if (mem(c, kHalf)) return kHalf;
          continue;
        }
        const Rational r(1, 2 * uniform(1, 6));
        return uniform(0, 1) ? kHalf + r : kHalf - r;
      }
    case ChainKind::StdNM:
    case ChainKind::StdG: {
      const int den = uniform(1, 8);
      return Rational(uniform(0, den), den);
    }
    case ChainKind::Aalpha: {
      if (uniform(0, 4) == 0) return uniform(0, 1) ? one : Rational(0);
      const int den = uniform(1, 8);
      const Rational t(uniform(0, den), den);
      return (one - c.alpha()) + (Rational(2) * c.alpha() - one) * t;
    }
    case ChainKind::Gup: {
      const int m = uniform(1, 7);
      return m == 7 ? one : one - Rational(1, m);
    }
    case ChainKind::Gdown: {
      const int m = uniform(1, 7);
      return m == 7 ? Rational(0) : Rational(1, m);
    }
  }
  return Rational(0);
}

}  // namespace nmfo
