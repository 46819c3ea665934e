#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nmfo/rational.hpp"

namespace nmfo {

enum class ChainKind {
  NMfin,            // {0, 1/(n-1), ..., 1}
  NMinf,            // {1/m} ∪ {1 - 1/m}
  NMinfMinus,       // NMinf without 1/2
  NMprimeInf,       // {1/2 ± 1/(2m)} ∪ {1/2}
  NMprimeInfMinus,  // NMprimeInf without 1/2
  StdNM,            // rationals of [0,1]
  Aalpha,           // [1-|α|, |α|] ∪ {0, 1}
  Gfin,
  Gup,              // {1 - 1/m} ∪ {1}
  Gdown,            // {1/m} ∪ {0}
  StdG,
};

/// Identity of one of the chain families. Carriers are never stored: every
/// query is decided from the family tag and its parameter.
class ChainSpec {
 public:
  static ChainSpec nm_finite(int n);
  static ChainSpec nm_inf() { return ChainSpec(ChainKind::NMinf); }
  static ChainSpec nm_inf_minus() { return ChainSpec(ChainKind::NMinfMinus); }
  static ChainSpec nm_prime_inf() { return ChainSpec(ChainKind::NMprimeInf); }
  static ChainSpec nm_prime_inf_minus() { return ChainSpec(ChainKind::NMprimeInfMinus); }
  static ChainSpec std_nm() { return ChainSpec(ChainKind::StdNM); }
  /// Stores max(α, 1-α); A_α and A_{1-α} are the same chain.
  static ChainSpec a_alpha(const Rational& alpha);
  static ChainSpec g_finite(int n);
  static ChainSpec g_up() { return ChainSpec(ChainKind::Gup); }
  static ChainSpec g_down() { return ChainSpec(ChainKind::Gdown); }
  static ChainSpec std_g() { return ChainSpec(ChainKind::StdG); }

  /// Names: nm<k>, nm-inf, nm-inf-minus, nm-prime-inf, nm-prime-inf-minus,
  /// std-nm, a:<p>/<q>, g<k>, g-up, g-down, std-g.
  static ChainSpec parse(std::string_view name);
  std::string name() const;

  ChainKind kind() const { return kind_; }
  /// Carrier size of a finite chain; 0 for infinite ones.
  int size() const { return size_; }
  /// |α| for Aalpha.
  const Rational& alpha() const { return alpha_; }

  bool is_nm() const;
  bool is_godel() const { return !is_nm(); }
  bool is_finite() const { return kind_ == ChainKind::NMfin || kind_ == ChainKind::Gfin; }

  bool has_fixpoint() const;
  bool is_complete() const;
  bool all_have_predecessor() const;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  explicit ChainSpec(ChainKind kind) : kind_(kind) {}

  ChainKind kind_;
  int size_ = 0;
  Rational alpha_;
};

bool mem(const ChainSpec& c, const Rational& q);

/// A rational certified to lie in its chain.
class ChainElement {
 public:
  /// Throws ChainError when `value` is not a carrier element.
  ChainElement(ChainSpec chain, Rational value);

  const ChainSpec& chain() const { return chain_; }
  const Rational& value() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const ChainElement&, const ChainElement&) = default;

 private:
  ChainSpec chain_;
  Rational value_;
};

// Chain operations on carrier values. Callers guarantee membership; the
// ChainElement overloads below check it.
Rational negation(const ChainSpec& c, const Rational& x);
Rational tnorm(const ChainSpec& c, const Rational& x, const Rational& y);
Rational residuum(const ChainSpec& c, const Rational& x, const Rational& y);
inline Rational meet(const Rational& x, const Rational& y) { return min(x, y); }
inline Rational join(const Rational& x, const Rational& y) { return max(x, y); }

ChainElement negation(const ChainElement& x);
ChainElement tnorm(const ChainElement& x, const ChainElement& y);
ChainElement residuum(const ChainElement& x, const ChainElement& y);
ChainElement meet(const ChainElement& x, const ChainElement& y);
ChainElement join(const ChainElement& x, const ChainElement& y);

/// The negation fixpoint 1/2, when the chain has one.
std::optional<Rational> fixpoint(const ChainSpec& c);
/// x > n(x). Only meaningful on NM chains.
bool is_positive(const Rational& x);

/// Greatest carrier element <= q, or nullopt when the elements below q have
/// no maximum (q = 1/2 in NMprimeInfMinus).
std::optional<Rational> floor_in(const ChainSpec& c, const Rational& q);
/// Least carrier element >= q, dual of floor_in.
std::optional<Rational> ceil_in(const ChainSpec& c, const Rational& q);

/// Whether carrier element x, 0 < x < 1, has an immediate lower neighbour.
bool has_predecessor(const ChainSpec& c, const Rational& x);

/// Ascending carrier of a finite chain; throws ChainError otherwise.
std::vector<Rational> enumerate(const ChainSpec& c);

/// A random carrier element. Infinite families are sampled from their
/// low-index elements so values stay small.
Rational sample_element(const ChainSpec& c, std::mt19937_64& rng);

}  // namespace nmfo
