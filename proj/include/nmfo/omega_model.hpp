#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nmfo/chain.hpp"
#include "nmfo/finite_model.hpp"
#include "nmfo/formula.hpp"

namespace nmfo {

/// j ↦ base + coeff/(j + shift + 1), j ≥ 0.
struct TailExpr {
  Rational base;
  Rational coeff;
  long shift = 0;

  static TailExpr constant(const Rational& v) { return {v, Rational(0), 0}; }
  Rational at(long j) const;
  bool is_constant() const { return coeff.sign() == 0; }
  friend bool operator==(const TailExpr&, const TailExpr&) = default;
};

/// A tail with finitely many overridden indices.
struct EventualSeq {
  std::map<long, Rational> exceptions;
  TailExpr tail;

  static EventualSeq constant(const Rational& v) { return {{}, TailExpr::constant(v)}; }
  Rational at(long j) const;
  /// Least index not in the exception list.
  long first_tail_index() const;
  /// One past the largest exception index (0 if none).
  long exception_end() const;
  friend bool operator==(const EventualSeq&, const EventualSeq&) = default;
};

enum class SeqOp { TNorm, Residuum, Min, Max, Negation };

/// Pointwise chain operation. The result tail is one of the operand tails,
/// their negations or a constant; indices before the point where all
/// comparisons settle are stored as exceptions where they differ from it.
/// `b` is ignored for Negation.
EventualSeq seq_apply(const ChainSpec& c, SeqOp op, const EventualSeq& a, const EventualSeq& b);
EventualSeq seq_negate(const ChainSpec& c, const EventualSeq& a);

/// Pointwise image under a map that, on each open interval between
/// consecutive `breakpoints`, is either the identity or constant.
EventualSeq seq_map_step(const EventualSeq& s, const std::vector<Rational>& breakpoints,
                         const std::function<Rational(const Rational&)>& f);

/// Infimum in the chain, or nullopt when the set of values has no greatest
/// lower bound in it (unsafe). seq_sup is the dual.
std::optional<Rational> seq_inf(const ChainSpec& c, const EventualSeq& s);
std::optional<Rational> seq_sup(const ChainSpec& c, const EventualSeq& s);

/// Whether every value of s provably lies in the chain. Tails are accepted
/// only in the family's known shapes; anything else is rejected.
bool seq_in_chain(const ChainSpec& c, const EventualSeq& s);

/// Model over the domain ℕ with monadic and 0-ary predicates.
class OmegaModel {
 public:
  /// Throws ModelError for a finite chain or a sequence not provably in the
  /// chain, ChainError for a 0-ary value outside it.
  OmegaModel(ChainSpec chain, std::map<std::string, EventualSeq> monadic, std::map<std::string, Rational> zeroary);

  const ChainSpec& chain() const { return chain_; }
  const std::map<std::string, EventualSeq>& monadic() const { return monadic_; }
  const std::map<std::string, Rational>& zeroary() const { return zeroary_; }

 private:
  ChainSpec chain_;
  std::map<std::string, EventualSeq> monadic_;
  std::map<std::string, Rational> zeroary_;
};

struct OmegaValue {
  enum class Status { Value, Unsafe, Unsupported };
  Status status = Status::Value;
  Rational value;
  std::string detail;

  bool ok() const { return status == Status::Value; }
};

/// Closed formulas are evaluated innermost quantifier first: every
/// subformula may have at most one free variable. Free variables left at
/// the top are closed universally.
OmegaValue eval_omega(const OmegaModel& m, const Formula& f);

/// The submodel on individuals 0..size-1.
FiniteModel truncate(const OmegaModel& m, int size);

/// Random model whose sequences pass seq_in_chain; signature arities 0 or 1.
OmegaModel random_omega_model(const ChainSpec& c, const std::map<std::string, int>& signature, std::mt19937_64& rng);

}  // namespace nmfo
