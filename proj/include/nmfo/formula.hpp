#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nmfo {

/// First-order formula over &, ∧, →, ⊥ with ∀ and ∃. Immutable; copies share
/// structure. ¬, ∨, ↔ and ⊤ exist only as constructors that expand into the
/// primitive connectives:
///   ¬φ = φ→⊥,  φ∨ψ = ((φ→ψ)→ψ)∧((ψ→φ)→φ),  φ↔ψ = (φ→ψ)∧(ψ→φ),  ⊤ = ¬⊥.
class Formula {
 public:
  enum class Kind { Atom, Bottom, And, Strong, Implies, Forall, Exists };

  static Formula atom(std::string predicate, std::vector<std::string> args = {});
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula strong(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  static Formula neg(Formula f);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  /// φ² = φ & φ.
  static Formula square(Formula f);

  Kind kind() const;
  bool is_binary() const;
  bool is_quantifier() const;

  /// Atom only.
  const std::string& predicate() const;
  const std::vector<std::string>& args() const;
  /// Quantifiers only.
  const std::string& variable() const;
  const Formula& body() const;
  /// Binary connectives only.
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::set<std::string> free_variables() const;
  bool is_closed() const { return free_variables().empty(); }
  bool is_quantifier_free() const;
  /// Node count of the tree (shared subtrees counted each time they occur).
  std::size_t size() const;

  /// Identity of the underlying node; equal ids imply equal formulas.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Arity of every predicate symbol. Throws ArityError if a symbol is used
/// with two different arities.
std::map<std::string, int> predicate_arities(const Formula& f);

/// Names of the 0-ary atoms, in name order.
std::set<std::string> propositional_atoms(const Formula& f);

/// Every occurrence of ∃x φ replaced by ¬∀x¬φ.
Formula eliminate_exists(const Formula& f);

enum class PrintStyle {
  /// Minimal parentheses with spaces around binary operators.
  Spaced,
  /// Every compound operand of a binary connective is parenthesised; no spaces.
  Compact,
};

/// Grammar-conformant text; ¬, ∨, ↔ and ⊤ are re-sugared where the tree has
/// exactly their expanded shape.
std::string print(const Formula& f, PrintStyle style = PrintStyle::Spaced);

/// Parses the ASCII grammar: `forall V. F`, `exists V. F`, infix `<->`, `->`
/// (right-assoc), `\/`, `/\`, `&` in increasing binding strength, prefix `~`,
/// atoms `P` or `P(x,y)`, constants `bot`, `top`. Throws SyntaxError or
/// ArityError.
Formula parse(std::string_view text);

}  // namespace nmfo
