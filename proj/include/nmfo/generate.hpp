#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nmfo/formula.hpp"

namespace nmfo {

/// Distribution of random_formula. At each node above the depth cap one
/// shape is drawn with probability proportional to its weight; at the cap an
/// atom (or bot, weight `w_bottom`) is drawn.
struct GenOptions {
  int max_depth = 4;
  /// (name, arity) pairs; arity 0 or 1 unless the caller evaluates n-ary.
  std::vector<std::pair<std::string, int>> predicates = {{"P", 1}, {"Q", 1}, {"p", 0}, {"q", 0}};
  std::vector<std::string> variables = {"x", "y"};
  /// Atoms only use variables bound above them; a monadic atom drawn
  /// outside any quantifier falls back to a 0-ary one (or bot).
  bool closed = true;
  bool allow_exists = true;
  /// Use the derived constructors ¬, ∨, ↔, ⊤ as well.
  bool derived = false;

  int w_atom = 3;
  int w_bottom = 1;
  int w_and = 2;
  int w_strong = 2;
  int w_implies = 3;
  int w_forall = 2;
  int w_exists = 2;
  int w_derived = 1;  // each of ¬, ∨, ↔, ⊤
};

Formula random_formula(std::mt19937_64& rng, const GenOptions& opt = {});

/// Single-variable monadic formulas over P, Q and q: always within the
/// shape eval_omega supports.
GenOptions omega_gen_options(int max_depth = 4);

/// Propositional formulas over `atoms`.
GenOptions prop_gen_options(std::vector<std::string> atoms, int max_depth = 4);

}  // namespace nmfo
