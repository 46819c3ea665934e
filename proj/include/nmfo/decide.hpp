#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nmfo/chain.hpp"
#include "nmfo/finite_model.hpp"
#include "nmfo/formula.hpp"

namespace nmfo {

struct PropResult {
  bool valid = true;
  /// First refuting assignment in canonical order (atoms by name, last atom
  /// varying fastest, values ascending).
  std::map<std::string, Rational> counter;
  /// Value of the formula under `counter`.
  Rational value{1};
};

/// Exhaustive validity over a finite chain (nm<k> or g<k>). Throws Error for
/// an infinite chain, a quantifier or a predicate of positive arity.
PropResult prop_valid(const ChainSpec& c, const Formula& f);

struct SearchResult {
  enum class Status { Found, None, BudgetExceeded };
  Status status = Status::None;
  std::optional<FiniteModel> model;
  Rational value{1};
  std::size_t models_checked = 0;
};

/// Looks for a model over domains of size 1..max_domain on which f has value
/// < 1, in for_each_model order. Reports BudgetExceeded before starting a
/// domain size whose model count would push the total over `budget`.
SearchResult search_countermodel(const ChainSpec& c, const Formula& f, int max_domain,
                                 std::size_t budget = 5'000'000);

/// Predicted properties of a chain. Empty optionals mean no
/// prediction is made.
struct Classification {
  explicit Classification(ChainSpec c) : chain(std::move(c)) {}

  ChainSpec chain;
  bool has_fixpoint = false;
  bool all_have_predecessor = false;
  bool complete = false;
  /// Shifting laws 1..18 (index 0 unused).
  std::array<std::optional<bool>, 19> laws{};
  std::optional<bool> cup;
  std::optional<bool> cdown;
  std::optional<bool> bp;
  /// Least n with S_n valid; finite NM chains only.
  std::optional<int> sn_threshold;
};

Classification classify_chain(const ChainSpec& c);

}  // namespace nmfo
