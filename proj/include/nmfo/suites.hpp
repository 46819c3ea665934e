#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nmfo/chain.hpp"
#include "nmfo/omega_model.hpp"

namespace nmfo {

/// Something that reproduces an observed value on its own: a formula plus
/// a propositional assignment, a finite model or an ω-model.
struct Witness {
  enum class Kind { Assignment, Finite, Omega };
  Kind kind = Kind::Finite;
  std::string formula;
  /// Assignment: {"chain": ..., "assignment": {...}}; otherwise model JSON.
  nlohmann::json model;
  Rational value;
};

struct Claim {
  std::string id;
  std::string params;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::optional<Witness> witness;
  double elapsed_ms = 0;
};

struct VerdictReport {
  std::string suite;
  std::vector<Claim> claims;
  std::vector<std::string> notes;

  bool pass() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random instances per sampled claim; each suite has its own default.
  std::optional<int> samples;
};

/// sn-bp, shifting, order-type, rotation-star, cut, collapse, embeddings,
/// separations, tautinc.
const std::vector<std::string>& suite_names();

/// Throws Error for an unknown suite.
VerdictReport verify_suite(std::string_view name, const SuiteOptions& opt = {});

/// Elapsed times are included only when `timing` is set, so that the same
/// invocation always yields the same bytes.
nlohmann::json to_json(const VerdictReport& r, bool timing = false);
std::string to_text(const VerdictReport& r, bool timing = false);

/// Value the witness evaluates to, recomputed from its serialized form.
Rational reevaluate(const Witness& w);

// Constructed ω-models.

/// nm-prime-inf, P(j) = 1/2 + 1/(2(j+1)), q = 1/2: the star formula gets 1/2.
OmegaModel star_countermodel();
/// Refutes shifting law 15..18 on nm-prime-inf, std-nm or a:α (α ≠ 1/2).
OmegaModel shifting_witness(const ChainSpec& c, int law);
/// Refutes cup (or cdown) on a chain with an element lacking a predecessor
/// among nm-prime-inf, std-nm, a:α, g-down (cup only) and std-g.
OmegaModel order_type_witness(const ChainSpec& c, bool cup);

}  // namespace nmfo
