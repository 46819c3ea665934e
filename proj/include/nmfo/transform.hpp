#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nmfo/chain.hpp"
#include "nmfo/finite_model.hpp"
#include "nmfo/formula.hpp"
#include "nmfo/omega_model.hpp"

namespace nmfo {

/// NM-chain obtained from a Gödel chain by mirroring its non-zero part
/// around a fixpoint, which is dropped when `with_fixpoint` is false.
/// `correspondence` lists g -> image for finite g (0 ↦ 0, the rest onto the
/// positive elements); it is empty for infinite g.
struct Rotation {
  ChainSpec chain;
  std::vector<std::pair<Rational, Rational>> correspondence;
};

/// Accepts Gfin(n), Gup, Gdown; throws ChainError otherwise (StdG included).
Rotation rotate(const ChainSpec& g, bool with_fixpoint);
/// Image of a single element of g under the rotation correspondence.
Rational rotation_image(const ChainSpec& g, bool with_fixpoint, const Rational& x);
/// Model over the rotated chain with every atomic value mapped by
/// rotation_image.
FiniteModel rotate_model(const FiniteModel& m, bool with_fixpoint);

/// Squaring translation; ∃x φ is first rewritten as ¬∀x¬φ.
Formula star(const Formula& f);

/// 1 above |α|, 0 below 1-|α|, unchanged in between, |α| = max(α, 1-α).
Rational cut_value(const Rational& alpha, const Rational& v);
/// Atomic values cut at α. The chain must be NMinf or StdNM and
/// 0 < α < 1 an element of it; throws ModelError otherwise.
FiniteModel cut_model(const FiniteModel& m, const Rational& alpha);
OmegaModel cut_model(const OmegaModel& m, const Rational& alpha);

/// Keeps positive values (x > 1-x), sends the rest to 0. NM chains only.
Rational collapse_value(const Rational& v);
FiniteModel positive_collapse(const FiniteModel& m);
OmegaModel positive_collapse(const OmegaModel& m);

/// Map from a finite NM chain into another NM chain.
struct ChainEmbedding {
  ChainSpec source;
  ChainSpec target;
  std::vector<std::pair<Rational, Rational>> map;

  /// Throws EmbeddingError for an element outside the source.
  const Rational& apply(const Rational& x) const;
};

/// The explicit embedding of NMfin(k) into NMinf, NMprimeInf, their
/// fixpoint-free variants (k even) or NMfin(n) (n ≥ k, same parity).
/// Throws EmbeddingError otherwise.
ChainEmbedding embed_finite(const ChainSpec& source, const ChainSpec& target);

struct EmbeddingCheck {
  bool ok = true;
  std::string counterexample;
};

/// Injective, order preserving, endpoints and fixpoint preserved, images in
/// the target, and a homomorphism for &, →, ¬, min, max on every pair. On a
/// finite source this also gives preservation of all inf and sup.
EmbeddingCheck check_embedding(const ChainEmbedding& e);

/// A finite model over an NM chain that uses finitely many values, moved
/// onto NMfin(|C|) where C is the set of used values closed under negation
/// together with 0 and 1. `rank` maps each element of C to its image.
struct Rehoused {
  FiniteModel model;
  std::map<Rational, Rational> rank;
};
Rehoused rehouse_finite(const FiniteModel& m);

}  // namespace nmfo
