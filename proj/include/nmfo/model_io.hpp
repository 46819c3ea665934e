#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "nmfo/finite_model.hpp"
#include "nmfo/omega_model.hpp"

namespace nmfo {

// Finite model:
//   {"chain": "nm5", "domain": ["a","b"],
//    "predicates": {"P": {"(a)": "1/2", "(b)": "1"}, "q": {"()": "1/2"}},
//    "constants": {}}
// ω-model:
//   {"chain": "nm-prime-inf",
//    "monadic": {"P": {"tail": {"base": "1/2", "coeff": "1/2", "shift": 0},
//                      "exceptions": {"0": "1"}}},
//    "zeroary": {"q": "1/2"}}
// All values are "p/q" strings. Parsing throws ModelError on malformed or
// partial input and ChainError on values outside the chain.

nlohmann::json to_json(const FiniteModel& m);
FiniteModel finite_model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OmegaModel& m);
nlohmann::json to_json(const EventualSeq& s);
OmegaModel omega_model_from_json(const nlohmann::json& j);

using AnyModel = std::variant<FiniteModel, OmegaModel>;
/// ω-model when the object has a "monadic" or "zeroary" key.
AnyModel model_from_json(const nlohmann::json& j);
AnyModel load_model(const std::string& path);

}  // namespace nmfo
