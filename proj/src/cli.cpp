#include "nmfo/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nmfo/decide.hpp"
#include "nmfo/errors.hpp"
#include "nmfo/model_io.hpp"
#include "nmfo/schema.hpp"
#include "nmfo/suites.hpp"
#include "nmfo/transform.hpp"

namespace nmfo {

using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct FormulaInput {
  std::string text;
  std::string file;
  std::string schema;

  void attach(CLI::App* cmd) {
    cmd->add_option("formula", text, "formula text");
    cmd->add_option("--formula-file", file, "read the formula from a file");
    cmd->add_option("--formula-schema", schema, "named schema, e.g. sn:2 or star");
  }

  Formula get() const {
    const int given = !text.empty() + !file.empty() + !schema.empty();
    if (given != 1) throw UsageError("give exactly one of a formula, --formula-file or --formula-schema");
    if (!schema.empty()) return nmfo::schema(schema);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot read " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse(ss.str());
    }
    return parse(text);
  }
};

// Bare file names that do not exist locally are looked up in the data directory.
std::string resolve_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
#ifdef NMFO_DATA_DIR
  const fs::path alt = fs::path(NMFO_DATA_DIR) / path;
  if (fs::exists(alt)) return alt.string();
#endif
  return path;
}

std::pair<std::string, std::string> split_assignment(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

void emit_value(std::ostream& out, bool as_json, const Rational& v) {
  if (as_json)
    out << json{{"value", v.str()}}.dump() << "\n";
  else
    out << v << "\n";
}

int value_status(const Rational& v) { return v == Rational(1) ? 0 : 1; }

json assignment_json(const std::map<std::string, Rational>& a) {
  json j = json::object();
  for (const auto& [k, v] : a) j[k] = v.str();
  return j;
}

json optional_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json classification_json(const Classification& c) {
  json laws = json::object();
  for (std::size_t i = 1; i < c.laws.size(); ++i) laws[std::to_string(i)] = optional_json(c.laws[i]);
  return {{"chain", c.chain.name()},
          {"has_fixpoint", c.has_fixpoint},
          {"all_have_predecessor", c.all_have_predecessor},
          {"complete", c.complete},
          {"laws", laws},
          {"cup", optional_json(c.cup)},
          {"cdown", optional_json(c.cdown)},
          {"bp", optional_json(c.bp)},
          {"sn_threshold", c.sn_threshold ? json(*c.sn_threshold) : json(nullptr)}};
}

std::string tri(const std::optional<bool>& b) { return b ? (*b ? "holds" : "fails") : "unknown"; }

json pairs_json(const std::vector<std::pair<Rational, Rational>>& pairs) {
  json j = json::array();
  for (const auto& [a, b] : pairs) j.push_back({a.str(), b.str()});
  return j;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent minimum and Goedel first-order logic workbench", "nmfo"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string chain_name, model_path, alpha_text, source_name, target_name, suite_name;
  std::vector<std::string> assigns;
  int max_domain = 2;
  std::size_t budget = 5'000'000;
  bool no_fixpoint = false, timing = false;
  std::uint64_t seed = 1;
  std::optional<int> samples;

  FormulaInput fin;

  auto* eval_cmd = app.add_subcommand("eval", "value of a formula in a model or under an assignment");
  fin.attach(eval_cmd);
  eval_cmd->add_option("--model", model_path, "model JSON file");
  eval_cmd->add_option("--chain", chain_name, "chain for a propositional assignment");
  eval_cmd->add_option("--assign", assigns, "atom=value (with --chain) or variable=individual (with --model)")
      ->allow_extra_args(false);

  auto* omega_cmd = app.add_subcommand("eval-omega", "value of a closed formula in an omega-model");
  fin.attach(omega_cmd);
  omega_cmd->add_option("--model", model_path, "omega-model JSON file")->required();

  auto* valid_cmd = app.add_subcommand("valid", "validity on a finite chain");
  fin.attach(valid_cmd);
  valid_cmd->add_option("--chain", chain_name)->required();
  valid_cmd->add_option("--max-domain", max_domain, "domain bound for first-order formulas");
  valid_cmd->add_option("--budget", budget, "maximum number of models");

  auto* search_cmd = app.add_subcommand("search", "countermodel search on a finite chain");
  fin.attach(search_cmd);
  search_cmd->add_option("--chain", chain_name)->required();
  search_cmd->add_option("--max-domain", max_domain);
  search_cmd->add_option("--budget", budget);

  auto* classify_cmd = app.add_subcommand("classify", "predicted properties of a chain");
  classify_cmd->add_option("--chain", chain_name)->required();

  auto* translate_cmd = app.add_subcommand("translate", "star translation of a formula");
  fin.attach(translate_cmd);

  auto* rotate_cmd = app.add_subcommand("rotate", "rotation of a Goedel chain or model");
  rotate_cmd->add_option("--chain", chain_name);
  rotate_cmd->add_option("--model", model_path);
  rotate_cmd->add_flag("--no-fixpoint", no_fixpoint);

  auto* cut_cmd = app.add_subcommand("cut", "cut model at alpha");
  cut_cmd->add_option("--model", model_path)->required();
  cut_cmd->add_option("--alpha", alpha_text)->required();

  auto* collapse_cmd = app.add_subcommand("collapse", "positive collapse of a model");
  collapse_cmd->add_option("--model", model_path)->required();

  auto* embed_cmd = app.add_subcommand("embed", "embedding of a finite NM-chain");
  embed_cmd->add_option("--source", source_name)->required();
  embed_cmd->add_option("--target", target_name)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite_name, "suite name or 'all'")->required();
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--samples", samples);
  verify_cmd->add_flag("--timing", timing, "include elapsed times");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (eval_cmd->parsed()) {
    const Formula f = fin.get();
    if (!model_path.empty()) {
      if (!chain_name.empty()) throw UsageError("give either --model or --chain");
      AnyModel any = load_model(resolve_path(model_path));
      if (auto* om = std::get_if<OmegaModel>(&any)) {
        const OmegaValue v = eval_omega(*om, f);
        if (!v.ok()) throw UsageError("use eval-omega for omega-models");
        emit_value(out, as_json, v.value);
        return value_status(v.value);
      }
      const auto& m = std::get<FiniteModel>(any);
      Valuation val;
      for (const auto& a : assigns) val.insert(split_assignment(a));
      const Rational v = eval(m, val, f).value();
      emit_value(out, as_json, v);
      return value_status(v);
    }
    if (chain_name.empty()) throw UsageError("eval needs --model or --chain");
    const ChainSpec c = ChainSpec::parse(chain_name);
    std::map<std::string, Rational> a;
    for (const auto& s : assigns) {
      auto [name, val] = split_assignment(s);
      a[name] = Rational::parse(val);
    }
    const Rational v = eval_prop(c, a, f).value();
    emit_value(out, as_json, v);
    return value_status(v);
  }

  if (omega_cmd->parsed()) {
    const Formula f = fin.get();
    const OmegaModel m = omega_model_from_json(
        [&] {
          std::ifstream in(resolve_path(model_path));
          if (!in) throw Error("cannot read " + model_path);
          return json::parse(in);
        }());
    const OmegaValue v = eval_omega(m, f);
    switch (v.status) {
      case OmegaValue::Status::Value:
        emit_value(out, as_json, v.value);
        return value_status(v.value);
      case OmegaValue::Status::Unsafe:
        if (as_json)
          out << json{{"unsafe", v.detail}}.dump() << "\n";
        else
          out << "unsafe: " << v.detail << "\n";
        return 1;
      case OmegaValue::Status::Unsupported: throw UsageError("unsupported formula shape: " + v.detail);
    }
  }

  if (valid_cmd->parsed() || search_cmd->parsed()) {
    const Formula f = fin.get();
    const ChainSpec c = ChainSpec::parse(chain_name);
    if (valid_cmd->parsed() && f.is_quantifier_free()) {
      bool zeroary = true;
      for (const auto& [name, arity] : predicate_arities(f)) zeroary = zeroary && arity == 0;
      if (zeroary) {
        const PropResult r = prop_valid(c, f);
        if (as_json) {
          json j = {{"valid", r.valid}};
          if (!r.valid) j["counterexample"] = {{"assignment", assignment_json(r.counter)}, {"value", r.value.str()}};
          out << j.dump() << "\n";
        } else if (r.valid) {
          out << "valid\n";
        } else {
          out << "invalid\n";
          for (const auto& [k, v] : r.counter) out << "  " << k << " = " << v << "\n";
          out << "  value " << r.value << "\n";
        }
        return r.valid ? 0 : 1;
      }
    }
    const SearchResult s = search_countermodel(c, f, max_domain, budget);
    const std::string bound = "domain <= " + std::to_string(max_domain);
    switch (s.status) {
      case SearchResult::Status::None:
        if (as_json)
          out << json{{"countermodel", nullptr}, {"max_domain", max_domain}, {"models_checked", s.models_checked}}.dump()
              << "\n";
        else
          out << (valid_cmd->parsed() ? "valid" : "no countermodel") << " (" << bound << ", " << s.models_checked
              << " models)\n";
        return 0;
      case SearchResult::Status::Found:
        if (as_json)
          out << json{{"countermodel", to_json(*s.model)}, {"value", s.value.str()}}.dump() << "\n";
        else
          out << (valid_cmd->parsed() ? "invalid" : "countermodel") << "\n"
              << to_json(*s.model).dump() << "\n  value " << s.value << "\n";
        return 1;
      case SearchResult::Status::BudgetExceeded:
        if (as_json)
          out << json{{"budget_exceeded", s.models_checked}}.dump() << "\n";
        else
          out << "budget exceeded after " << s.models_checked << " models\n";
        return 1;
    }
  }

  if (classify_cmd->parsed()) {
    const Classification c = classify_chain(ChainSpec::parse(chain_name));
    if (as_json) {
      out << classification_json(c).dump() << "\n";
      return 0;
    }
    out << "chain " << c.chain.name() << "\n"
        << "  negation fixpoint: " << (c.has_fixpoint ? "yes" : "no") << "\n"
        << "  every element above 0 has a predecessor: " << (c.all_have_predecessor ? "yes" : "no") << "\n"
        << "  complete: " << (c.complete ? "yes" : "no") << "\n";
    for (std::size_t i = 1; i < c.laws.size(); ++i) out << "  law " << i << ": " << tri(c.laws[i]) << "\n";
    out << "  cup: " << tri(c.cup) << "\n  cdown: " << tri(c.cdown) << "\n  bp: " << tri(c.bp) << "\n";
    if (c.sn_threshold) out << "  sn valid for n >= " << *c.sn_threshold << "\n";
    return 0;
  }

  if (translate_cmd->parsed()) {
    const std::string s = print(star(fin.get()), PrintStyle::Compact);
    if (as_json)
      out << json{{"formula", s}}.dump() << "\n";
    else
      out << s << "\n";
    return 0;
  }

  if (rotate_cmd->parsed()) {
    const bool fix = !no_fixpoint;
    if (!model_path.empty()) {
      const FiniteModel m = finite_model_from_json(json::parse(std::ifstream(resolve_path(model_path))));
      out << to_json(rotate_model(m, fix)).dump() << "\n";
      return 0;
    }
    if (chain_name.empty()) throw UsageError("rotate needs --chain or --model");
    const Rotation r = rotate(ChainSpec::parse(chain_name), fix);
    if (as_json) {
      out << json{{"chain", r.chain.name()}, {"correspondence", pairs_json(r.correspondence)}}.dump() << "\n";
    } else {
      out << r.chain.name() << "\n";
      for (const auto& [a, b] : r.correspondence) out << "  " << a << " -> " << b << "\n";
    }
    return 0;
  }

  if (cut_cmd->parsed() || collapse_cmd->parsed()) {
    AnyModel any = load_model(resolve_path(model_path));
    json j;
    if (cut_cmd->parsed()) {
      const Rational alpha = Rational::parse(alpha_text);
      j = std::visit([&](const auto& m) { return to_json(cut_model(m, alpha)); }, any);
    } else {
      j = std::visit([](const auto& m) { return to_json(positive_collapse(m)); }, any);
    }
    out << j.dump() << "\n";
    return 0;
  }

  if (embed_cmd->parsed()) {
    const ChainEmbedding e = embed_finite(ChainSpec::parse(source_name), ChainSpec::parse(target_name));
    const EmbeddingCheck chk = check_embedding(e);
    if (as_json) {
      json j = {{"source", e.source.name()}, {"target", e.target.name()}, {"map", pairs_json(e.map)}, {"ok", chk.ok}};
      if (!chk.ok) j["counterexample"] = chk.counterexample;
      out << j.dump() << "\n";
    } else {
      out << e.source.name() << " -> " << e.target.name() << "\n";
      for (const auto& [a, b] : e.map) out << "  " << a << " -> " << b << "\n";
      out << (chk.ok ? "embedding" : "not an embedding: " + chk.counterexample) << "\n";
    }
    return chk.ok ? 0 : 1;
  }

  if (verify_cmd->parsed()) {
    if (samples && *samples < 1) throw UsageError("--samples must be positive");
    std::vector<std::string> names;
    if (suite_name == "all")
      names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite_name) != suite_names().end())
      names = {suite_name};
    else
      throw UsageError("unknown suite '" + suite_name + "'");
    SuiteOptions opt{seed, samples};
    bool pass = true;
    json reports = json::array();
    for (const auto& name : names) {
      const VerdictReport r = verify_suite(name, opt);
      pass = pass && r.pass();
      if (as_json)
        reports.push_back(to_json(r, timing));
      else
        out << to_text(r, timing);
    }
    if (as_json) out << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    return pass ? 0 : 1;
  }
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace nmfo
