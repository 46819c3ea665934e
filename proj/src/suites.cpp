#include "nmfo/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "nmfo/decide.hpp"
#include "nmfo/errors.hpp"
#include "nmfo/finite_model.hpp"
#include "nmfo/generate.hpp"
#include "nmfo/model_io.hpp"
#include "nmfo/schema.hpp"
#include "nmfo/transform.hpp"

namespace nmfo {

using nlohmann::json;

bool VerdictReport::pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sn-bp",      "shifting",   "order-type",  "rotation-star", "cut",
                                                 "collapse",   "embeddings", "separations", "tautinc"};
  return names;
}

namespace {

const Rational kOne(1);
const Rational kHalf(1, 2);

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string verdict(bool valid) { return valid ? "valid" : "invalid"; }

std::string ratio(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

Witness assignment_witness(const ChainSpec& c, const Formula& f, const std::map<std::string, Rational>& a,
                           const Rational& v) {
  json assign = json::object();
  for (const auto& [name, val] : a) assign[name] = val.str();
  return {Witness::Kind::Assignment, print(f), json{{"chain", c.name()}, {"assignment", assign}}, v};
}

Witness finite_witness(const FiniteModel& m, const Formula& f, const Rational& v) {
  return {Witness::Kind::Finite, print(f), to_json(m), v};
}

Witness omega_witness(const OmegaModel& m, const Formula& f, const Rational& v) {
  return {Witness::Kind::Omega, print(f), to_json(m), v};
}

class Builder {
 public:
  explicit Builder(std::string suite) { r_.suite = std::move(suite); }

  void start() { t0_ = Clock::now(); }

  Claim& add(std::string id, std::string params, std::string expected, std::string observed, bool pass,
             std::optional<Witness> w = std::nullopt) {
    r_.claims.push_back(
        {std::move(id), std::move(params), std::move(expected), std::move(observed), pass, std::move(w), ms_since(t0_)});
    t0_ = Clock::now();
    return r_.claims.back();
  }

  void note(std::string n) { r_.notes.push_back(std::move(n)); }
  VerdictReport done() { return std::move(r_); }

 private:
  VerdictReport r_;
  Clock::time_point t0_ = Clock::now();
};

// Tally over sampled instances, keeping the first failure as the witness.
struct Tally {
  int ok = 0;
  int total = 0;
  std::optional<Witness> first_bad;

  void record(bool good, const std::function<Witness()>& witness) {
    ++total;
    if (good)
      ++ok;
    else if (!first_bad)
      first_bad = witness();
  }
  bool pass() const { return ok == total; }
  std::string observed() const { return ratio(ok, total); }
};

GenOptions closed_monadic(int depth, bool exists) {
  GenOptions o;
  o.max_depth = depth;
  o.predicates = {{"P", 1}, {"Q", 1}, {"p", 0}, {"q", 0}};
  o.variables = {"x", "y"};
  o.allow_exists = exists;
  return o;
}

std::map<std::string, int> signature_of(const Formula& f) {
  auto sig = predicate_arities(f);
  return sig;
}

// A random model of `c` on which f is not unsafe, or nullopt after a number
// of attempts.
std::optional<std::pair<OmegaModel, Rational>> safe_sample(const ChainSpec& c, const Formula& f,
                                                           const std::map<std::string, int>& sig,
                                                           std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    OmegaModel m = random_omega_model(c, sig, rng);
    OmegaValue v = eval_omega(m, f);
    if (v.status == OmegaValue::Status::Unsupported) throw Error("unsupported formula shape: " + v.detail);
    if (v.ok()) return std::make_pair(std::move(m), std::move(v.value));
  }
  return std::nullopt;
}

int samples_or(const SuiteOptions& opt, int fallback) { return opt.samples.value_or(fallback); }

// ---------------------------------------------------------------------------

VerdictReport suite_sn_bp(const SuiteOptions&) {
  Builder b("sn-bp");
  b.note("S_n valid on nm<k> iff k < 2n+2; BP valid iff nm<k> has no negation fixpoint (k even)");
  for (int size = 2; size <= 9; ++size)
    for (int n = 1; n <= 3; ++n) {
      const ChainSpec c = ChainSpec::nm_finite(size);
      const Formula f = schema("sn", {n});
      const PropResult r = prop_valid(c, f);
      const bool expected = size < 2 * n + 2;
      std::optional<Witness> w;
      if (!r.valid) w = assignment_witness(c, f, r.counter, r.value);
      b.add("sn" + std::to_string(n) + "/" + c.name(), "n=" + std::to_string(n) + " size=" + std::to_string(size),
            verdict(expected), verdict(r.valid), expected == r.valid, std::move(w));
    }
  for (int size = 2; size <= 9; ++size) {
    const ChainSpec c = ChainSpec::nm_finite(size);
    const Formula f = schema("bp", {});
    const PropResult r = prop_valid(c, f);
    const bool expected = !c.has_fixpoint();
    std::optional<Witness> w;
    if (!r.valid) w = assignment_witness(c, f, r.counter, r.value);
    b.add("bp/" + c.name(), "size=" + std::to_string(size), verdict(expected), verdict(r.valid), expected == r.valid,
          std::move(w));
  }
  return b.done();
}

VerdictReport suite_shifting(const SuiteOptions& opt) {
  Builder b("shifting");
  const int samples = samples_or(opt, 200);
  std::mt19937_64 rng(opt.seed);
  b.note("finite chains: exhaustive monadic models, domain sizes 1..2");
  for (int law = 1; law <= 18; ++law) {
    const Formula f = shifting_law(law);
    for (int size = 2; size <= 4; ++size) {
      const ChainSpec c = ChainSpec::nm_finite(size);
      const bool expected = *classify_chain(c).laws[static_cast<std::size_t>(law)];
      const SearchResult s = search_countermodel(c, f, 2);
      std::optional<Witness> w;
      std::string observed = "valid";
      if (s.status == SearchResult::Status::Found) {
        observed = "countermodel with value " + s.value.str();
        w = finite_witness(*s.model, f, s.value);
      } else if (s.status == SearchResult::Status::BudgetExceeded) {
        observed = "budget exceeded";
      }
      const bool observed_valid = s.status == SearchResult::Status::None;
      b.add("law" + std::to_string(law) + "/" + c.name(), "domain<=2", verdict(expected), observed,
            s.status != SearchResult::Status::BudgetExceeded && expected == observed_valid, std::move(w));
    }
  }
  for (int law = 15; law <= 18; ++law) {
    const Formula f = shifting_law(law);
    for (const char* name : {"nm-prime-inf", "std-nm", "a:3/4"}) {
      const ChainSpec c = ChainSpec::parse(name);
      const OmegaModel m = shifting_witness(c, law);
      const OmegaValue v = eval_omega(m, f);
      const bool fails = v.ok() && v.value < kOne;
      b.add("law" + std::to_string(law) + "/" + c.name() + "/witness", "constructed omega-model", "< 1",
            v.ok() ? v.value.str() : "unsafe", fails, v.ok() ? std::optional(omega_witness(m, f, v.value)) : std::nullopt);
    }
    for (const char* name : {"nm-inf", "nm-inf-minus", "nm-prime-inf-minus"}) {
      const ChainSpec c = ChainSpec::parse(name);
      Tally t;
      for (int i = 0; i < samples; ++i) {
        auto s = safe_sample(c, f, signature_of(f), rng);
        if (!s) {
          t.record(false, [&] { return Witness{Witness::Kind::Omega, print(f), json::object(), Rational(0)}; });
          continue;
        }
        t.record(s->second == kOne, [&] { return omega_witness(s->first, f, s->second); });
      }
      b.add("law" + std::to_string(law) + "/" + c.name() + "/random", std::to_string(samples) + " safe omega-models",
            "1 on all", t.observed(), t.pass(), t.first_bad);
    }
  }
  return b.done();
}

VerdictReport suite_order_type(const SuiteOptions& opt) {
  Builder b("order-type");
  const int samples = samples_or(opt, 200);
  std::mt19937_64 rng(opt.seed);
  const Formula cup = schema("cup", {});
  const Formula cdown = schema("cdown", {});
  for (const auto& [label, f, is_cup] : {std::tuple{"cup", cup, true}, std::tuple{"cdown", cdown, false}}) {
    for (const char* name : {"nm2", "nm3", "nm4", "g2", "g3", "g4"}) {
      const ChainSpec c = ChainSpec::parse(name);
      const Classification cl = classify_chain(c);
      const bool expected = *(is_cup ? cl.cup : cl.cdown);
      const SearchResult s = search_countermodel(c, f, 3);
      std::optional<Witness> w;
      if (s.model) w = finite_witness(*s.model, f, s.value);
      const bool valid = s.status == SearchResult::Status::None;
      b.add(std::string(label) + "/" + c.name(), "domain<=3", verdict(expected),
            valid ? "valid" : "countermodel with value " + s.value.str(), valid == expected, std::move(w));
    }
    std::vector<const char*> failing = {"nm-prime-inf", "std-nm", "a:3/4", "std-g"};
    if (is_cup) failing.push_back("g-down");
    for (const char* name : failing) {
      const ChainSpec c = ChainSpec::parse(name);
      const OmegaModel m = order_type_witness(c, is_cup);
      const OmegaValue v = eval_omega(m, f);
      const bool exact = c.kind() == ChainKind::NMprimeInf;
      const bool pass = v.ok() && (exact ? v.value == kHalf : v.value < kOne);
      b.add(std::string(label) + "/" + c.name() + "/witness", "constructed omega-model", exact ? "1/2" : "< 1",
            v.ok() ? v.value.str() : "unsafe", pass, v.ok() ? std::optional(omega_witness(m, f, v.value)) : std::nullopt);
    }
    std::vector<const char*> holding = {"nm-inf", "nm-inf-minus", "nm-prime-inf-minus", "g-up"};
    if (!is_cup) holding.push_back("g-down");
    for (const char* name : holding) {
      const ChainSpec c = ChainSpec::parse(name);
      Tally t;
      for (int i = 0; i < samples; ++i) {
        auto s = safe_sample(c, f, signature_of(f), rng);
        if (!s) {
          t.record(false, [&] { return Witness{Witness::Kind::Omega, print(f), json::object(), Rational(0)}; });
          continue;
        }
        t.record(s->second == kOne, [&] { return omega_witness(s->first, f, s->second); });
      }
      b.add(std::string(label) + "/" + c.name() + "/random", std::to_string(samples) + " safe omega-models",
            "1 on all", t.observed(), t.pass(), t.first_bad);
    }
  }
  return b.done();
}

VerdictReport suite_rotation_star(const SuiteOptions& opt) {
  Builder b("rotation-star");
  const int samples = samples_or(opt, 200);
  std::mt19937_64 rng(opt.seed);
  b.note("corpus formulas are existential-free: the star translation reads exists as ~forall~, which differs from exists over Goedel chains");
  b.note("values are compared through the rotation correspondence (0 to 0, the rest onto the positive elements)");
  for (int n = 2; n <= 4; ++n) {
    const ChainSpec g = ChainSpec::g_finite(n);
    const ChainSpec nm = rotate(g, true).chain;
    const ChainSpec nm_nofix = rotate(g, false).chain;
    Tally corr, corr_nofix, collapse, avoid;
    for (int i = 0; i < samples; ++i) {
      const Formula f = random_formula(rng, closed_monadic(4, false));
      const Formula fs = star(f);
      const auto sig = signature_of(f);
      const int d = std::uniform_int_distribution<int>(1, 3)(rng);
      const FiniteModel m = random_model(g, d, sig, rng);
      const Rational v = model_value_raw(m, f);
      const FiniteModel mr = rotate_model(m, true);
      const Rational w = model_value_raw(mr, fs);
      corr.record(rotation_image(g, true, v) == w, [&] { return finite_witness(m, f, v); });
      const FiniteModel mr2 = rotate_model(m, false);
      const Rational w2 = model_value_raw(mr2, fs);
      corr_nofix.record(rotation_image(g, false, v) == w2, [&] { return finite_witness(m, f, v); });

      // Collapse and fixpoint avoidance on an arbitrary model of the rotation.
      const FiniteModel mm = random_model(nm, d, sig, rng);
      const FiniteModel mp = positive_collapse(mm);
      const Rational a = model_value_raw(mm, fs);
      bool hit_fixpoint = false;
      const Rational ap = model_value_raw(mp, fs, [&](const Formula&, const Rational& x) {
        if (x == kHalf) hit_fixpoint = true;
      });
      collapse.record(a == ap, [&] { return finite_witness(mm, fs, a); });
      avoid.record(!hit_fixpoint, [&] { return finite_witness(mp, fs, ap); });
    }
    const std::string p = std::to_string(samples) + " random formulas and models";
    b.add("correspondence/" + g.name(), p + ", rotation " + nm.name(), "all equal", corr.observed(), corr.pass(),
          corr.first_bad);
    b.add("correspondence-nofix/" + g.name(), p + ", rotation " + nm_nofix.name(), "all equal", corr_nofix.observed(),
          corr_nofix.pass(), corr_nofix.first_bad);
    b.add("collapse/" + nm.name(), p, "all equal", collapse.observed(), collapse.pass(), collapse.first_bad);
    b.add("fixpoint-avoidance/" + nm.name(), p, "no subformula value 1/2", avoid.observed(), avoid.pass(),
          avoid.first_bad);

    // Validity transfer on propositional formulas, exhaustively.
    Tally transfer;
    std::vector<Formula> corpus;
    for (int k = 1; k <= 3; ++k) corpus.push_back(schema("sn", {k}));
    for (int k = 1; k <= 3; ++k) corpus.push_back(schema("sep", {k}));
    for (int i = 0; i < 40; ++i) corpus.push_back(random_formula(rng, prop_gen_options({"p", "q", "r"}, 4)));
    for (const auto& f : corpus) {
      const PropResult rg = prop_valid(g, f);
      const PropResult rn = prop_valid(nm, star(f));
      transfer.record(rg.valid == rn.valid, [&] {
        return rg.valid ? assignment_witness(nm, star(f), rn.counter, rn.value)
                        : assignment_witness(g, f, rg.counter, rg.value);
      });
    }
    b.add("validity/" + g.name(), std::to_string(corpus.size()) + " propositional formulas",
          "valid on " + g.name() + " iff star valid on " + nm.name(), transfer.observed(), transfer.pass(),
          transfer.first_bad);
  }
  return b.done();
}

VerdictReport suite_cut(const SuiteOptions& opt) {
  Builder b("cut");
  const int samples = samples_or(opt, 200);
  std::mt19937_64 rng(opt.seed);
  b.note("checks that the value of the formula in the cut model is the cut of its value in the original model");
  for (const char* name : {"nm-inf", "std-nm"}) {
    const ChainSpec c = ChainSpec::parse(name);
    Tally t;
    for (int i = 0; i < samples; ++i) {
      const Formula f = random_formula(rng, closed_monadic(4, true));
      const int d = std::uniform_int_distribution<int>(1, 3)(rng);
      const FiniteModel m = random_model(c, d, signature_of(f), rng);
      Rational alpha;
      do alpha = sample_element(c, rng);
      while (alpha.sign() == 0 || alpha == kOne);
      const Rational v = model_value_raw(m, f);
      const FiniteModel mc = cut_model(m, alpha);
      const Rational vc = model_value_raw(mc, f);
      t.record(vc == cut_value(alpha, v), [&] { return finite_witness(m, f, v); });
    }
    b.add("finite/" + c.name(), std::to_string(samples) + " random models, formulas and alpha", "value of cut = cut of value",
          t.observed(), t.pass(), t.first_bad);
  }
  {
    const ChainSpec c = ChainSpec::nm_inf();
    Tally t;
    const int n = samples / 2;
    for (int i = 0; i < n; ++i) {
      const Formula f = random_formula(rng, omega_gen_options(4));
      const OmegaModel m = random_omega_model(c, {{"P", 1}, {"Q", 1}, {"q", 0}}, rng);
      Rational alpha;
      do alpha = sample_element(c, rng);
      while (alpha.sign() == 0 || alpha == kOne);
      const OmegaValue v = eval_omega(m, f);
      const OmegaValue vc = eval_omega(cut_model(m, alpha), f);
      const bool good = v.ok() && vc.ok() && vc.value == cut_value(alpha, v.value);
      t.record(good, [&] { return omega_witness(m, f, v.value); });
    }
    b.add("omega/" + c.name(), std::to_string(n) + " random omega-models, formulas and alpha", "value of cut = cut of value",
          t.observed(), t.pass(), t.first_bad);
  }
  return b.done();
}

VerdictReport suite_collapse(const SuiteOptions& opt) {
  Builder b("collapse");
  const int samples = samples_or(opt, 200);
  std::mt19937_64 rng(opt.seed);
  b.note("collapse is checked as value equality, which implies the '= 1' form; the fixpoint transfer is checked only on complete chains");
  for (const char* name : {"nm3", "nm4", "nm5", "nm6", "nm7", "nm-inf", "nm-prime-inf", "std-nm", "a:3/4"}) {
    const ChainSpec c = ChainSpec::parse(name);
    Tally eq, avoid;
    for (int i = 0; i < samples; ++i) {
      const Formula fs = star(random_formula(rng, closed_monadic(4, true)));
      const int d = std::uniform_int_distribution<int>(1, 3)(rng);
      const FiniteModel m = random_model(c, d, signature_of(fs), rng);
      const FiniteModel mp = positive_collapse(m);
      const Rational v = model_value_raw(m, fs);
      bool hit = false;
      const Rational vp = model_value_raw(mp, fs, [&](const Formula&, const Rational& x) {
        if (x == kHalf) hit = true;
      });
      eq.record(v == vp, [&] { return finite_witness(m, fs, v); });
      avoid.record(!hit, [&] { return finite_witness(mp, fs, vp); });
    }
    const std::string p = std::to_string(samples) + " random models and star formulas";
    b.add("collapse/" + c.name(), p, "all equal", eq.observed(), eq.pass(), eq.first_bad);
    if (c.has_fixpoint())
      b.add("fixpoint-avoidance/" + c.name(), p, "no subformula value 1/2", avoid.observed(), avoid.pass(),
            avoid.first_bad);
  }
  {
    // nm-inf-minus is complete; adding back 1/2 gives nm-inf.
    const ChainSpec c = ChainSpec::nm_inf_minus();
    const ChainSpec cf = ChainSpec::nm_inf();
    Tally t;
    for (int i = 0; i < samples; ++i) {
      const Formula fs = star(random_formula(rng, omega_gen_options(4)));
      const OmegaModel m = positive_collapse(random_omega_model(c, {{"P", 1}, {"Q", 1}, {"q", 0}}, rng));
      const OmegaModel mf(cf, m.monadic(), m.zeroary());
      const OmegaValue v = eval_omega(m, fs);
      const OmegaValue vf = eval_omega(mf, fs);
      t.record(v.ok() && vf.ok() && v.value == vf.value, [&] { return omega_witness(m, fs, v.value); });
    }
    b.add("fixpoint-transfer/" + c.name(), std::to_string(samples) + " collapsed omega-models and star formulas",
          "same value over " + cf.name(), t.observed(), t.pass(), t.first_bad);
  }
  return b.done();
}

VerdictReport suite_embeddings(const SuiteOptions& opt) {
  Builder b("embeddings");
  std::mt19937_64 rng(opt.seed);
  const int transports = samples_or(opt, 20);
  for (int k = 2; k <= 9; ++k) {
    const ChainSpec s = ChainSpec::nm_finite(k);
    std::vector<ChainSpec> targets = {ChainSpec::nm_inf(), ChainSpec::nm_prime_inf()};
    if (k % 2 == 0) {
      targets.push_back(ChainSpec::nm_inf_minus());
      targets.push_back(ChainSpec::nm_prime_inf_minus());
    }
    for (int n = k; n <= 9; n += 2) targets.push_back(ChainSpec::nm_finite(n));
    for (const auto& t : targets) {
      const ChainEmbedding e = embed_finite(s, t);
      const EmbeddingCheck chk = check_embedding(e);
      b.add(s.name() + "->" + t.name(), "exhaustive pairs", "embedding", chk.ok ? "embedding" : chk.counterexample,
            chk.ok);
      // A refuting assignment moved along the embedding keeps its value.
      Tally tr;
      for (int i = 0; i < transports; ++i) {
        const Formula f = random_formula(rng, prop_gen_options({"p", "q", "r"}, 4));
        std::map<std::string, Rational> a, fa;
        for (const auto& name : propositional_atoms(f)) {
          a[name] = sample_element(s, rng);
          fa[name] = e.apply(a[name]);
        }
        const Rational v = eval_prop(s, a, f).value();
        const Rational w = eval_prop(t, fa, f).value();
        tr.record(e.apply(v) == w, [&] { return assignment_witness(s, f, a, v); });
      }
      b.add(s.name() + "->" + t.name() + "/transport", std::to_string(transports) + " random formulas",
            "value images agree", tr.observed(), tr.pass(), tr.first_bad);
    }
  }
  {
    // A map that breaks φ(x) = 1 - φ(1-x) must be rejected.
    const ChainSpec s = ChainSpec::nm_finite(5);
    ChainEmbedding bad{s, ChainSpec::nm_inf(), {{Rational(0), Rational(0)},
                                                {Rational(1, 4), Rational(1, 3)},
                                                {kHalf, kHalf},
                                                {Rational(3, 4), Rational(3, 4)},
                                                {kOne, kOne}}};
    const EmbeddingCheck chk = check_embedding(bad);
    b.add("reject/nm5->nm-inf", "1/4->1/3, 3/4->3/4", "rejected", chk.ok ? "accepted" : chk.counterexample, !chk.ok);
  }
  return b.done();
}

VerdictReport suite_separations(const SuiteOptions&) {
  Builder b("separations");
  b.note(
      "sep(k) has k disjuncts over p1..p(k+1). It is valid on nm<j> exactly when j <= k. The separator written for "
      "nm<n> with n-1 disjuncts is therefore refuted on nm<n> itself by a strictly decreasing assignment through all n "
      "elements; the inclusions it is meant to separate remain separated with the index shifted by one.");
  for (int k = 1; k <= 5; ++k)
    for (int j = 2; j <= 7; ++j) {
      const ChainSpec c = ChainSpec::nm_finite(j);
      const Formula f = schema("sep", {k});
      const PropResult r = prop_valid(c, f);
      const bool expected = j <= k;
      std::optional<Witness> w;
      if (!r.valid) w = assignment_witness(c, f, r.counter, r.value);
      b.add("sep" + std::to_string(k) + "/" + c.name(), "k=" + std::to_string(k) + " j=" + std::to_string(j),
            verdict(expected), verdict(r.valid), expected == r.valid, std::move(w));
    }
  for (int k = 1; k <= 5; ++k) {
    const Formula f = schema("sep", {k});
    for (const char* name : {"nm-inf", "nm-inf-minus", "nm-prime-inf", "nm-prime-inf-minus", "std-nm", "a:3/4"}) {
      const ChainSpec c = ChainSpec::parse(name);
      std::map<std::string, Rational> a;
      for (int i = 1; i <= k + 1; ++i) {
        Rational v;
        switch (c.kind()) {
          case ChainKind::NMinf:
          case ChainKind::NMinfMinus: v = kOne - Rational(1, k + 4 - i); break;
          case ChainKind::NMprimeInf:
          case ChainKind::NMprimeInfMinus: v = kHalf + Rational(1, 2 * (i + 1)); break;
          default: v = kHalf + Rational(1, 4 * (i + 1));
        }
        a["p" + std::to_string(i)] = v;
      }
      const Rational v = eval_prop(c, a, f).value();
      b.add("sep" + std::to_string(k) + "/" + c.name(), "strictly decreasing assignment", "< 1", v.str(), v < kOne,
            assignment_witness(c, f, a, v));
    }
  }
  return b.done();
}

VerdictReport suite_tautinc(const SuiteOptions& opt) {
  Builder b("tautinc");
  const int samples = samples_or(opt, 100);
  std::mt19937_64 rng(opt.seed);
  b.note("refute on an nm-inf model with value a < 1, cut at beta = 1-1/m > a, move the cut model onto nm<k> by rank");
  const ChainSpec c = ChainSpec::nm_inf();
  Tally refuted, bounded, rehoused;
  for (int i = 0; i < samples; ++i) {
    Formula f = Formula::bottom();
    std::optional<FiniteModel> m;
    Rational a;
    for (;;) {
      f = random_formula(rng, closed_monadic(4, true));
      const int d = std::uniform_int_distribution<int>(1, 3)(rng);
      m = random_model(c, d, signature_of(f), rng);
      a = model_value_raw(*m, f);
      if (a < kOne) break;
    }
    long k = 2;
    while (kOne - Rational(1, k) <= a) ++k;
    const Rational beta = kOne - Rational(1, k);
    const FiniteModel mb = cut_model(*m, beta);
    const Rational vb = model_value_raw(mb, f);
    refuted.record(vb < kOne, [&] { return finite_witness(mb, f, vb); });
    bounded.record(vb <= a, [&] { return finite_witness(mb, f, vb); });
    const Rehoused rh = rehouse_finite(mb);
    const Rational vk = model_value_raw(rh.model, f);
    const auto it = rh.rank.find(vb);
    rehoused.record(vk < kOne && it != rh.rank.end() && it->second == vk,
                    [&] { return finite_witness(rh.model, f, vk); });
  }
  const std::string p = std::to_string(samples) + " refuted formulas";
  b.add("cut-refutes", p, "cut value < 1", refuted.observed(), refuted.pass(), refuted.first_bad);
  b.add("cut-bound", p, "cut value <= a", bounded.observed(), bounded.pass(), bounded.first_bad);
  b.add("finite-rehousing", p, "value < 1 and equal to the rank image", rehoused.observed(), rehoused.pass(),
        rehoused.first_bad);
  return b.done();
}

}  // namespace

VerdictReport verify_suite(std::string_view name, const SuiteOptions& opt) {
  if (name == "sn-bp") return suite_sn_bp(opt);
  if (name == "shifting") return suite_shifting(opt);
  if (name == "order-type") return suite_order_type(opt);
  if (name == "rotation-star") return suite_rotation_star(opt);
  if (name == "cut") return suite_cut(opt);
  if (name == "collapse") return suite_collapse(opt);
  if (name == "embeddings") return suite_embeddings(opt);
  if (name == "separations") return suite_separations(opt);
  if (name == "tautinc") return suite_tautinc(opt);
  throw Error("unknown suite '" + std::string(name) + "'");
}

namespace {

const char* kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Assignment: return "assignment";
    case Witness::Kind::Finite: return "finite";
    case Witness::Kind::Omega: return "omega";
  }
  return "finite";
}

}  // namespace

json to_json(const VerdictReport& r, bool timing) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json j = {{"id", c.id},       {"params", c.params}, {"expected", c.expected},
              {"observed", c.observed}, {"pass", c.pass}};
    if (c.witness)
      j["witness"] = {{"kind", kind_name(c.witness->kind)},
                      {"formula", c.witness->formula},
                      {"model", c.witness->model},
                      {"value", c.witness->value.str()}};
    if (timing) j["elapsed_ms"] = c.elapsed_ms;
    claims.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"claims", claims}, {"notes", r.notes}, {"pass", r.pass()}};
}

std::string to_text(const VerdictReport& r, bool timing) {
  std::ostringstream out;
  out << "suite " << r.suite << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  int passed = 0;
  for (const auto& c : r.claims) {
    passed += c.pass ? 1 : 0;
    out << (c.pass ? "  pass " : "  FAIL ") << c.id << " [" << c.params << "] expected " << c.expected
        << ", observed " << c.observed;
    if (timing) out << " (" << c.elapsed_ms << " ms)";
    out << "\n";
    if (!c.pass && c.witness) out << "       witness: " << c.witness->formula << " = " << c.witness->value << "\n";
  }
  out << (r.pass() ? "PASS " : "FAIL ") << r.suite << ": " << passed << "/" << r.claims.size() << " claims\n";
  return out.str();
}

Rational reevaluate(const Witness& w) {
  const Formula f = parse(w.formula);
  switch (w.kind) {
    case Witness::Kind::Assignment: {
      const ChainSpec c = ChainSpec::parse(w.model.at("chain").get<std::string>());
      std::map<std::string, Rational> a;
      for (const auto& [name, v] : w.model.at("assignment").items()) a[name] = Rational::parse(v.get<std::string>());
      return eval_prop(c, a, f).value();
    }
    case Witness::Kind::Finite: return model_value_raw(finite_model_from_json(w.model), f);
    case Witness::Kind::Omega: {
      const OmegaValue v = eval_omega(omega_model_from_json(w.model), f);
      if (!v.ok()) throw ModelError("witness evaluation is not a value: " + v.detail);
      return v.value;
    }
  }
  return Rational(0);
}

// ---------------------------------------------------------------------------

namespace {

// Offset of a tail approaching 1/2 so that all values stay in the chain.
Rational half_tail_coeff(const ChainSpec& c) {
  switch (c.kind()) {
    case ChainKind::NMprimeInf:
    case ChainKind::StdG: return kHalf;
    case ChainKind::StdNM: return Rational(1, 4);
    case ChainKind::Aalpha:
      if (c.alpha() == kHalf) break;
      return c.alpha() - kHalf;
    default: break;
  }
  throw ModelError("no constructed witness over " + c.name());
}

EventualSeq tail_seq(const Rational& base, const Rational& coeff) { return {{}, TailExpr{base, coeff, 0}}; }

}  // namespace

OmegaModel star_countermodel() {
  return OmegaModel(ChainSpec::nm_prime_inf(), {{"P", tail_seq(kHalf, kHalf)}}, {{"q", kHalf}});
}

OmegaModel shifting_witness(const ChainSpec& c, int law) {
  if (law < 15 || law > 18) throw Error("constructed witnesses exist for laws 15..18");
  const Rational h = half_tail_coeff(c);
  // Values approach 1/2 from above (from below for law 18) and q = 1/2.
  const EventualSeq s = tail_seq(kHalf, law == 18 ? -h : h);
  return OmegaModel(c, {{"P", s}, {"Q", s}}, {{"q", kHalf}});
}

OmegaModel order_type_witness(const ChainSpec& c, bool cup) {
  if (c.kind() == ChainKind::Gdown) {
    if (!cup) throw ModelError("cdown holds on " + c.name());
    return OmegaModel(c, {{"P", tail_seq(Rational(0), kOne)}}, {});
  }
  if (c.kind() == ChainKind::StdG && cup) return OmegaModel(c, {{"P", tail_seq(Rational(0), kOne)}}, {});
  const Rational h = half_tail_coeff(c);
  return OmegaModel(c, {{"P", tail_seq(kHalf, cup ? h : -h)}}, {});
}

}  // namespace nmfo
