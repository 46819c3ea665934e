#include "nmfo/generate.hpp"

#include <algorithm>

namespace nmfo {

namespace {

enum class Shape { Atom, Bottom, And, Strong, Implies, Forall, Exists, Not, Or, Iff, Top };

class Generator {
 public:
  Generator(std::mt19937_64& rng, const GenOptions& opt) : rng_(rng), opt_(opt) {
    for (const auto& [name, arity] : opt.predicates) (arity == 0 ? zeroary_ : nary_).push_back({name, arity});
  }

  Formula run(int depth, std::vector<std::string>& bound) {
    if (depth >= opt_.max_depth) return leaf(bound);
    std::vector<std::pair<Shape, int>> table = {
        {Shape::Atom, opt_.w_atom},       {Shape::Bottom, opt_.w_bottom},   {Shape::And, opt_.w_and},
        {Shape::Strong, opt_.w_strong},   {Shape::Implies, opt_.w_implies},
    };
    if (!opt_.variables.empty()) {
      table.push_back({Shape::Forall, opt_.w_forall});
      if (opt_.allow_exists) table.push_back({Shape::Exists, opt_.w_exists});
    }
    if (opt_.derived)
      for (Shape s : {Shape::Not, Shape::Or, Shape::Iff, Shape::Top}) table.push_back({s, opt_.w_derived});
    int total = 0;
    for (const auto& [s, w] : table) total += w;
    int roll = std::uniform_int_distribution<int>(0, total - 1)(rng_);
    Shape pick = Shape::Atom;
    for (const auto& [s, w] : table) {
      if (roll < w) {
        pick = s;
        break;
      }
      roll -= w;
    }
    switch (pick) {
      case Shape::Atom: return atom(bound);
      case Shape::Bottom: return Formula::bottom();
      case Shape::Top: return Formula::top();
      case Shape::Not: return Formula::neg(run(depth + 1, bound));
      case Shape::Forall:
      case Shape::Exists: {
        const std::string v = opt_.variables[pick_index(opt_.variables.size())];
        bound.push_back(v);
        Formula body = run(depth + 1, bound);
        bound.pop_back();
        return pick == Shape::Forall ? Formula::forall(v, body) : Formula::exists(v, body);
      }
      default: {
        Formula a = run(depth + 1, bound);
        Formula b = run(depth + 1, bound);
        switch (pick) {
          case Shape::And: return Formula::conj(a, b);
          case Shape::Strong: return Formula::strong(a, b);
          case Shape::Implies: return Formula::implies(a, b);
          case Shape::Or: return Formula::disj(a, b);
          default: return Formula::iff(a, b);
        }
      }
    }
  }

 private:
  std::size_t pick_index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Formula leaf(const std::vector<std::string>& bound) {
    const int total = opt_.w_atom + opt_.w_bottom;
    if (std::uniform_int_distribution<int>(0, total - 1)(rng_) < opt_.w_bottom) return Formula::bottom();
    return atom(bound);
  }

  Formula atom(const std::vector<std::string>& bound) {
    const bool can_nary = !nary_.empty() && (!opt_.closed || !bound.empty()) && !opt_.variables.empty();
    if (!can_nary && zeroary_.empty()) return Formula::bottom();
    std::size_t choices = zeroary_.size() + (can_nary ? nary_.size() : 0);
    std::size_t i = pick_index(choices);
    if (i < zeroary_.size()) return Formula::atom(zeroary_[i].first);
    const auto& [name, arity] = nary_[i - zeroary_.size()];
    const std::vector<std::string>& pool = opt_.closed ? bound : opt_.variables;
    std::vector<std::string> args;
    for (int k = 0; k < arity; ++k) args.push_back(pool[pick_index(pool.size())]);
    return Formula::atom(name, args);
  }

  std::mt19937_64& rng_;
  const GenOptions& opt_;
  std::vector<std::pair<std::string, int>> zeroary_;
  std::vector<std::pair<std::string, int>> nary_;
};

}  // namespace

Formula random_formula(std::mt19937_64& rng, const GenOptions& opt) {
  std::vector<std::string> bound;
  return Generator(rng, opt).run(0, bound);
}

GenOptions omega_gen_options(int max_depth) {
  GenOptions o;
  o.max_depth = max_depth;
  o.predicates = {{"P", 1}, {"Q", 1}, {"q", 0}};
  o.variables = {"x"};
  return o;
}

GenOptions prop_gen_options(std::vector<std::string> atoms, int max_depth) {
  GenOptions o;
  o.max_depth = max_depth;
  o.predicates.clear();
  for (auto& a : atoms) o.predicates.push_back({std::move(a), 0});
  o.variables.clear();
  o.w_forall = o.w_exists = 0;
  return o;
}

}  // namespace nmfo
