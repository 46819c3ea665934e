#include "nmfo/decide.hpp"

#include <unordered_map>
#include <vector>

#include "nmfo/errors.hpp"

namespace nmfo {

namespace {

// Formula DAG over carrier indices 0..n-1, children before parents.
struct Program {
  enum class Op { Atom, Bottom, And, Strong, Implies };
  struct Node {
    Op op;
    int a = 0;  // atom slot or lhs node
    int b = 0;  // rhs node
  };
  std::vector<Node> nodes;
  std::vector<std::string> atoms;
};

int compile(const Formula& f, Program& p, std::unordered_map<const void*, int>& memo,
            const std::map<std::string, int>& slots) {
  if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
  Program::Node n{Program::Op::Bottom};
  switch (f.kind()) {
    case Formula::Kind::Bottom: break;
    case Formula::Kind::Atom:
      n.op = Program::Op::Atom;
      n.a = slots.at(f.predicate());
      break;
    case Formula::Kind::And:
    case Formula::Kind::Strong:
    case Formula::Kind::Implies:
      n.op = f.kind() == Formula::Kind::And      ? Program::Op::And
             : f.kind() == Formula::Kind::Strong ? Program::Op::Strong
                                                 : Program::Op::Implies;
      n.a = compile(f.lhs(), p, memo, slots);
      n.b = compile(f.rhs(), p, memo, slots);
      break;
    default: throw Error("propositional validity needs a quantifier-free formula");
  }
  p.nodes.push_back(n);
  const int idx = static_cast<int>(p.nodes.size()) - 1;
  memo.emplace(f.id(), idx);
  return idx;
}

}  // namespace

PropResult prop_valid(const ChainSpec& c, const Formula& f) {
  if (!c.is_finite()) throw Error("propositional validity needs a finite chain, not " + c.name());
  if (!f.is_quantifier_free()) throw Error("propositional validity needs a quantifier-free formula");
  Program p;
  std::map<std::string, int> slots;
  for (const auto& [name, arity] : predicate_arities(f)) {
    if (arity != 0) throw Error("predicate '" + name + "' is not 0-ary");
    slots[name] = static_cast<int>(p.atoms.size());
    p.atoms.push_back(name);
  }
  std::unordered_map<const void*, int> memo;
  const int root = compile(f, p, memo, slots);

  const int top = c.size() - 1;
  const bool nm = c.is_nm();
  std::vector<int> assign(p.atoms.size(), 0);
  std::vector<int> val(p.nodes.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
      const auto& n = p.nodes[i];
      const int x = val[static_cast<std::size_t>(n.a)];
      const int y = val[static_cast<std::size_t>(n.b)];
      int v = 0;
      switch (n.op) {
        case Program::Op::Atom: v = assign[static_cast<std::size_t>(n.a)]; break;
        case Program::Op::Bottom: v = 0; break;
        case Program::Op::And: v = std::min(x, y); break;
        case Program::Op::Strong: v = (nm && x <= top - y) ? 0 : std::min(x, y); break;
        case Program::Op::Implies: v = x <= y ? top : (nm ? std::max(top - x, y) : y); break;
      }
      val[i] = v;
    }
    if (val[static_cast<std::size_t>(root)] != top) {
      PropResult r;
      r.valid = false;
      for (std::size_t i = 0; i < p.atoms.size(); ++i) r.counter[p.atoms[i]] = Rational(assign[i], top);
      r.value = Rational(val[static_cast<std::size_t>(root)], top);
      return r;
    }
    std::size_t k = assign.size();
    while (k > 0 && ++assign[k - 1] > top) assign[--k] = 0;
    if (k == 0) return {};
  }
}

SearchResult search_countermodel(const ChainSpec& c, const Formula& f, int max_domain, std::size_t budget) {
  if (!c.is_finite()) throw Error("countermodel search needs a finite chain, not " + c.name());
  if (max_domain < 1) throw Error("max domain must be at least 1");
  const auto signature = predicate_arities(f);
  SearchResult r;
  for (int d = 1; d <= max_domain; ++d) {
    const std::size_t count = count_models(c, d, signature);
    if (count > budget - r.models_checked) {
      r.status = SearchResult::Status::BudgetExceeded;
      return r;
    }
    for_each_model(c, d, signature, [&](const FiniteModel& m) {
      ++r.models_checked;
      Rational v = model_value_raw(m, f);
      if (v < Rational(1)) {
        r.status = SearchResult::Status::Found;
        r.model = m;
        r.value = std::move(v);
        return false;
      }
      return true;
    });
    if (r.status == SearchResult::Status::Found) return r;
  }
  return r;
}

Classification classify_chain(const ChainSpec& c) {
  Classification out(c);
  out.has_fixpoint = c.has_fixpoint();
  out.all_have_predecessor = c.all_have_predecessor();
  out.complete = c.is_complete();
  if (c.is_nm()) {
    for (int i = 1; i <= 14; ++i) out.laws[static_cast<std::size_t>(i)] = true;
    for (int i = 15; i <= 18; ++i) out.laws[static_cast<std::size_t>(i)] = out.all_have_predecessor;
    out.cup = out.cdown = out.all_have_predecessor;
    out.bp = !out.has_fixpoint;
    if (c.is_finite()) out.sn_threshold = c.size() / 2;
    return out;
  }
  switch (c.kind()) {
    case ChainKind::Gfin:
    case ChainKind::Gup: out.cup = out.cdown = true; break;
    case ChainKind::Gdown:
      out.cup = false;
      out.cdown = true;
      break;
    default: out.cup = out.cdown = false;
  }
  return out;
}

}  // namespace nmfo
