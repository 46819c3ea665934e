#include "nmfo/finite_model.hpp"

#include <limits>
#include <set>

#include "nmfo/errors.hpp"

namespace nmfo {

FiniteModel::FiniteModel(ChainSpec chain, std::vector<std::string> domain)
    : chain_(std::move(chain)), domain_(std::move(domain)) {
  if (domain_.empty()) throw ModelError("domain must be non-empty");
  std::set<std::string> seen(domain_.begin(), domain_.end());
  if (seen.size() != domain_.size()) throw ModelError("domain has repeated individuals");
}

int FiniteModel::individual(const std::string& name) const {
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (domain_[i] == name) return static_cast<int>(i);
  throw ModelError("unknown individual '" + name + "'");
}

void FiniteModel::declare(const std::string& predicate, int arity) {
  if (arity < 0) throw ModelError("negative arity");
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= domain_.size();
  auto [it, inserted] = tables_.emplace(predicate, Table{arity, std::vector<Rational>(n, Rational(0))});
  if (!inserted && it->second.arity != arity)
    throw ArityError("predicate '" + predicate + "' redeclared with a different arity");
}

std::size_t FiniteModel::offset(const Table& t, const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != t.arity) throw ModelError("tuple length does not match arity");
  std::size_t off = 0;
  for (int i : tuple) {
    if (i < 0 || i >= static_cast<int>(domain_.size())) throw ModelError("individual index out of range");
    off = off * domain_.size() + static_cast<std::size_t>(i);
  }
  return off;
}

const FiniteModel::Table& FiniteModel::find(const std::string& predicate) const {
  auto it = tables_.find(predicate);
  if (it == tables_.end()) throw ModelError("uninterpreted predicate '" + predicate + "'");
  return it->second;
}

void FiniteModel::set(const std::string& predicate, const std::vector<int>& tuple, const Rational& value) {
  if (!mem(chain_, value)) throw ChainError(value.str() + " is not an element of " + chain_.name());
  const Table& t = find(predicate);
  tables_.at(predicate).values[offset(t, tuple)] = value;
}

void FiniteModel::set(const std::string& predicate, const std::vector<std::string>& tuple, const Rational& value) {
  std::vector<int> idx;
  for (const auto& name : tuple) idx.push_back(individual(name));
  set(predicate, idx, value);
}

void FiniteModel::set_constant(const std::string& name, const std::string& ind) { constants_[name] = individual(ind); }

int FiniteModel::arity(const std::string& predicate) const { return find(predicate).arity; }

std::map<std::string, int> FiniteModel::signature() const {
  std::map<std::string, int> out;
  for (const auto& [name, t] : tables_) out[name] = t.arity;
  return out;
}

const Rational& FiniteModel::value(const std::string& predicate, const std::vector<int>& tuple) const {
  const Table& t = find(predicate);
  return t.values[offset(t, tuple)];
}

const std::vector<Rational>& FiniteModel::table(const std::string& predicate) const { return find(predicate).values; }

std::vector<Rational>& FiniteModel::table(const std::string& predicate) {
  find(predicate);
  return tables_.at(predicate).values;
}

FiniteModel FiniteModel::map_values(const std::function<Rational(const Rational&)>& f) const {
  FiniteModel out = *this;
  for (auto& [name, t] : out.tables_)
    for (auto& v : t.values) {
      v = f(v);
      if (!mem(chain_, v)) throw ChainError(v.str() + " is not an element of " + chain_.name());
    }
  return out;
}

FiniteModel FiniteModel::with_chain(const ChainSpec& chain) const {
  FiniteModel out = *this;
  out.chain_ = chain;
  for (const auto& [name, t] : out.tables_)
    for (const auto& v : t.values)
      if (!mem(chain, v)) throw ChainError(v.str() + " is not an element of " + chain.name());
  return out;
}

namespace {

class Evaluator {
 public:
  Evaluator(const FiniteModel& m, const EvalObserver& obs) : m_(m), obs_(obs) {}

  std::map<std::string, int> env;

  Rational eval(const Formula& f) {
    Rational v = eval_inner(f);
    if (obs_) obs_(f, v);
    return v;
  }

 private:
  int resolve(const std::string& arg) const {
    if (auto it = env.find(arg); it != env.end()) return it->second;
    if (auto it = m_.constants().find(arg); it != m_.constants().end()) return it->second;
    throw ModelError("variable '" + arg + "' has no value");
  }

  Rational eval_inner(const Formula& f) {
    const ChainSpec& c = m_.chain();
    switch (f.kind()) {
      case Formula::Kind::Bottom: return Rational(0);
      case Formula::Kind::Atom: {
        std::vector<int> tuple;
        tuple.reserve(f.args().size());
        for (const auto& a : f.args()) tuple.push_back(resolve(a));
        return m_.value(f.predicate(), tuple);
      }
      case Formula::Kind::And: return meet(eval(f.lhs()), eval(f.rhs()));
      case Formula::Kind::Strong: return tnorm(c, eval(f.lhs()), eval(f.rhs()));
      case Formula::Kind::Implies: return residuum(c, eval(f.lhs()), eval(f.rhs()));
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        const bool universal = f.kind() == Formula::Kind::Forall;
        const std::string& x = f.variable();
        std::optional<int> saved;
        if (auto it = env.find(x); it != env.end()) saved = it->second;
        std::optional<Rational> acc;
        const int n = static_cast<int>(m_.domain().size());
        for (int i = 0; i < n; ++i) {
          env[x] = i;
          Rational v = eval(f.body());
          if (!acc)
            acc = std::move(v);
          else
            acc = universal ? min(*acc, v) : max(*acc, v);
        }
        if (saved)
          env[x] = *saved;
        else
          env.erase(x);
        return *acc;
      }
    }
    return Rational(0);
  }

  const FiniteModel& m_;
  const EvalObserver& obs_;
};

}  // namespace

Rational eval_value(const FiniteModel& m, const Valuation& v, const Formula& f, const EvalObserver& observer) {
  Evaluator ev(m, observer);
  for (const auto& [var, ind] : v) ev.env[var] = m.individual(ind);
  return ev.eval(f);
}

ChainElement eval(const FiniteModel& m, const Valuation& v, const Formula& f) {
  return ChainElement(m.chain(), eval_value(m, v, f));
}

Rational model_value_raw(const FiniteModel& m, const Formula& f, const EvalObserver& observer) {
  std::vector<std::string> free;
  for (const auto& x : f.free_variables())
    if (!m.constants().contains(x)) free.push_back(x);
  Evaluator ev(m, observer);
  const int n = static_cast<int>(m.domain().size());
  std::vector<int> idx(free.size(), 0);
  std::optional<Rational> acc;
  for (;;) {
    for (std::size_t i = 0; i < free.size(); ++i) ev.env[free[i]] = idx[i];
    Rational v = ev.eval(f);
    acc = acc ? min(*acc, v) : v;
    std::size_t k = free.size();
    while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
    if (k == 0) break;
  }
  return *acc;
}

ChainElement model_value(const FiniteModel& m, const Formula& f) {
  return ChainElement(m.chain(), model_value_raw(m, f));
}

ChainElement eval_prop(const ChainSpec& c, const std::map<std::string, Rational>& assign, const Formula& f) {
  if (!f.is_quantifier_free()) throw ModelError("propositional evaluation of a quantified formula");
  FiniteModel m(c, {"*"});
  for (const auto& [name, arity] : predicate_arities(f)) {
    if (arity != 0) throw ModelError("predicate '" + name + "' is not 0-ary");
    auto it = assign.find(name);
    if (it == assign.end()) throw ModelError("atom '" + name + "' is unassigned");
    m.declare(name, 0);
    m.set(name, std::vector<int>{}, it->second);
  }
  return ChainElement(c, eval_value(m, {}, f));
}

std::vector<std::string> default_domain(int size) {
  std::vector<std::string> out;
  for (int i = 0; i < size; ++i) out.push_back("d" + std::to_string(i));
  return out;
}

namespace {

std::size_t table_size(int domain_size, int arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(domain_size);
  return n;
}

}  // namespace

std::size_t count_models(const ChainSpec& c, int domain_size, const std::map<std::string, int>& signature) {
  const std::size_t k = enumerate(c).size();
  std::size_t total = 1;
  for (const auto& [name, arity] : signature) {
    for (std::size_t i = 0; i < table_size(domain_size, arity); ++i) {
      if (total > std::numeric_limits<std::size_t>::max() / k) return std::numeric_limits<std::size_t>::max();
      total *= k;
    }
  }
  return total;
}

std::size_t for_each_model(const ChainSpec& c, int domain_size, const std::map<std::string, int>& signature,
                           const std::function<bool(const FiniteModel&)>& visit) {
  const std::vector<Rational> carrier = enumerate(c);
  FiniteModel m(c, default_domain(domain_size));
  for (const auto& [name, arity] : signature) m.declare(name, arity);
  // Flatten all table cells in enumeration order.
  std::vector<Rational*> cells;
  for (const auto& [name, arity] : signature)
    for (auto& v : m.table(name)) cells.push_back(&v);
  std::vector<std::size_t> digit(cells.size(), 0);
  for (auto* p : cells) *p = carrier[0];
  std::size_t visited = 0;
  for (;;) {
    ++visited;
    if (!visit(m)) return visited;
    std::size_t k = cells.size();
    while (k > 0) {
      --k;
      if (++digit[k] < carrier.size()) {
        *cells[k] = carrier[digit[k]];
        break;
      }
      digit[k] = 0;
      *cells[k] = carrier[0];
      if (k == 0) return visited;
    }
    if (cells.empty()) return visited;
  }
}

FiniteModel random_model(const ChainSpec& c, int domain_size, const std::map<std::string, int>& signature,
                         std::mt19937_64& rng) {
  FiniteModel m(c, default_domain(domain_size));
  for (const auto& [name, arity] : signature) {
    m.declare(name, arity);
    for (auto& v : m.table(name)) v = sample_element(c, rng);
  }
  return m;
}

}  // namespace nmfo
