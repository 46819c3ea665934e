#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nmfo/chain.hpp"
#include "nmfo/formula.hpp"

namespace nmfo {

/// Variable name -> individual name.
using Valuation = std::map<std::string, std::string>;

/// Finite-domain interpretation. Predicate tables are total: declare()
/// fills a table with 0 and set() overwrites single entries.
class FiniteModel {
 public:
  /// Throws ModelError on an empty or repeated domain.
  FiniteModel(ChainSpec chain, std::vector<std::string> domain);

  const ChainSpec& chain() const { return chain_; }
  const std::vector<std::string>& domain() const { return domain_; }
  /// Index of an individual; throws ModelError if unknown.
  int individual(const std::string& name) const;

  void declare(const std::string& predicate, int arity);
  /// Throws ChainError if `value` is not in the chain, ModelError on an
  /// undeclared predicate or a bad tuple.
  void set(const std::string& predicate, const std::vector<int>& tuple, const Rational& value);
  void set(const std::string& predicate, const std::vector<std::string>& tuple, const Rational& value);
  void set_constant(const std::string& name, const std::string& individual);

  bool has_predicate(const std::string& predicate) const { return tables_.contains(predicate); }
  int arity(const std::string& predicate) const;
  /// Name -> arity, in name order.
  std::map<std::string, int> signature() const;
  const std::map<std::string, int>& constants() const { return constants_; }

  const Rational& value(const std::string& predicate, const std::vector<int>& tuple) const;
  /// All entries of a table, tuples in lexicographic order.
  const std::vector<Rational>& table(const std::string& predicate) const;
  std::vector<Rational>& table(const std::string& predicate);

  /// Same individuals and constants, every atomic value replaced by f(value).
  FiniteModel map_values(const std::function<Rational(const Rational&)>& f) const;
  /// Same tables read as values of another chain; throws ChainError if some
  /// value is not a member.
  FiniteModel with_chain(const ChainSpec& chain) const;

 private:
  struct Table {
    int arity;
    std::vector<Rational> values;
  };
  std::size_t offset(const Table& t, const std::vector<int>& tuple) const;
  const Table& find(const std::string& predicate) const;

  ChainSpec chain_;
  std::vector<std::string> domain_;
  std::map<std::string, Table> tables_;
  std::map<std::string, int> constants_;
};

/// Called for every subformula occurrence evaluated, with its value.
using EvalObserver = std::function<void(const Formula&, const Rational&)>;

/// Truth value of f under v. Arguments are resolved through v first, then
/// the constants. Throws ModelError for unbound arguments or uninterpreted
/// predicates.
ChainElement eval(const FiniteModel& m, const Valuation& v, const Formula& f);
Rational eval_value(const FiniteModel& m, const Valuation& v, const Formula& f,
                    const EvalObserver& observer = nullptr);

/// Infimum over all valuations of the free variables; eval for closed f.
ChainElement model_value(const FiniteModel& m, const Formula& f);
Rational model_value_raw(const FiniteModel& m, const Formula& f, const EvalObserver& observer = nullptr);

/// Propositional evaluation. Throws ModelError on an unassigned atom or a
/// non-propositional formula.
ChainElement eval_prop(const ChainSpec& c, const std::map<std::string, Rational>& assign, const Formula& f);

/// Visits every model of `signature` over the domain {d0,...,d(size-1)}:
/// predicates in name order, tuples lexicographic, values ascending, the
/// last table entry varying fastest. `visit` returns false to stop early.
/// Returns the number of models visited.
std::size_t for_each_model(const ChainSpec& c, int domain_size, const std::map<std::string, int>& signature,
                           const std::function<bool(const FiniteModel&)>& visit);

/// Number of models for_each_model would visit, saturating at SIZE_MAX.
std::size_t count_models(const ChainSpec& c, int domain_size, const std::map<std::string, int>& signature);

FiniteModel random_model(const ChainSpec& c, int domain_size, const std::map<std::string, int>& signature,
                         std::mt19937_64& rng);

/// Domain names used by for_each_model and random_model.
std::vector<std::string> default_domain(int size);

}  // namespace nmfo
