#include "nmfo/schema.hpp"

#include <charconv>

#include "nmfo/errors.hpp"

namespace nmfo {

namespace {

using F = Formula;

F p_of(const char* pred) { return F::atom(pred, {"x"}); }

F big_conj(std::vector<F> parts) {
  F out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = F::conj(out, parts[i]);
  return out;
}

F big_disj(std::vector<F> parts) {
  F out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = F::disj(out, parts[i]);
  return out;
}

F sn(int n) {
  std::vector<F> xs;
  for (int i = 0; i <= n; ++i) xs.push_back(F::atom("x" + std::to_string(i)));
  std::vector<F> premises;
  for (int i = 0; i < n; ++i) premises.push_back(F::implies(F::implies(xs[i], xs[i + 1]), xs[i + 1]));
  return F::implies(big_conj(premises), big_disj(xs));
}

F bp() {
  const F p = F::atom("p");
  const F lhs = F::neg(F::square(F::neg(F::square(p))));
  const F rhs = F::square(F::neg(F::square(F::neg(p))));
  return F::iff(lhs, rhs);
}

F sep(int k) {
  std::vector<F> parts;
  for (int i = 1; i <= k; ++i)
    parts.push_back(F::implies(F::atom("p" + std::to_string(i)), F::atom("p" + std::to_string(i + 1))));
  return big_disj(parts);
}

void expect_params(std::string_view name, const std::vector<int>& params, std::size_t n) {
  if (params.size() != n)
    throw Error("schema '" + std::string(name) + "' takes " + std::to_string(n) + " parameter(s), got " +
                std::to_string(params.size()));
  for (int p : params)
    if (p < 1) throw Error("schema '" + std::string(name) + "': parameters must be positive");
}

}  // namespace

Formula shifting_law(int i) {
  const F P = p_of("P");
  const F Q = p_of("Q");
  const F q = F::atom("q");
  auto all = [](F f) { return F::forall("x", std::move(f)); };
  auto ex = [](F f) { return F::exists("x", std::move(f)); };
  switch (i) {
    case 1: return F::iff(all(F::conj(P, q)), F::conj(all(P), q));
    case 2: return F::iff(ex(F::conj(P, q)), F::conj(ex(P), q));
    case 3: return F::iff(all(F::disj(P, q)), F::disj(all(P), q));
    case 4: return F::iff(ex(F::disj(P, q)), F::disj(ex(P), q));
    case 5: return F::iff(all(F::conj(P, Q)), F::conj(all(P), all(Q)));
    case 6: return F::iff(ex(F::conj(P, Q)), F::conj(ex(P), ex(Q)));
    case 7: return F::iff(all(F::disj(P, Q)), F::disj(all(P), all(Q)));
    case 8: return F::iff(ex(F::disj(P, Q)), F::disj(ex(P), ex(Q)));
    case 9: return F::iff(ex(F::strong(P, q)), F::strong(ex(P), q));
    case 10: return F::iff(ex(F::strong(P, Q)), F::strong(ex(P), ex(Q)));
    case 11: return F::iff(all(F::implies(P, q)), F::implies(ex(P), q));
    case 12: return F::iff(all(F::implies(q, P)), F::implies(q, all(P)));
    case 13: return F::iff(F::neg(ex(P)), all(F::neg(P)));
    case 14: return F::iff(F::neg(all(P)), ex(F::neg(P)));
    case 15: return F::iff(all(F::strong(P, q)), F::strong(all(P), q));
    case 16: return F::iff(all(F::strong(P, Q)), F::strong(all(P), all(Q)));
    case 17: return F::iff(ex(F::implies(P, q)), F::implies(all(P), q));
    case 18: return F::iff(ex(F::implies(q, P)), F::implies(q, ex(P)));
    default: throw Error("shifting law index must be in 1..18, got " + std::to_string(i));
  }
}

Formula schema(std::string_view name, const std::vector<int>& params) {
  if (name == "sn") {
    expect_params(name, params, 1);
    return sn(params[0]);
  }
  if (name == "sep") {
    expect_params(name, params, 1);
    return sep(params[0]);
  }
  if (name == "shift") {
    expect_params(name, params, 1);
    return shifting_law(params[0]);
  }
  if (name == "bp" || name == "cup" || name == "cdown" || name == "star") {
    expect_params(name, params, 0);
    const F P = F::atom("P", {"x"});
    const F Py = F::atom("P", {"y"});
    if (name == "bp") return bp();
    if (name == "cup") return F::exists("x", F::implies(P, F::forall("y", Py)));
    if (name == "cdown") return F::exists("x", F::implies(F::exists("y", Py), P));
    return shifting_law(15);
  }
  throw Error("unknown schema '" + std::string(name) + "'");
}

Formula schema(std::string_view spec) {
  const auto colon = spec.find(':');
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
        throw Error("bad schema parameter '" + std::string(item) + "'");
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return schema(spec.substr(0, colon), params);
}

}  // namespace nmfo
