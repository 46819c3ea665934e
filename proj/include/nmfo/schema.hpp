#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nmfo/formula.hpp"

namespace nmfo {

/// Named formula families. φ(x), ψ(x) are instantiated as P(x), Q(x) and ν
/// as the 0-ary atom q.
///
///   sn(n)     ⋀_{i<n}((x_i→x_{i+1})→x_{i+1}) → ⋁_{i≤n} x_i
///   bp        ¬(¬p²)² ↔ (¬(¬p)²)²
///   cup       ∃x(P(x)→∀y P(y))
///   cdown     ∃x(∃y P(y)→P(x))
///   star      ∀x(P(x)&q) ↔ (∀x P(x)&q)
///   shift(i)  quantifier shifting law i, 1 ≤ i ≤ 18
///   sep(k)    ⋁_{i=1..k}(p_i→p_{i+1})
///
/// Throws Error on an unknown name or a bad parameter list.
Formula schema(std::string_view name, const std::vector<int>& params);

/// "name" or "name:p1,p2,..." as accepted on the command line.
Formula schema(std::string_view spec);

Formula shifting_law(int i);

}  // namespace nmfo
