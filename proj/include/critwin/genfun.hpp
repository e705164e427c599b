#pragma once

#include "critwin/count.hpp"
#include "critwin/tail.hpp"
#include "critwin/window.hpp"

namespace critwin::genfun {

// Tree one-point function G^t_{V,0}(p) = sum_n binom(V-1,n-1) n^{n-2} (p/(eV))^{n-1}.
SeriesResult g0_tree(const WindowPoint& w, const EvalOptions& opt = {});

// Tree two-point function G^t_{V,01}(p) = sum_{n>=2} binom(V-2,n-2) n^{n-2} (p/(eV))^{n-1}.
// Requires V >= 2.
SeriesResult g01_tree(const WindowPoint& w, const EvalOptions& opt = {});

// Tree susceptibility chi^t_V(p) = sum_n binom(V-1,n-1) n^{n-1} (p/(eV))^{n-1},
// evaluated through the product form (binomial combined with V^{-(n-1)})
// with one-multiply term updates.
SeriesResult chi_tree(const WindowPoint& w, const EvalOptions& opt = {});

// Surplus generating function S(n, z) = sum_{l>=1} C(n, n-1+l) z^l (finite sum).
// Requires 3 <= n <= table capacity and an unbanded table row.
Real surplus_series(int n, const Real& z, const counts::CountTable& table);

// Cycle corrections: Delta_{V,0}(p) = sum_{n=3}^{V} binom(V-1,n-1) S(n, p/(eV)) (p/(eV))^{n-1},
// and Delta_V(p) with an extra factor n in the summand. Exact-capacity only:
// V must not exceed the table's n_max (no silent approximation).
Real delta_g0(const WindowPoint& w, const counts::CountTable& table);
Real delta_chi(const WindowPoint& w, const counts::CountTable& table);

// Connected-subgraph (animal) functions, exact for V within table capacity:
//   G^a_0 = G^t_0 + Delta_{V,0};  chi^a = chi^t + Delta_V;
//   G^a_01 = (chi^a - G^a_0) / (V-1).
Real g0_animal(const WindowPoint& w, const counts::CountTable& table);
Real chi_animal(const WindowPoint& w, const counts::CountTable& table);
Real g01_animal(const WindowPoint& w, const counts::CountTable& table);

}  // namespace critwin::genfun
