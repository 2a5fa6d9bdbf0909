// simplex.hpp
// Phase-1 simplex feasibility for {x >= 0 : Ax = b}, instantiated for exact
// rationals (Bland's rule, terminating) and for doubles (tolerance-based).

#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace ctxlab {

// Returns a feasible x, or nullopt when the system is infeasible. For
// T = Rational the answer is exact and `tol` is ignored; for T = double a
// phase-1 optimum within `tol` of zero counts as feasible.
template <typename T>
std::optional<std::vector<T>> simplex_feasible(
    const std::vector<std::vector<T>>& A, const std::vector<T>& b,
    double tol = 1e-7);

extern template std::optional<std::vector<Rational>> simplex_feasible<Rational>(
    const std::vector<std::vector<Rational>>&, const std::vector<Rational>&,
    double);
extern template std::optional<std::vector<double>> simplex_feasible<double>(
    const std::vector<std::vector<double>>&, const std::vector<double>&,
    double);

}  // namespace ctxlab
