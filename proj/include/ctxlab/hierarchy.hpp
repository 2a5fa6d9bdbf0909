// hierarchy.hpp
// The contextuality hierarchy: strong contextuality (no global section
// consistent with the support), logical contextuality (some possible section
// extends to no global section), and probabilistic non-extendability (the
// global-distribution linear program is infeasible).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incidence.hpp"
#include "model.hpp"

namespace ctxlab {

enum class ContextualityClass { NonContextual, Weakly, Logically, Strongly };

// "non_contextual" | "weak" | "logical" | "strong"
std::string to_string(ContextualityClass c);

struct ProbabilisticExtendability {
    bool feasible = false;
    bool exact = false;  // decided over exact rationals
    std::vector<Rational> certificate_exact;  // global distribution, if exact
    std::vector<double> certificate_float;
};

struct PossibilisticExtendability {
    // Per context (cover order): possible sections that do / do not extend to
    // a global section compatible with the support, each in section order.
    std::vector<std::vector<Section>> extendable;
    std::vector<std::vector<Section>> non_extendable;
    bool logically_contextual() const;
};

struct StrongContextualityResult {
    bool satisfiable = false;
    // First consistent global in colex order (measurement 0 least
    // significant), when one exists.
    std::optional<GlobalAssignment> witness;
};

// Copy of the model with every weight replaced by the smallest-denominator
// fraction p/q, q <= max_den, within eps. Throws input_error when some weight
// has no such fraction.
EmpiricalModel snap_model_to_rational(const EmpiricalModel& m,
                                      long max_den = 64, double eps = 1e-7);

// Feasibility of M X = V, X >= 0 (normalization row appended). Exact when all
// weights are rational or the table snaps to rationals; float otherwise. The
// exact path re-multiplies M X and throws verification_error on mismatch.
ProbabilisticExtendability decide_probabilistic_extendability(
    const EmpiricalModel& m, double tol = 1e-7,
    std::uint64_t cap = kDefaultEnumerationCap);

PossibilisticExtendability decide_possibilistic_extendability(
    const EmpiricalModel& m, std::uint64_t cap = kDefaultEnumerationCap);

StrongContextualityResult decide_strong_contextuality(
    const EmpiricalModel& m, std::uint64_t cap = kDefaultEnumerationCap);

// Strong check first, then possibilistic, then the linear program (skipped
// for boolean models, which carry no probabilities).
ContextualityClass classify(const EmpiricalModel& m, double tol = 1e-7,
                            std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ctxlab
