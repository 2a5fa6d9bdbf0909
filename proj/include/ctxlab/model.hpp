// model.hpp
// Empirical models over probability and boolean semirings, with
// marginalization, support extraction, and no-signalling checks.

#pragma once

#include <map>
#include <vector>

#include "scenario.hpp"
#include "weight.hpp"

namespace ctxlab {

enum class Semiring { Probability, Boolean };

using Row = std::map<Section, Weight>;

inline constexpr double kEpsNorm = 1e-9;
inline constexpr double kEpsSupport = 1e-9;

struct NoSignallingViolation {
    int ctx_a = 0, ctx_b = 0;
    std::vector<int> overlap;  // shared measurements, in ctx_a order
    Section section;           // on the overlap
    double difference = 0.0;
};

struct EmpiricalModel {
    MeasurementScenario scenario;
    Semiring semiring = Semiring::Probability;
    std::vector<Row> rows;  // aligned with scenario.cover

    // Scenario validity plus: probability rows normalized within eps_norm and
    // non-negative; boolean rows hold at least one possible section; all
    // section keys valid. Throws input_error.
    void validate(double eps_norm = kEpsNorm) const;

    bool all_exact() const;

    Weight weight(int ctx, const Section& s) const;  // zero when absent
    bool possible(int ctx, const Section& s, double eps = kEpsSupport) const;
};

// Sum (probability) or join (boolean) of the weights of all extensions of each
// target section. `context` lists the row's measurements, `target` a subset of
// them; the result is keyed by sections in `target` order. Throws input_error
// when target is not a subset of context.
Row marginalize(const Row& row, const std::vector<int>& context,
                const std::vector<int>& target, Semiring semiring);

// Every overlapping context pair whose marginals disagree beyond eps.
std::vector<NoSignallingViolation> check_no_signalling(const EmpiricalModel& m,
                                                       double eps = 1e-7);

// Boolean shadow: possible iff probability > eps_supp.
EmpiricalModel support(const EmpiricalModel& m, double eps_supp = kEpsSupport);

}  // namespace ctxlab
