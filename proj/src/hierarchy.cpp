#include "ctxlab/hierarchy.hpp"

#include <algorithm>
#include <set>

#include "ctxlab/errors.hpp"
#include "ctxlab/simplex.hpp"

namespace ctxlab {

std::string to_string(ContextualityClass c) {
    switch (c) {
        case ContextualityClass::NonContextual: return "non_contextual";
        case ContextualityClass::Weakly: return "weak";
        case ContextualityClass::Logically: return "logical";
        case ContextualityClass::Strongly: return "strong";
    }
    return "non_contextual";
}

bool PossibilisticExtendability::logically_contextual() const {
    for (const auto& sections : non_extendable) {
        if (!sections.empty()) return true;
    }
    return false;
}

EmpiricalModel snap_model_to_rational(const EmpiricalModel& m, long max_den,
                                      double eps) {
    EmpiricalModel out = m;
    for (auto& row : out.rows) {
        for (auto& [section, w] : row) {
            if (w.is_exact()) continue;
            auto snapped = snap_to_rational(w.value(), max_den, eps);
            if (!snapped) {
                throw input_error(
                    "table weight " + std::to_string(w.value()) +
                    " is not within tolerance of a small-denominator fraction");
            }
            w = Weight::exact(*snapped);
        }
    }
    return out;
}

namespace {

// Possible sections of each context, as ordered sets.
std::vector<std::set<Section>> possible_sets(const EmpiricalModel& m) {
    std::vector<std::set<Section>> out(m.scenario.n_contexts());
    for (int c = 0; c < m.scenario.n_contexts(); ++c) {
        for (const auto& [section, w] : m.rows[c]) {
            if (m.possible(c, section)) out[c].insert(section);
        }
    }
    return out;
}

bool consistent_everywhere(const MeasurementScenario& sc,
                           const std::vector<std::set<Section>>& possible,
                           const GlobalAssignment& g) {
    for (int c = 0; c < sc.n_contexts(); ++c) {
        if (!possible[c].count(sc.restrict_global(g, c))) return false;
    }
    return true;
}

// Globals in colex order: measurement 0 varies fastest.
GlobalAssignment colex_global(const MeasurementScenario& sc,
                              std::uint64_t index) {
    const int n = sc.n_measurements();
    const std::uint64_t base = static_cast<std::uint64_t>(sc.n_outcomes());
    GlobalAssignment g(n);
    for (int k = 0; k < n; ++k) {
        g[k] = static_cast<int>(index % base);
        index /= base;
    }
    return g;
}

// Depth-first search assigning measurements in descending index order with
// outcomes ascending, so the first solution found is the colex-least global
// consistent with the support (among those matching any pinned entries, which
// are set in `partial`; unassigned entries are -1). Contexts are checked the
// moment their last measurement is assigned.
struct DfsSearcher {
    const MeasurementScenario& sc;
    const std::vector<std::set<Section>>& possible;
    GlobalAssignment partial;
    std::vector<int> remaining;       // unassigned members per context
    std::vector<int> order;           // measurements still to assign, descending
    std::vector<std::vector<int>> contexts_of;  // measurement -> context ids

    DfsSearcher(const MeasurementScenario& s,
                const std::vector<std::set<Section>>& p, GlobalAssignment init)
        : sc(s), possible(p), partial(std::move(init)) {
        const int n = sc.n_measurements();
        contexts_of.assign(n, {});
        remaining.assign(sc.n_contexts(), 0);
        for (int c = 0; c < sc.n_contexts(); ++c) {
            for (int x : sc.cover[c]) {
                contexts_of[x].push_back(c);
                if (partial[x] < 0) ++remaining[c];
            }
        }
        for (int x = n - 1; x >= 0; --x) {
            if (partial[x] < 0) order.push_back(x);
        }
    }

    bool context_ok(int c) const {
        return possible[c].count(sc.restrict_global(partial, c)) > 0;
    }

    bool pinned_contexts_ok() const {
        for (int c = 0; c < sc.n_contexts(); ++c) {
            if (remaining[c] == 0 && !context_ok(c)) return false;
        }
        return true;
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) return true;
        const int x = order[depth];
        for (int o = 0; o < sc.n_outcomes(); ++o) {
            partial[x] = o;
            bool ok = true;
            for (int c : contexts_of[x]) {
                if (--remaining[c] == 0 && !context_ok(c)) ok = false;
            }
            if (ok && run(depth + 1)) return true;
            for (int c : contexts_of[x]) ++remaining[c];
        }
        partial[x] = -1;
        return false;
    }
};

std::optional<GlobalAssignment> dfs_first_consistent(
    const MeasurementScenario& sc,
    const std::vector<std::set<Section>>& possible, GlobalAssignment pinned) {
    DfsSearcher searcher(sc, possible, std::move(pinned));
    if (!searcher.pinned_contexts_ok()) return std::nullopt;
    if (!searcher.run(0)) return std::nullopt;
    return searcher.partial;
}

}  // namespace

StrongContextualityResult decide_strong_contextuality(const EmpiricalModel& m,
                                                      std::uint64_t cap) {
    const auto& sc = m.scenario;
    const auto possible = possible_sets(m);
    StrongContextualityResult result;

    std::uint64_t total = 0;
    bool exhaustive = true;
    try {
        total = sc.global_count(cap);
    } catch (const capacity_error&) {
        exhaustive = false;
    }

    if (exhaustive) {
        for (std::uint64_t i = 0; i < total; ++i) {
            GlobalAssignment g = colex_global(sc, i);
            if (consistent_everywhere(sc, possible, g)) {
                result.satisfiable = true;
                result.witness = std::move(g);
                return result;
            }
        }
        return result;
    }

    GlobalAssignment unassigned(sc.n_measurements(), -1);
    auto found = dfs_first_consistent(sc, possible, std::move(unassigned));
    if (found) {
        result.satisfiable = true;
        result.witness = std::move(*found);
    }
    return result;
}

PossibilisticExtendability decide_possibilistic_extendability(
    const EmpiricalModel& m, std::uint64_t cap) {
    const auto& sc = m.scenario;
    const auto possible = possible_sets(m);
    PossibilisticExtendability result;
    result.extendable.resize(sc.n_contexts());
    result.non_extendable.resize(sc.n_contexts());

    std::uint64_t total = 0;
    bool exhaustive = true;
    try {
        total = sc.global_count(cap);
    } catch (const capacity_error&) {
        exhaustive = false;
    }

    std::vector<std::set<Section>> extendable(sc.n_contexts());
    if (exhaustive) {
        for (std::uint64_t i = 0; i < total; ++i) {
            GlobalAssignment g = colex_global(sc, i);
            if (!consistent_everywhere(sc, possible, g)) continue;
            for (int c = 0; c < sc.n_contexts(); ++c) {
                extendable[c].insert(sc.restrict_global(g, c));
            }
        }
    } else {
        for (int c = 0; c < sc.n_contexts(); ++c) {
            for (const auto& s : possible[c]) {
                GlobalAssignment pinned(sc.n_measurements(), -1);
                for (std::size_t k = 0; k < sc.cover[c].size(); ++k) {
                    pinned[sc.cover[c][k]] = s[k];
                }
                if (dfs_first_consistent(sc, possible, std::move(pinned))) {
                    extendable[c].insert(s);
                }
            }
        }
    }

    for (int c = 0; c < sc.n_contexts(); ++c) {
        for (const auto& s : possible[c]) {
            if (extendable[c].count(s)) {
                result.extendable[c].push_back(s);
            } else {
                result.non_extendable[c].push_back(s);
            }
        }
    }
    return result;
}

ProbabilisticExtendability decide_probabilistic_extendability(
    const EmpiricalModel& m, double tol, std::uint64_t cap) {
    if (m.semiring == Semiring::Boolean) {
        throw input_error(
            "probabilistic extendability needs a probability table");
    }

    // Prefer the exact path: already-rational tables directly, otherwise via
    // snapping every weight to a small-denominator fraction.
    const EmpiricalModel* model = &m;
    EmpiricalModel snapped;
    bool exact = m.all_exact();
    if (!exact) {
        try {
            snapped = snap_model_to_rational(m);
            model = &snapped;
            exact = true;
        } catch (const input_error&) {
            exact = false;
        }
    }

    const IncidenceMatrix inc = build_incidence_matrix(m.scenario, cap);
    const std::vector<Weight> v = model_vector(*model);

    ProbabilisticExtendability result;
    result.exact = exact;
    if (exact) {
        std::vector<std::vector<Rational>> a(
            inc.p + 1, std::vector<Rational>(inc.q, Rational(0)));
        std::vector<Rational> b(inc.p + 1, Rational(0));
        for (int i = 0; i < inc.p; ++i) {
            for (int j = 0; j < inc.q; ++j) a[i][j] = Rational(inc.entries[i][j]);
            b[i] = v[i].rational();
        }
        for (int j = 0; j < inc.q; ++j) a[inc.p][j] = Rational(1);
        b[inc.p] = Rational(1);

        auto x = simplex_feasible<Rational>(a, b, tol);
        result.feasible = x.has_value();
        if (x) {
            // Re-multiply the incidence system as a guard on the solver.
            for (int i = 0; i <= inc.p; ++i) {
                Rational acc(0);
                for (int j = 0; j < inc.q; ++j) acc += a[i][j] * (*x)[j];
                if (acc != b[i]) {
                    throw verification_error(
                        "global distribution fails to reproduce the table");
                }
            }
            result.certificate_exact = std::move(*x);
        }
    } else {
        std::vector<std::vector<double>> a(inc.p + 1,
                                           std::vector<double>(inc.q, 0.0));
        std::vector<double> b(inc.p + 1, 0.0);
        for (int i = 0; i < inc.p; ++i) {
            for (int j = 0; j < inc.q; ++j) a[i][j] = inc.entries[i][j];
            b[i] = v[i].value();
        }
        for (int j = 0; j < inc.q; ++j) a[inc.p][j] = 1.0;
        b[inc.p] = 1.0;

        auto x = simplex_feasible<double>(a, b, tol);
        result.feasible = x.has_value();
        if (x) result.certificate_float = std::move(*x);
    }
    return result;
}

ContextualityClass classify(const EmpiricalModel& m, double tol,
                            std::uint64_t cap) {
    const auto strong = decide_strong_contextuality(m, cap);
    if (!strong.satisfiable) return ContextualityClass::Strongly;

    const auto poss = decide_possibilistic_extendability(m, cap);
    if (poss.logically_contextual()) return ContextualityClass::Logically;

    if (m.semiring == Semiring::Boolean) {
        return ContextualityClass::NonContextual;
    }
    const auto prob = decide_probabilistic_extendability(m, tol, cap);
    return prob.feasible ? ContextualityClass::NonContextual
                         : ContextualityClass::Weakly;
}

}  // namespace ctxlab
