// Python bindings for the contextuality toolkit. Structured values cross the
// boundary as JSON text in the same shapes the CLI reads and writes; small
// results come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ctxlab/chapter3.hpp"
#include "ctxlab/entropy.hpp"
#include "ctxlab/hierarchy.hpp"
#include "ctxlab/json_io.hpp"
#include "ctxlab/model.hpp"
#include "ctxlab/quantum.hpp"
#include "ctxlab/witness.hpp"

namespace py = pybind11;

namespace {

nlohmann::json parse(const std::string& text) {
    return nlohmann::json::parse(text);
}

ctxlab::EmpiricalModel model_of(const std::string& text) {
    return ctxlab::model_from_json(parse(text));
}

ctxlab::QuantumState state_of(const std::string& text) {
    return ctxlab::state_from_json(parse(text));
}

ctxlab::DensityMatrix density_of(const std::string& text) {
    return ctxlab::density_from_json(parse(text));
}

std::string kind_name(ctxlab::ReconstructionKind k) {
    switch (k) {
        case ctxlab::ReconstructionKind::Unique:
            return "unique";
        case ctxlab::ReconstructionKind::Pair:
            return "pair";
        default:
            return "not_in_image";
    }
}

}  // namespace

PYBIND11_MODULE(_ctxlab, m) {
    m.doc() =
        "Contextuality toolkit: empirical models, the contextuality "
        "hierarchy, quantum model generation, the logical non-locality "
        "witness, and contextual entropy.";
    m.attr("__version__") = "1.0.0";

    m.def(
        "classify_model",
        [](const std::string& model_json) {
            return ctxlab::to_string(ctxlab::classify(model_of(model_json)));
        },
        py::arg("model_json"),
        "Hierarchy verdict (non_contextual/weak/logical/strong) for an "
        "empirical model given as JSON text.");

    m.def(
        "analyze_model",
        [](const std::string& model_json) {
            const ctxlab::EmpiricalModel model = model_of(model_json);
            py::dict out;
            out["class"] = ctxlab::to_string(ctxlab::classify(model));

            const auto strong = ctxlab::decide_strong_contextuality(model);
            out["satisfiable"] = strong.satisfiable;
            if (strong.witness.has_value()) {
                out["witness"] = *strong.witness;
            } else {
                out["witness"] = py::none();
            }

            const auto poss = ctxlab::decide_possibilistic_extendability(model);
            py::dict blocked;
            for (std::size_t c = 0; c < poss.non_extendable.size(); ++c) {
                if (poss.non_extendable[c].empty()) continue;
                py::list labels;
                for (const auto& sec : poss.non_extendable[c]) {
                    labels.append(
                        model.scenario.section_label(static_cast<int>(c), sec));
                }
                blocked[py::str(model.scenario.context_key(static_cast<int>(c)))] =
                    labels;
            }
            out["non_extendable"] = blocked;

            if (model.semiring == ctxlab::Semiring::Probability) {
                const auto lp = ctxlab::decide_probabilistic_extendability(model);
                out["lp_feasible"] = lp.feasible;
                out["lp_exact"] = lp.exact;
            } else {
                out["lp_feasible"] = py::none();
                out["lp_exact"] = py::none();
            }
            return out;
        },
        py::arg("model_json"),
        "Full hierarchy report for a model: verdict, satisfiability with a "
        "satisfying global assignment when one exists, non-extendable "
        "sections per context, and linear-program feasibility.");

    m.def(
        "state_model",
        [](const std::string& state_json, const std::string& menus_json) {
            const auto menus = ctxlab::menus_from_json(parse(menus_json));
            return ctxlab::dump_sorted(
                ctxlab::model_to_json(ctxlab::empirical_model(
                    state_of(state_json), menus)));
        },
        py::arg("state_json"), py::arg("menus_json"),
        "Empirical model (as JSON text) of a pure state measured under "
        "per-party observable menus.");

    m.def(
        "classify_state",
        [](const std::string& state_json, const std::string& menus_json) {
            const auto menus = ctxlab::menus_from_json(parse(menus_json));
            return ctxlab::to_string(ctxlab::classify(
                ctxlab::empirical_model(state_of(state_json), menus)));
        },
        py::arg("state_json"), py::arg("menus_json"),
        "Hierarchy verdict for the model a state induces under the menus.");

    m.def(
        "hardy_witness",
        [](const std::string& state_json) {
            const ctxlab::WitnessResult w =
                ctxlab::hardy_witness(state_of(state_json));
            py::dict out;
            out["in_pn"] = w.in_pn;
            out["verified"] = w.verified;
            if (w.in_pn) {
                py::list singles;
                for (const auto& [qubit, amp] : w.components.singles) {
                    (void)amp;
                    singles.append(qubit);
                }
                py::list pairs;
                for (const auto& [i, j, amp] : w.components.pairs) {
                    (void)amp;
                    pairs.append(py::make_tuple(i, j));
                }
                out["singles"] = singles;
                out["pairs"] = pairs;
                out["menus"] = py::none();
            } else {
                py::list menus;
                int total = 0;
                for (const auto& menu : w.menus) {
                    py::list labels;
                    for (const auto& obs : menu) {
                        labels.append(obs.label);
                        ++total;
                    }
                    menus.append(labels);
                }
                out["menus"] = menus;
                out["observables"] = total;
                out["singles"] = py::none();
                out["pairs"] = py::none();
            }
            return out;
        },
        py::arg("state_json"),
        "Decide whether a pure n-qubit state factors into singles and "
        "entangled pairs; otherwise return verified menus whose model is "
        "logically contextual.");

    m.def(
        "von_neumann_entropy",
        [](const std::string& density_json) {
            return ctxlab::von_neumann_entropy(density_of(density_json));
        },
        py::arg("density_json"));

    m.def(
        "contextual_entropy",
        [](const std::string& density_json, double q) {
            const ctxlab::DensityMatrix rho = density_of(density_json);
            const ctxlab::ProjectiveContext ctx = ctxlab::eigencontext(rho);
            if (q == 1.0) return ctxlab::contextual_shannon(rho, ctx);
            return ctxlab::contextual_renyi(rho, ctx, q);
        },
        py::arg("density_json"), py::arg("q") = 1.0,
        "Contextual entropy of a density matrix in its minimizing "
        "(eigenbasis) context; q selects the Renyi order, with q = 1 the "
        "Shannon case.");

    m.def(
        "reconstruct_state",
        [](const std::string& density_json, std::uint64_t seed) {
            const auto out = ctxlab::reconstruct(
                ctxlab::state_backed_oracle(density_of(density_json)), seed);
            py::dict result;
            result["kind"] = kind_name(out.kind);
            result["queries"] = out.queries;
            if (out.kind == ctxlab::ReconstructionKind::NotInImage) {
                result["reason"] = out.reason;
                result["rho"] = py::none();
                result["rho_alt"] = py::none();
            } else {
                result["reason"] = py::none();
                result["rho"] =
                    ctxlab::dump_sorted(ctxlab::density_to_json(out.rho));
                if (out.kind == ctxlab::ReconstructionKind::Pair) {
                    result["rho_alt"] = ctxlab::dump_sorted(
                        ctxlab::density_to_json(out.rho_alt));
                } else {
                    result["rho_alt"] = py::none();
                }
            }
            return result;
        },
        py::arg("density_json"), py::arg("seed") = 12345,
        "Recover a state from its contextual-entropy oracle: unique in "
        "dimension three and up, an unordered pair in dimension two.");

    m.def(
        "subadditivity_counterexample",
        [](int n1, int n2) {
            const auto ce = ctxlab::subadditivity_counterexample(n1, n2);
            py::dict out;
            out["a"] = ce.a;
            out["b"] = ce.b;
            out["gap"] = ce.a - ce.b;
            return out;
        },
        py::arg("n1"), py::arg("n2"),
        "Analytic contextual-entropy subadditivity violation on dimension "
        "n1*n2.");

    m.def(
        "random_violation_4d",
        [](std::uint64_t seed) {
            const auto v = ctxlab::random_violation_4d(seed);
            py::dict out;
            out["a"] = v.a;
            out["b"] = v.b;
            out["gap"] = v.gap();
            return out;
        },
        py::arg("seed"),
        "Seeded random 4-dimensional subadditivity sample; positive gap "
        "means a violation.");

    m.def(
        "chapter3_suite",
        []() {
            py::list out;
            for (const auto& r : ctxlab::run_chapter3_suite()) {
                py::dict row;
                row["name"] = r.name;
                row["table_match"] = r.table_match;
                row["verdict"] = ctxlab::to_string(r.verdict);
                row["verdict_match"] = r.verdict_match;
                out.append(row);
            }
            return out;
        },
        "Rebuild the balanced-function states, check their support tables, "
        "and report the contextuality verdict of each.");
}
