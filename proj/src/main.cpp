// main.cpp
// ctxlab command-line interface: classify tables, build witnesses, compute
// contextual entropies, reconstruct states from entropy oracles, and emit
// the subadditivity counterexample family.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "ctxlab/chapter3.hpp"
#include "ctxlab/entropy.hpp"
#include "ctxlab/errors.hpp"
#include "ctxlab/hierarchy.hpp"
#include "ctxlab/json_io.hpp"
#include "ctxlab/witness.hpp"

namespace {

using namespace ctxlab;

nlohmann::json vector2_to_json(const Eigen::Vector2cd& v) {
    return nlohmann::json::array(
        {{v[0].real(), v[0].imag()}, {v[1].real(), v[1].imag()}});
}

nlohmann::json observable_to_json(const LocalObservable& o) {
    nlohmann::json j;
    j["label"] = o.label;
    j["plus"] = vector2_to_json(o.plus);
    j["minus"] = vector2_to_json(o.minus);
    return j;
}

nlohmann::json section_to_json(const MeasurementScenario& sc, int ctx,
                               const Section& sec) {
    nlohmann::json j;
    j["context"] = sc.context_key(ctx);
    j["section"] = sc.section_label(ctx, sec);
    return j;
}

std::string type_name(EntanglementType t) {
    switch (t) {
        case EntanglementType::FullyProduct: return "fully_product";
        case EntanglementType::PairwiseEntangled: return "pairwise_entangled";
        case EntanglementType::GenuinelyMultipartite:
            return "genuinely_multipartite";
    }
    return "unknown";
}

DensityMatrix pure_density(const QuantumState& s) {
    return s.amplitudes * s.amplitudes.adjoint();
}

int run_classify(const std::string& model_path, const std::string& state_path,
                 const std::string& menus_path, double tol, std::uint64_t cap,
                 bool emit_table, bool emit_certificate) {
    EmpiricalModel model;
    if (!model_path.empty()) {
        model = model_from_json(load_json_file(model_path));
    } else if (!state_path.empty() && !menus_path.empty()) {
        model = empirical_model(state_from_json(load_json_file(state_path)),
                                menus_from_json(load_json_file(menus_path)));
    } else {
        throw input_error("classify needs --model, or --state with --menus");
    }

    nlohmann::json out;
    const auto ns = check_no_signalling(model, tol);
    out["no_signalling_violations"] = ns.size();
    if (!ns.empty()) {
        double worst = 0.0;
        for (const auto& v : ns) worst = std::max(worst, v.difference);
        out["no_signalling_worst"] = worst;
    }

    const auto strong = decide_strong_contextuality(model, cap);
    ContextualityClass verdict;
    if (!strong.satisfiable) {
        verdict = ContextualityClass::Strongly;
    } else {
        if (emit_certificate) {
            nlohmann::json w;
            for (int i = 0; i < model.scenario.n_measurements(); ++i) {
                w[model.scenario.measurements[i]] =
                    model.scenario.outcomes[(*strong.witness)[i]];
            }
            out["global_section"] = w;
        }
        const auto poss = decide_possibilistic_extendability(model, cap);
        if (poss.logically_contextual()) {
            verdict = ContextualityClass::Logically;
            if (emit_certificate) {
                nlohmann::json bad = nlohmann::json::array();
                for (int c = 0; c < model.scenario.n_contexts(); ++c) {
                    for (const auto& sec : poss.non_extendable[c]) {
                        bad.push_back(section_to_json(model.scenario, c, sec));
                    }
                }
                out["non_extendable"] = bad;
            }
        } else if (model.semiring == Semiring::Boolean) {
            verdict = ContextualityClass::NonContextual;
        } else {
            const auto prob = decide_probabilistic_extendability(model, tol, cap);
            verdict = prob.feasible ? ContextualityClass::NonContextual
                                    : ContextualityClass::Weakly;
            nlohmann::json lp;
            lp["feasible"] = prob.feasible;
            lp["exact"] = prob.exact;
            if (emit_certificate && prob.feasible) {
                nlohmann::json dist = nlohmann::json::array();
                if (prob.exact) {
                    for (const auto& x : prob.certificate_exact) {
                        dist.push_back(rational_to_string(x));
                    }
                } else {
                    for (double x : prob.certificate_float) dist.push_back(x);
                }
                lp["distribution"] = dist;
            }
            out["lp"] = lp;
        }
    }
    out["verdict"] = to_string(verdict);
    if (emit_table) out["table"] = model_to_json(model);
    std::cout << dump_sorted(out) << "\n";
    return 0;
}

int run_witness(const std::string& state_path, double tol, bool verify) {
    const QuantumState s = state_from_json(load_json_file(state_path));
    const WitnessResult res = hardy_witness(s, tol, verify);
    nlohmann::json out;
    out["in_pn"] = res.in_pn;
    out["type"] = type_name(res.type());
    out["verified"] = res.verified;
    if (res.in_pn) {
        nlohmann::json singles;
        for (const auto& [i, v] : res.components.singles) {
            singles[std::to_string(i)] = vector2_to_json(v);
        }
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [i, j, v] : res.components.pairs) {
            nlohmann::json p;
            p["qubits"] = {i, j};
            nlohmann::json amp = nlohmann::json::array();
            for (int k = 0; k < 4; ++k) amp.push_back({v[k].real(), v[k].imag()});
            p["state"] = amp;
            pairs.push_back(p);
        }
        out["components"] = {{"singles", singles}, {"pairs", pairs}};
    } else {
        nlohmann::json menus = nlohmann::json::array();
        for (const auto& menu : res.menus) {
            nlohmann::json party = nlohmann::json::array();
            for (const auto& obs : menu) party.push_back(observable_to_json(obs));
            menus.push_back(party);
        }
        out["menus"] = menus;
        out["contexts"] = context_menu_labels(res.menus);
    }
    std::cout << dump_sorted(out) << "\n";
    return 0;
}

int run_entropy(const std::string& state_path, const std::string& density_path,
                std::vector<double> qs, int trials, std::uint64_t seed) {
    DensityMatrix rho;
    if (!density_path.empty()) {
        rho = density_from_json(load_json_file(density_path));
    } else if (!state_path.empty()) {
        QuantumState s = state_from_json(load_json_file(state_path));
        rho = pure_density(s);
    } else {
        throw input_error("entropy needs --state or --density");
    }
    if (qs.empty()) qs = {0.0, 0.5, 1.0, 2.0};

    nlohmann::json out;
    out["dimension"] = static_cast<int>(rho.rows());
    out["von_neumann"] = von_neumann_entropy(rho);
    const ProjectiveContext eigen_ctx = eigencontext(rho);
    out["eigencontext_shannon"] = contextual_shannon(rho, eigen_ctx);
    nlohmann::json renyi;
    for (double q : qs) {
        renyi[std::to_string(q)] = contextual_renyi(rho, eigen_ctx, q);
    }
    out["eigencontext_renyi"] = renyi;

    std::mt19937_64 rng(seed);
    const int n = static_cast<int>(rho.rows());
    double lo = 1e300, hi = -1e300;
    bool all_above = true, majorized = true;
    for (int t = 0; t < trials; ++t) {
        const ProjectiveContext ctx = random_maximal_context(n, rng);
        const double h = contextual_shannon(rho, ctx);
        lo = std::min(lo, h);
        hi = std::max(hi, h);
        if (h < von_neumann_entropy(rho) - 1e-9) all_above = false;
        if (!schur_horn_check(rho, ctx)) majorized = false;
    }
    nlohmann::json sampled;
    sampled["trials"] = trials;
    sampled["min_shannon"] = lo;
    sampled["max_shannon"] = hi;
    sampled["all_above_von_neumann"] = all_above;
    sampled["majorization_ok"] = majorized;
    out["random_contexts"] = sampled;
    std::cout << dump_sorted(out) << "\n";
    return 0;
}

int run_reconstruct(const std::string& density_path, std::uint64_t seed) {
    const DensityMatrix rho = density_from_json(load_json_file(density_path));
    const EntropyOracle oracle = state_backed_oracle(rho);
    const ReconstructionOutcome res = reconstruct(oracle, seed);
    nlohmann::json out;
    out["queries"] = res.queries;
    if (res.kind == ReconstructionKind::NotInImage) {
        out["kind"] = "not_in_image";
        out["reason"] = res.reason;
        std::cout << dump_sorted(out) << "\n";
        return 4;
    }
    if (res.kind == ReconstructionKind::Unique) {
        out["kind"] = "unique";
        out["rho"] = density_to_json(res.rho);
        out["frobenius_error"] = (res.rho - rho).norm();
    } else {
        out["kind"] = "pair";
        out["rho"] = density_to_json(res.rho);
        out["rho_alt"] = density_to_json(res.rho_alt);
        out["frobenius_error"] =
            std::min((res.rho - rho).norm(), (res.rho_alt - rho).norm());
    }
    std::cout << dump_sorted(out) << "\n";
    return 0;
}

int run_counterexample(int n1, int n2, bool search_4d, std::uint64_t seed) {
    nlohmann::json out;
    const SubadditivityCounterexample ce = subadditivity_counterexample(n1, n2);
    out["n"] = n1 * n2;
    out["a"] = ce.a;
    out["b"] = ce.b;
    out["gap"] = ce.a - ce.b;
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& col : ce.columns) {
        nlohmann::json c = nlohmann::json::array();
        for (int i = 0; i < col.size(); ++i) c.push_back(col[i]);
        cols.push_back(c);
    }
    out["columns"] = cols;
    if (search_4d) {
        nlohmann::json found;
        found["found"] = false;
        for (std::uint64_t s = seed; s < seed + 500; ++s) {
            const ViolationSample v = random_violation_4d(s);
            if (v.gap() > 1e-3) {
                found["found"] = true;
                found["seed"] = s;
                found["a"] = v.a;
                found["b"] = v.b;
                found["gap"] = v.gap();
                break;
            }
        }
        out["random_4d"] = found;
    }
    std::cout << dump_sorted(out) << "\n";
    return 0;
}

int run_chapter3(bool emit_table, double tol, std::uint64_t cap) {
    nlohmann::json out;
    bool all_ok = true;
    nlohmann::json entries = nlohmann::json::array();
    const auto reports = run_chapter3_suite();
    const auto specs = chapter3_entries();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        nlohmann::json e;
        e["name"] = r.name;
        e["table_match"] = r.table_match;
        e["verdict"] = to_string(r.verdict);
        e["verdict_match"] = r.verdict_match;
        if (emit_table) {
            nlohmann::json table;
            for (const auto& [key, row] : specs[i].table) {
                table[key] = row;
            }
            e["table"] = table;
        }
        all_ok = all_ok && r.table_match && r.verdict_match;
        entries.push_back(e);
    }
    out["entries"] = entries;

    nlohmann::json dict = nlohmann::json::array();
    for (int i : {1, 2}) {
        for (bool plus : {true, false}) {
            const EmpiricalModel model = empirical_model(
                dictatorship_state(i, plus), dictatorship_menu(plus));
            const ContextualityClass verdict = classify(model, tol, cap);
            nlohmann::json d;
            d["state"] = "Delta" + std::to_string(i) + (plus ? "+" : "-");
            d["verdict"] = to_string(verdict);
            all_ok = all_ok && verdict == ContextualityClass::Weakly;
            dict.push_back(d);
        }
    }
    out["dictatorship"] = dict;
    out["all_ok"] = all_ok;
    std::cout << dump_sorted(out) << "\n";
    return all_ok ? 0 : 4;
}

int run_gen_state(const std::string& kind, int n, int k,
                  const std::string& which, const std::string& function,
                  std::uint64_t seed, const std::string& out_path) {
    QuantumState s;
    if (kind == "ghz") {
        s = ghz_state(n);
    } else if (kind == "dicke") {
        s = dicke_state(n, k);
    } else if (kind == "w") {
        s = w_state();
    } else if (kind == "bell") {
        s = bell_state(which);
    } else if (kind == "random") {
        s = random_state(n, seed);
    } else if (kind == "balanced") {
        bool found = false;
        for (const auto& entry : chapter3_entries()) {
            if (entry.name == function) {
                s = balanced_state(entry.f);
                found = true;
                break;
            }
        }
        if (!found) {
            throw input_error("unknown balanced function \"" + function + "\"");
        }
    } else {
        throw input_error("unknown state kind \"" + kind + "\"");
    }
    const nlohmann::json j = state_to_json(s);
    if (out_path.empty()) {
        std::cout << dump_sorted(j) << "\n";
    } else {
        write_json_file(out_path, j);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ctxlab: contextuality toolkit"};
    app.require_subcommand(1);

    std::string model_path, state_path, menus_path, density_path, out_path;
    std::string which = "phi+", function = "XOR", kind;
    double tol = 1e-7;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t seed = 1;
    int trials = 100;
    int n = 3, k = 1, n1 = 2, n2 = 3;
    bool emit_table = false, emit_certificate = false, verify = true;
    bool search_4d = false;
    std::vector<double> qs;

    auto* classify_cmd =
        app.add_subcommand("classify", "Classify a table in the hierarchy");
    classify_cmd->add_option("--model", model_path, "Empirical model JSON");
    classify_cmd->add_option("--state", state_path, "Quantum state JSON");
    classify_cmd->add_option("--menus", menus_path, "Measurement menus JSON");
    classify_cmd->add_option("--tol", tol, "Float LP tolerance");
    classify_cmd->add_option("--cap", cap, "Global enumeration cap");
    classify_cmd->add_flag("--emit-table", emit_table, "Echo the table");
    classify_cmd->add_flag("--emit-certificate", emit_certificate,
                           "Emit witnesses and certificates");

    auto* witness_cmd =
        app.add_subcommand("witness", "Hardy-type witness for a pure state");
    witness_cmd->add_option("--state", state_path, "Quantum state JSON")
        ->required();
    witness_cmd->add_option("--tol", tol, "Factorization tolerance");
    witness_cmd->add_flag("--verify,!--no-verify", verify,
                          "Check the produced menus (default on)");

    auto* entropy_cmd =
        app.add_subcommand("entropy", "Contextual entropies of a state");
    entropy_cmd->add_option("--state", state_path, "Pure state JSON");
    entropy_cmd->add_option("--density", density_path, "Density matrix JSON");
    entropy_cmd->add_option("--q", qs, "Renyi orders");
    entropy_cmd->add_option("--trials", trials, "Random contexts to sample");
    entropy_cmd->add_option("--seed", seed, "Sampling seed");

    auto* reconstruct_cmd = app.add_subcommand(
        "reconstruct", "Recover a state from its entropy oracle");
    reconstruct_cmd->add_option("--density", density_path, "Density matrix JSON")
        ->required();
    reconstruct_cmd->add_option("--seed", seed, "Rotation seed");

    auto* counter_cmd = app.add_subcommand(
        "counterexample", "Entropy subadditivity counterexample family");
    counter_cmd->add_option("--n1", n1, "First factor dimension");
    counter_cmd->add_option("--n2", n2, "Second factor dimension");
    counter_cmd->add_flag("--search-4d", search_4d,
                          "Search seeded random 4-dim violations");
    counter_cmd->add_option("--seed", seed, "First seed for --search-4d");

    auto* ch3_cmd = app.add_subcommand(
        "chapter3", "Balanced-state tables, verdicts, and dictatorships");
    ch3_cmd->add_flag("--emit-table", emit_table, "Echo the support tables");
    ch3_cmd->add_option("--tol", tol, "Float LP tolerance");
    ch3_cmd->add_option("--cap", cap, "Global enumeration cap");

    auto* gen_cmd = app.add_subcommand("gen-state", "Write a named state");
    gen_cmd->add_option("--kind", kind, "ghz|dicke|w|bell|balanced|random")
        ->required();
    gen_cmd->add_option("--n", n, "Qubit count");
    gen_cmd->add_option("--k", k, "Dicke parameter");
    gen_cmd->add_option("--which", which, "Bell state name");
    gen_cmd->add_option("--function", function, "Balanced function name");
    gen_cmd->add_option("--seed", seed, "Random state seed");
    gen_cmd->add_option("--out", out_path, "Output path (stdout if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            return run_classify(model_path, state_path, menus_path, tol, cap,
                                emit_table, emit_certificate);
        }
        if (app.got_subcommand(witness_cmd)) {
            return run_witness(state_path, tol, verify);
        }
        if (app.got_subcommand(entropy_cmd)) {
            return run_entropy(state_path, density_path, qs, trials, seed);
        }
        if (app.got_subcommand(reconstruct_cmd)) {
            return run_reconstruct(density_path, seed);
        }
        if (app.got_subcommand(counter_cmd)) {
            return run_counterexample(n1, n2, search_4d, seed);
        }
        if (app.got_subcommand(ch3_cmd)) {
            return run_chapter3(emit_table, tol, cap);
        }
        if (app.got_subcommand(gen_cmd)) {
            return run_gen_state(kind, n, k, which, function, seed, out_path);
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const verification_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
