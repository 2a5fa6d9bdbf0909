#include "ctxlab/json_io.hpp"

#include <fstream>

#include "ctxlab/errors.hpp"

namespace ctxlab {

namespace {

Weight weight_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        return Weight::exact(rational_from_string(j.get<std::string>()));
    }
    if (j.is_number_integer()) {
        return Weight::exact(Rational(j.get<long long>()));
    }
    if (j.is_number()) {
        return Weight::approx(j.get<double>());
    }
    throw input_error("weights must be \"p/q\" strings or numbers");
}

nlohmann::json weight_to_json(const Weight& w) {
    if (w.is_exact()) return rational_to_string(w.rational());
    return w.value();
}

}  // namespace

nlohmann::json scenario_to_json(const MeasurementScenario& sc) {
    nlohmann::json j;
    j["measurements"] = sc.measurements;
    j["outcomes"] = sc.outcomes;
    nlohmann::json cover = nlohmann::json::array();
    for (const auto& ctx : sc.cover) {
        nlohmann::json labels = nlohmann::json::array();
        for (int m : ctx) labels.push_back(sc.measurements[m]);
        cover.push_back(labels);
    }
    j["cover"] = cover;
    if (!sc.party.empty()) {
        nlohmann::json party;
        for (std::size_t i = 0; i < sc.measurements.size(); ++i) {
            party[sc.measurements[i]] = sc.party[i];
        }
        j["party"] = party;
    }
    return j;
}

MeasurementScenario scenario_from_json(const nlohmann::json& j) {
    MeasurementScenario sc;
    if (!j.contains("measurements") || !j.contains("cover")) {
        throw input_error("scenario needs \"measurements\" and \"cover\"");
    }
    sc.measurements = j.at("measurements").get<std::vector<std::string>>();
    sc.outcomes = j.value("outcomes", std::vector<std::string>{"+", "-"});
    for (const auto& ctx : j.at("cover")) {
        std::vector<int> indices;
        for (const auto& label : ctx) {
            const int idx = sc.measurement_index(label.get<std::string>());
            if (idx < 0) {
                throw input_error("cover uses unknown measurement \"" +
                                  label.get<std::string>() + "\"");
            }
            indices.push_back(idx);
        }
        sc.cover.push_back(std::move(indices));
    }
    if (j.contains("party")) {
        sc.party.assign(sc.measurements.size(), -1);
        for (const auto& [label, p] : j.at("party").items()) {
            const int idx = sc.measurement_index(label);
            if (idx < 0) {
                throw input_error("party map uses unknown measurement \"" +
                                  label + "\"");
            }
            sc.party[idx] = p.get<int>();
        }
        for (int p : sc.party) {
            if (p < 0) throw input_error("party map must cover all measurements");
        }
    }
    sc.validate();
    return sc;
}

nlohmann::json model_to_json(const EmpiricalModel& m) {
    nlohmann::json j = scenario_to_json(m.scenario);
    j["semiring"] =
        m.semiring == Semiring::Probability ? "probability" : "boolean";
    nlohmann::json rows;
    for (int c = 0; c < m.scenario.n_contexts(); ++c) {
        nlohmann::json row;
        for (const auto& [sec, w] : m.rows[c]) {
            row[m.scenario.section_label(c, sec)] = weight_to_json(w);
        }
        rows[m.scenario.context_key(c)] = row;
    }
    j["rows"] = rows;
    return j;
}

EmpiricalModel model_from_json(const nlohmann::json& j) {
    EmpiricalModel m;
    m.scenario = scenario_from_json(j);
    const std::string semiring = j.value("semiring", "probability");
    if (semiring == "probability") {
        m.semiring = Semiring::Probability;
    } else if (semiring == "boolean") {
        m.semiring = Semiring::Boolean;
    } else {
        throw input_error("semiring must be \"probability\" or \"boolean\"");
    }
    if (!j.contains("rows")) throw input_error("model needs \"rows\"");
    m.rows.resize(m.scenario.n_contexts());
    for (const auto& [key, row] : j.at("rows").items()) {
        const int c = m.scenario.context_index_by_key(key);
        if (c < 0) {
            throw input_error("row key \"" + key + "\" matches no context");
        }
        for (const auto& [sec_label, w] : row.items()) {
            const Section sec = m.scenario.section_from_label(c, sec_label);
            m.rows[c][sec] = weight_from_json(w);
        }
    }
    m.validate();
    return m;
}

QuantumState state_from_json(const nlohmann::json& j) {
    if (j.contains("amplitudes")) {
        QuantumState s;
        const auto& amps = j.at("amplitudes");
        std::int64_t dim = static_cast<std::int64_t>(amps.size());
        int n = j.value("n", 0);
        if (n == 0) {
            while ((std::int64_t(1) << (n + 1)) <= dim) ++n;
        }
        if ((std::int64_t(1) << n) != dim) {
            throw input_error("amplitude count must be a power of two");
        }
        s.n = n;
        s.amplitudes.resize(dim);
        for (std::int64_t i = 0; i < dim; ++i) {
            const auto& a = amps.at(i);
            if (a.is_array()) {
                s.amplitudes[i] = Complex(a.at(0).get<double>(),
                                          a.at(1).get<double>());
            } else {
                s.amplitudes[i] = Complex(a.get<double>(), 0.0);
            }
        }
        s.validate(1e-6);
        return s;
    }
    const std::string kind = j.value("kind", "");
    if (kind == "ghz") return ghz_state(j.at("n").get<int>());
    if (kind == "dicke") {
        return dicke_state(j.at("n").get<int>(), j.at("k").get<int>());
    }
    if (kind == "w") return w_state();
    if (kind == "bell") return bell_state(j.value("which", "phi+"));
    if (kind == "balanced") {
        BooleanFunction f;
        f.monomials =
            j.at("monomials").get<std::vector<std::vector<int>>>();
        int arity = j.value("arity", 0);
        if (arity == 0) {
            for (const auto& mono : f.monomials) {
                for (int v : mono) arity = std::max(arity, v);
            }
        }
        f.arity = arity;
        return balanced_state(f);
    }
    if (kind == "random") {
        return random_state(j.at("n").get<int>(),
                            j.value("seed", std::uint64_t(1)));
    }
    throw input_error("state needs \"amplitudes\" or a known \"kind\"");
}

nlohmann::json state_to_json(const QuantumState& s) {
    nlohmann::json j;
    j["n"] = s.n;
    nlohmann::json amps = nlohmann::json::array();
    for (std::int64_t i = 0; i < s.amplitudes.size(); ++i) {
        amps.push_back({s.amplitudes[i].real(), s.amplitudes[i].imag()});
    }
    j["amplitudes"] = amps;
    return j;
}

LocalObservable observable_from_json(const nlohmann::json& j) {
    if (j.contains("pauli")) {
        const std::string p = j.at("pauli").get<std::string>();
        if (p.size() != 1) throw input_error("pauli must be X, Y, or Z");
        return pauli_observable(p[0]);
    }
    if (j.contains("theta") && j.contains("phi")) {
        return observable_from_angles(j.at("theta").get<double>(),
                                      j.at("phi").get<double>(),
                                      j.value("label", "U"));
    }
    throw input_error("observable needs \"pauli\" or \"theta\"/\"phi\"");
}

std::vector<std::vector<LocalObservable>> menus_from_json(
    const nlohmann::json& j) {
    std::vector<std::vector<LocalObservable>> menus;
    for (const auto& party : j) {
        std::vector<LocalObservable> menu;
        for (const auto& obs : party) menu.push_back(observable_from_json(obs));
        if (menu.empty()) throw input_error("empty measurement menu");
        menus.push_back(std::move(menu));
    }
    if (menus.empty()) throw input_error("menus need at least one party");
    return menus;
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["n"] = static_cast<int>(rho.rows());
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < rho.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < rho.cols(); ++k) {
            row.push_back({rho(i, k).real(), rho(i, k).imag()});
        }
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

DensityMatrix density_from_json(const nlohmann::json& j) {
    if (!j.contains("entries")) throw input_error("density needs \"entries\"");
    const auto& entries = j.at("entries");
    const int n = j.value("n", static_cast<int>(entries.size()));
    if (n < 1 || static_cast<int>(entries.size()) != n) {
        throw input_error("density entry rows do not match n");
    }
    DensityMatrix rho(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = entries.at(i);
        if (static_cast<int>(row.size()) != n) {
            throw input_error("density entry columns do not match n");
        }
        for (int k = 0; k < n; ++k) {
            const auto& e = row.at(k);
            if (e.is_array()) {
                rho(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
            } else {
                rho(i, k) = Complex(e.get<double>(), 0.0);
            }
        }
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
        throw input_error("density matrix must be Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-6) {
        throw input_error("density matrix must have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    if (solver.eigenvalues().minCoeff() < -1e-8) {
        throw input_error("density matrix must be positive semidefinite");
    }
    return rho;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << dump_sorted(j) << "\n";
}

std::string dump_sorted(const nlohmann::json& j, int indent) {
    return j.dump(indent);
}

}  // namespace ctxlab
