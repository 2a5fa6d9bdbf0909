#include "ctxlab/chapter3.hpp"

#include <cmath>

#include "ctxlab/errors.hpp"

namespace ctxlab {

namespace {

const SupportTable kAndTable = {
    {"YYY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"YYZ", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"YZY", {1, 1, 0, 1, 1, 1, 1, 0}},
    {"ZYY", {1, 1, 1, 1, 0, 1, 1, 0}},
    {"YZZ", {1, 0, 1, 1, 1, 0, 1, 1}},
    {"ZYZ", {1, 0, 1, 0, 1, 1, 1, 1}},
    {"ZZY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZZZ", {1, 0, 1, 0, 1, 0, 0, 1}},
};

const SupportTable kXorTable = {
    {"YYY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"YYZ", {0, 1, 1, 0, 1, 0, 0, 1}},
    {"YZY", {0, 1, 1, 0, 1, 0, 0, 1}},
    {"ZYY", {0, 1, 1, 0, 1, 0, 0, 1}},
    {"YZZ", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZYZ", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZZY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZZZ", {1, 0, 0, 1, 0, 1, 1, 0}},
};

const SupportTable kNxorTable = {
    {"YYY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"YYZ", {1, 0, 0, 1, 0, 1, 1, 0}},
    {"YZY", {1, 0, 0, 1, 0, 1, 1, 0}},
    {"ZYY", {1, 0, 0, 1, 0, 1, 1, 0}},
    {"YZZ", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZYZ", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZZY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZZZ", {0, 1, 1, 0, 1, 0, 0, 1}},
};

const SupportTable kNandTable = {
    {"YYY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"YYZ", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"YZY", {1, 1, 1, 0, 1, 1, 0, 1}},
    {"ZYY", {1, 1, 1, 1, 1, 0, 0, 1}},
    {"YZZ", {0, 1, 1, 1, 0, 1, 1, 1}},
    {"ZYZ", {0, 1, 0, 1, 1, 1, 1, 1}},
    {"ZZY", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"ZZZ", {0, 1, 0, 1, 0, 1, 1, 0}},
};

BooleanFunction make_f(std::vector<std::vector<int>> monomials) {
    BooleanFunction f;
    f.arity = 2;
    f.monomials = std::move(monomials);
    return f;
}

}  // namespace

SupportTable relabel_support(const SupportTable& table,
                             const std::array<int, 3>& flips) {
    const int mask = flips[0] * 4 + flips[1] * 2 + flips[2];
    SupportTable out;
    for (const auto& [key, row] : table) {
        std::array<int, 8> flipped{};
        for (int idx = 0; idx < 8; ++idx) flipped[idx] = row[idx ^ mask];
        out[key] = flipped;
    }
    return out;
}

std::vector<Chapter3Entry> chapter3_entries() {
    const auto strong = ContextualityClass::Strongly;
    const auto logical = ContextualityClass::Logically;
    std::vector<Chapter3Entry> out;
    out.push_back({"XOR", make_f({{1}, {2}}), kXorTable, strong});
    out.push_back({"NXOR", make_f({{1}, {2}, {}}), kNxorTable, strong});
    out.push_back({"AND", make_f({{1, 2}}), kAndTable, logical});
    out.push_back({"NAND", make_f({{1, 2}, {}}), kNandTable, logical});
    out.push_back({"OR", make_f({{1}, {2}, {1, 2}}),
                   relabel_support(kAndTable, {1, 1, 1}), logical});
    out.push_back({"NOR", make_f({{1}, {2}, {1, 2}, {}}),
                   relabel_support(kAndTable, {1, 1, 0}), logical});
    out.push_back({"L1", make_f({{1}, {1, 2}, {}}),
                   relabel_support(kAndTable, {0, 1, 1}), logical});
    out.push_back({"NL1", make_f({{1}, {1, 2}}),
                   relabel_support(kAndTable, {0, 1, 0}), logical});
    out.push_back({"L2", make_f({{2}, {1, 2}, {}}),
                   relabel_support(kAndTable, {1, 0, 1}), logical});
    out.push_back({"NL2", make_f({{2}, {1, 2}}),
                   relabel_support(kAndTable, {1, 0, 0}), logical});
    return out;
}

std::vector<Chapter3Report> run_chapter3_suite() {
    const std::vector<std::vector<LocalObservable>> menus(
        3, {pauli_observable('Y'), pauli_observable('Z')});
    const auto keys = context_menu_labels(menus);

    std::vector<Chapter3Report> reports;
    for (const auto& entry : chapter3_entries()) {
        Chapter3Report report;
        report.name = entry.name;

        const QuantumState state = balanced_state(entry.f);
        EmpiricalModel model = empirical_model(state, menus);
        const EmpiricalModel exact = snap_model_to_rational(model);

        report.table_match = true;
        for (int c = 0; c < exact.scenario.n_contexts(); ++c) {
            const auto sections = exact.scenario.enumerate_sections(c);
            const auto& want = entry.table.at(keys[c]);
            for (int si = 0; si < 8; ++si) {
                const bool possible =
                    !exact.weight(c, sections[si]).rational().is_zero();
                if (possible != (want[si] == 1)) report.table_match = false;
            }
        }

        report.verdict = classify(exact);
        report.verdict_match = report.verdict == entry.expected;
        reports.push_back(std::move(report));
    }
    return reports;
}

QuantumState dictatorship_state(int i, bool plus) {
    if (i != 1 && i != 2) throw input_error("dictatorship index must be 1 or 2");
    QuantumState plus_qubit;
    plus_qubit.n = 1;
    plus_qubit.amplitudes.resize(2);
    const double s2 = 1.0 / std::sqrt(2.0);
    plus_qubit.amplitudes << s2, s2;
    const QuantumState pair = bell_state(plus ? "phi+" : "psi+");
    return i == 2 ? tensor(plus_qubit, pair) : tensor(pair, plus_qubit);
}

std::vector<std::vector<LocalObservable>> dictatorship_menu(bool plus) {
    const double pi = 3.14159265358979323846;
    std::vector<LocalObservable> menu;
    if (plus) {
        menu = {observable_from_angles(pi / 2, pi / 8, "A"),
                observable_from_angles(pi / 2, 5 * pi / 8, "B")};
    } else {
        menu = {observable_from_angles(pi / 8, pi / 2, "C"),
                observable_from_angles(5 * pi / 8, pi / 2, "D")};
    }
    return {menu, menu, menu};
}

}  // namespace ctxlab
