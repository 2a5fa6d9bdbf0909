// chapter3.hpp
// Balanced three-qubit states built from two-input boolean functions, their
// expected Y/Z support tables and contextuality verdicts, and the
// dictatorship (single-variable) states with menus that expose them as only
// probabilistically contextual.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hierarchy.hpp"
#include "quantum.hpp"

namespace ctxlab {

// Support rows keyed by context label ("YYY" .. "ZZZ"); entries follow the
// sections (+,+,+) .. (-,-,-) in lexicographic order.
using SupportTable = std::map<std::string, std::array<int, 8>>;

struct Chapter3Entry {
    std::string name;
    BooleanFunction f;
    SupportTable table;
    ContextualityClass expected;  // Strongly or Logically
};

// XOR, NXOR, AND, NAND, OR, NOR, L1, NL1, L2, NL2.
std::vector<Chapter3Entry> chapter3_entries();

// new[section] = old[section ^ flips]: relabel outcomes per qubit.
SupportTable relabel_support(const SupportTable& table,
                             const std::array<int, 3>& flips);

struct Chapter3Report {
    std::string name;
    bool table_match = false;
    ContextualityClass verdict = ContextualityClass::NonContextual;
    bool verdict_match = false;
};

// Rebuild every balanced state, snap its Y/Z table to exact rationals,
// compare the support against the stored table, and classify.
std::vector<Chapter3Report> run_chapter3_suite();

// The two dictatorship states (i = 1 or 2): a Bell pair between qubit i's
// wire pair and a |+> factor on the remaining qubit.
QuantumState dictatorship_state(int i, bool plus);

// Three copies of the one menu pair under which the matching dictatorship
// state is probabilistically but not logically contextual.
std::vector<std::vector<LocalObservable>> dictatorship_menu(bool plus);

}  // namespace ctxlab
