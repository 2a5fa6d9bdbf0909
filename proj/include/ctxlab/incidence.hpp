// incidence.hpp
// The 0/1 incidence matrix between context sections and global assignments,
// plus the model weight vector in matching row order.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "model.hpp"

namespace ctxlab {

struct IncidenceMatrix {
    int p = 0;  // rows: contexts in cover order, sections lexicographic
    int q = 0;  // columns: global assignments lexicographic
    std::vector<std::vector<std::uint8_t>> entries;
    std::vector<std::pair<int, Section>> row_sections;  // (context, section)
};

// M[i][j] = 1 iff global j restricted to row i's context equals row i's
// section. Every column carries exactly |cover| ones.
IncidenceMatrix build_incidence_matrix(
    const MeasurementScenario& scn,
    std::uint64_t cap = kDefaultEnumerationCap);

// Weights in the incidence row order (missing sections contribute zero).
std::vector<Weight> model_vector(const EmpiricalModel& m);

}  // namespace ctxlab
