#include "ctxlab/incidence.hpp"

namespace ctxlab {

IncidenceMatrix build_incidence_matrix(const MeasurementScenario& scn,
                                       std::uint64_t cap) {
    const auto globals = scn.enumerate_global(cap);
    IncidenceMatrix M;
    M.q = static_cast<int>(globals.size());
    for (int c = 0; c < scn.n_contexts(); ++c) {
        for (const auto& sec : scn.enumerate_sections(c)) {
            std::vector<std::uint8_t> row(M.q, 0);
            for (int j = 0; j < M.q; ++j) {
                if (scn.restrict_global(globals[j], c) == sec) {
                    row[j] = 1;
                }
            }
            M.entries.push_back(std::move(row));
            M.row_sections.emplace_back(c, sec);
        }
    }
    M.p = static_cast<int>(M.entries.size());
    return M;
}

std::vector<Weight> model_vector(const EmpiricalModel& m) {
    std::vector<Weight> v;
    for (int c = 0; c < m.scenario.n_contexts(); ++c) {
        for (const auto& sec : m.scenario.enumerate_sections(c)) {
            v.push_back(m.weight(c, sec));
        }
    }
    return v;
}

}  // namespace ctxlab
