#include "ctxlab/model.hpp"

#include <algorithm>
#include <cmath>

namespace ctxlab {

void EmpiricalModel::validate(double eps_norm) const {
    scenario.validate();
    if (rows.size() != scenario.cover.size()) {
        throw input_error("model row count does not match the cover");
    }
    for (int c = 0; c < scenario.n_contexts(); ++c) {
        const auto& ctx = scenario.cover[c];
        bool any_possible = false;
        double total = 0.0;
        for (const auto& [sec, w] : rows[c]) {
            if (sec.size() != ctx.size()) {
                throw input_error("section length mismatch in context " +
                                  scenario.context_key(c));
            }
            for (int o : sec) {
                if (o < 0 || o >= scenario.n_outcomes()) {
                    throw input_error("section uses an unknown outcome");
                }
            }
            if (w.value() < -eps_norm) {
                throw input_error("negative weight in context " +
                                  scenario.context_key(c));
            }
            if (!w.is_zero()) any_possible = true;
            total += w.value();
        }
        if (semiring == Semiring::Probability) {
            if (std::abs(total - 1.0) > eps_norm) {
                throw input_error("row not normalized in context " +
                                  scenario.context_key(c));
            }
        } else if (!any_possible) {
            throw input_error("boolean row with no possible section in " +
                              scenario.context_key(c));
        }
    }
}

bool EmpiricalModel::all_exact() const {
    for (const auto& row : rows) {
        for (const auto& [sec, w] : row) {
            if (!w.is_exact()) return false;
        }
    }
    return true;
}

Weight EmpiricalModel::weight(int ctx, const Section& s) const {
    auto it = rows[ctx].find(s);
    if (it == rows[ctx].end()) return Weight();
    return it->second;
}

bool EmpiricalModel::possible(int ctx, const Section& s, double eps) const {
    auto it = rows[ctx].find(s);
    return it != rows[ctx].end() && std::abs(it->second.value()) > eps;
}

Row marginalize(const Row& row, const std::vector<int>& context,
                const std::vector<int>& target, Semiring semiring) {
    std::vector<int> positions;
    positions.reserve(target.size());
    for (int m : target) {
        auto it = std::find(context.begin(), context.end(), m);
        if (it == context.end()) {
            throw input_error("marginalization target is not a subset of the "
                              "context");
        }
        positions.push_back(static_cast<int>(it - context.begin()));
    }
    Row out;
    for (const auto& [sec, w] : row) {
        Section key;
        key.reserve(positions.size());
        for (int p : positions) key.push_back(sec[p]);
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(std::move(key), w);
        } else if (semiring == Semiring::Probability) {
            it->second = it->second + w;
        } else if (it->second.is_zero() && !w.is_zero()) {
            it->second = Weight::exact(1);  // boolean join
        }
    }
    if (semiring == Semiring::Boolean) {
        for (auto& [sec, w] : out) {
            if (!w.is_zero()) w = Weight::exact(1);
        }
    }
    return out;
}

std::vector<NoSignallingViolation> check_no_signalling(const EmpiricalModel& m,
                                                       double eps) {
    std::vector<NoSignallingViolation> report;
    const auto& scn = m.scenario;
    for (int a = 0; a < scn.n_contexts(); ++a) {
        for (int b = a + 1; b < scn.n_contexts(); ++b) {
            std::vector<int> overlap;
            for (int meas : scn.cover[a]) {
                if (std::find(scn.cover[b].begin(), scn.cover[b].end(), meas) !=
                    scn.cover[b].end()) {
                    overlap.push_back(meas);
                }
            }
            if (overlap.empty()) continue;
            Row ma = marginalize(m.rows[a], scn.cover[a], overlap, m.semiring);
            Row mb = marginalize(m.rows[b], scn.cover[b], overlap, m.semiring);
            std::map<Section, double> diffs;
            for (const auto& [sec, w] : ma) diffs[sec] += w.value();
            for (const auto& [sec, w] : mb) diffs[sec] -= w.value();
            for (const auto& [sec, d] : diffs) {
                if (std::abs(d) > eps) {
                    report.push_back({a, b, overlap, sec, std::abs(d)});
                }
            }
        }
    }
    return report;
}

EmpiricalModel support(const EmpiricalModel& m, double eps_supp) {
    EmpiricalModel out;
    out.scenario = m.scenario;
    out.semiring = Semiring::Boolean;
    out.rows.resize(m.rows.size());
    for (std::size_t c = 0; c < m.rows.size(); ++c) {
        for (const auto& [sec, w] : m.rows[c]) {
            if (std::abs(w.value()) > eps_supp) {
                out.rows[c].emplace(sec, Weight::exact(1));
            }
        }
    }
    return out;
}

}  // namespace ctxlab
