#include "ctxlab/scenario.hpp"

#include <algorithm>
#include <set>

namespace ctxlab {

void MeasurementScenario::validate() const {
    if (measurements.empty()) {
        throw input_error("scenario has no measurements");
    }
    if (outcomes.size() < 2) {
        throw input_error("scenario needs at least two outcomes");
    }
    {
        std::set<std::string> seen(measurements.begin(), measurements.end());
        if (seen.size() != measurements.size()) {
            throw input_error("duplicate measurement labels");
        }
        std::set<std::string> oseen(outcomes.begin(), outcomes.end());
        if (oseen.size() != outcomes.size()) {
            throw input_error("duplicate outcome labels");
        }
    }
    if (cover.empty()) {
        throw input_error("scenario has an empty cover");
    }
    std::set<int> covered;
    for (const auto& ctx : cover) {
        if (ctx.empty()) {
            throw input_error("cover contains an empty context");
        }
        std::set<int> in_ctx;
        for (int m : ctx) {
            if (m < 0 || m >= n_measurements()) {
                throw input_error("context references an unknown measurement");
            }
            if (!in_ctx.insert(m).second) {
                throw input_error("context repeats a measurement");
            }
            covered.insert(m);
        }
    }
    if (static_cast<int>(covered.size()) != n_measurements()) {
        throw input_error("cover does not exhaust the measurement set");
    }
    // Anti-chain: no context contained in another.
    for (std::size_t i = 0; i < cover.size(); ++i) {
        std::set<int> a(cover[i].begin(), cover[i].end());
        for (std::size_t j = 0; j < cover.size(); ++j) {
            if (i == j) continue;
            bool subset = std::all_of(cover[j].begin(), cover[j].end(),
                                      [&](int m) { return a.count(m) > 0; });
            if (subset && cover[j].size() <= a.size()) {
                throw input_error("cover is not an anti-chain");
            }
        }
    }
    if (!party.empty()) {
        if (party.size() != measurements.size()) {
            throw input_error("party map size mismatch");
        }
        const int n_parties =
            *std::max_element(party.begin(), party.end()) + 1;
        for (const auto& ctx : cover) {
            std::vector<int> per_party(n_parties, 0);
            for (int m : ctx) {
                per_party[party[m]] += 1;
            }
            for (int c : per_party) {
                if (c != 1) {
                    throw input_error(
                        "Bell-type context must hold exactly one measurement "
                        "per party");
                }
            }
        }
    }
}

std::uint64_t MeasurementScenario::global_count(std::uint64_t cap) const {
    std::uint64_t count = 1;
    const std::uint64_t l = static_cast<std::uint64_t>(n_outcomes());
    for (int m = 0; m < n_measurements(); ++m) {
        if (count > cap / l) {
            throw capacity_error("global assignment enumeration exceeds cap");
        }
        count *= l;
    }
    if (count > cap) {
        throw capacity_error("global assignment enumeration exceeds cap");
    }
    return count;
}

std::vector<Section> MeasurementScenario::enumerate_sections(int ctx) const {
    const int k = static_cast<int>(cover[ctx].size());
    const int l = n_outcomes();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(l);
    std::vector<Section> out;
    out.reserve(total);
    Section s(k, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(s);
        // lexicographic successor: last position varies fastest
        for (int pos = k - 1; pos >= 0; --pos) {
            if (++s[pos] < l) break;
            s[pos] = 0;
        }
    }
    return out;
}

std::vector<GlobalAssignment> MeasurementScenario::enumerate_global(
    std::uint64_t cap) const {
    const std::uint64_t total = global_count(cap);
    const int nx = n_measurements();
    const int l = n_outcomes();
    std::vector<GlobalAssignment> out;
    out.reserve(total);
    GlobalAssignment g(nx, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(g);
        for (int pos = nx - 1; pos >= 0; --pos) {
            if (++g[pos] < l) break;
            g[pos] = 0;
        }
    }
    return out;
}

Section MeasurementScenario::restrict_global(const GlobalAssignment& g,
                                             int ctx) const {
    Section s;
    s.reserve(cover[ctx].size());
    for (int m : cover[ctx]) {
        s.push_back(g[m]);
    }
    return s;
}

int MeasurementScenario::measurement_index(const std::string& label) const {
    for (int m = 0; m < n_measurements(); ++m) {
        if (measurements[m] == label) return m;
    }
    return -1;
}

std::string MeasurementScenario::section_label(int ctx, const Section& s) const {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += outcomes[s[i]];
    }
    return out;
}

Section MeasurementScenario::section_from_label(int ctx,
                                                const std::string& text) const {
    Section s;
    std::size_t pos = 0;
    const std::size_t k = cover[ctx].size();
    while (pos < text.size() && s.size() < k) {
        // longest-match against the outcome labels
        int best = -1;
        std::size_t best_len = 0;
        for (int o = 0; o < n_outcomes(); ++o) {
            const std::string& lab = outcomes[o];
            if (lab.size() > best_len &&
                text.compare(pos, lab.size(), lab) == 0) {
                best = o;
                best_len = lab.size();
            }
        }
        if (best < 0) {
            throw input_error("unparsable section string: " + text);
        }
        s.push_back(best);
        pos += best_len;
    }
    if (pos != text.size() || s.size() != k) {
        throw input_error("section string has wrong length: " + text);
    }
    return s;
}

std::string MeasurementScenario::context_key(int ctx) const {
    std::string out;
    for (std::size_t i = 0; i < cover[ctx].size(); ++i) {
        if (i) out += ',';
        out += measurements[cover[ctx][i]];
    }
    return out;
}

int MeasurementScenario::context_index_by_key(const std::string& key) const {
    for (int c = 0; c < n_contexts(); ++c) {
        if (context_key(c) == key) return c;
    }
    return -1;
}

}  // namespace ctxlab
