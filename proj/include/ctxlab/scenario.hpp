// scenario.hpp
// Measurement scenarios: measurement labels, a shared outcome set, and an
// anti-chain cover of maximal contexts; section and global enumeration.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ctxlab {

// Outcome indices aligned with one context's measurement order.
using Section = std::vector<int>;

// Outcome indices for every measurement of the scenario.
using GlobalAssignment = std::vector<int>;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 24;

struct MeasurementScenario {
    std::vector<std::string> measurements;   // the set X, ordered
    std::vector<std::string> outcomes;       // the set O, ordered, e.g. {"+","-"}
    std::vector<std::vector<int>> cover;     // contexts as measurement indices
    std::vector<int> party;                  // optional party map; empty if unused

    int n_measurements() const { return static_cast<int>(measurements.size()); }
    int n_outcomes() const { return static_cast<int>(outcomes.size()); }
    int n_contexts() const { return static_cast<int>(cover.size()); }
    bool bell_type() const { return !party.empty(); }

    // Throws input_error unless: labels unique and non-empty, cover covers X,
    // cover is an anti-chain, and (when a party map is present) every context
    // holds exactly one measurement per party.
    void validate() const;

    // |O|^|X|; throws capacity_error when the count exceeds `cap`.
    std::uint64_t global_count(std::uint64_t cap = kDefaultEnumerationCap) const;

    // All sections of context `ctx`, lexicographic with the context's first
    // measurement most significant.
    std::vector<Section> enumerate_sections(int ctx) const;

    // All global assignments, lexicographic with measurement 0 most
    // significant; throws capacity_error above `cap`.
    std::vector<GlobalAssignment> enumerate_global(
        std::uint64_t cap = kDefaultEnumerationCap) const;

    Section restrict_global(const GlobalAssignment& g, int ctx) const;

    int measurement_index(const std::string& label) const;  // -1 when absent

    // Outcome string in the context's measurement order, e.g. "+-+".
    std::string section_label(int ctx, const Section& s) const;
    Section section_from_label(int ctx, const std::string& text) const;

    // Measurement labels of a context joined with ',', e.g. "a,b".
    std::string context_key(int ctx) const;
    int context_index_by_key(const std::string& key) const;  // -1 when absent
};

}  // namespace ctxlab
