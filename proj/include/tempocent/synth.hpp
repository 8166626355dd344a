#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tempocent/ingest.hpp"

namespace tempocent {

/// Seeded community-structured contact trace generator. Stands in for real
/// proximity traces so the whole pipeline is reproducible from nothing.
struct SyntheticModel {
    std::uint32_t n_nodes = 30;
    std::uint32_t n_slots = 4;
    std::uint32_t n_communities = 3;
    double intra_rate = 6.0;  // expected events per intra-community pair per slot
    double inter_rate = 0.3;  // expected events per cross-community pair per slot
    std::uint32_t hub_count = 1;  // nodes 0..hub_count-1 get boosted rates
    double hub_boost = 4.0;
    std::uint64_t seed = 0;
    std::int64_t slot_duration = 604800;

    void validate() const;
};

// Deterministic for a fixed model (its own portable samplers, no stdlib
// distributions). Events come back sorted by timestamp, ties by label pair.
std::vector<ContactEvent> generate_trace(const SyntheticModel& model);

// Header line plus one `a,b,ts` line per event.
void write_trace_csv(std::ostream& out, const std::vector<ContactEvent>& events);

}  // namespace tempocent
