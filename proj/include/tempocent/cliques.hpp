#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tempocent/graph.hpp"

namespace tempocent {

/// Vertex set of one maximal clique, sorted ascending.
struct Clique {
    std::vector<NodeId> members;

    std::uint32_t size() const { return static_cast<std::uint32_t>(members.size()); }
    bool operator==(const Clique&) const = default;
};

/// All maximal cliques of one slot, canonically ordered (lexicographic by
/// member list), plus the per-size histogram.
struct CliqueSet {
    std::int64_t slot = 0;
    std::uint32_t n = 0;  // node count of the source graph
    std::vector<Clique> cliques;
    std::map<std::uint32_t, std::size_t> size_histogram;
};

inline constexpr std::size_t kDefaultCliqueLimit = 10'000'000;

// Basic Bron-Kerbosch: R and X start empty, P holds all vertices; a branch
// reports R as maximal when both P and X are exhausted. Isolated vertices
// come out as singleton cliques. Throws ResourceLimitError past max_cliques.
CliqueSet bron_kerbosch(const BinaryGraph& g, std::int64_t slot = 0,
                        std::size_t max_cliques = kDefaultCliqueLimit);

// Pivoted variant: branches only on P \ N(pivot), where the pivot maximizes
// |N(pivot) ∩ P| over P ∪ X (ties to the lowest id). Same output contract.
CliqueSet bron_kerbosch_pivot(const BinaryGraph& g, std::int64_t slot = 0,
                              std::size_t max_cliques = kDefaultCliqueLimit);

// Pointwise sum of the per-slot size histograms.
std::map<std::uint32_t, std::size_t> clique_histogram(const std::vector<CliqueSet>& sets);

/// Clique-participation report for one slot.
struct SentinelReport {
    std::int64_t slot = 0;
    std::vector<std::uint32_t> participation;  // per node: #cliques containing it
    std::vector<NodeId> common_nodes;          // participation >= phi * |cliques|, ascending
    std::vector<NodeId> persistent_sentinels;  // common in `window` consecutive slots ending here
};

// phi in (0, 1]; phi = 1 selects nodes present in every maximal clique of the
// slot. persistent_sentinels stays empty until `window` slots exist. Sets must
// be ordered by slot and share n.
std::vector<SentinelReport> sentinel_nodes(const std::vector<CliqueSet>& sets, double phi,
                                           std::uint32_t window);

}  // namespace tempocent
