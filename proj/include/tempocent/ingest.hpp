#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "tempocent/graph.hpp"

namespace tempocent {

/// One timestamped proximity observation between two distinct nodes.
struct ContactEvent {
    std::string node_a;
    std::string node_b;
    std::int64_t timestamp = 0;  // seconds since epoch, >= 0
};

/// Time bucketing: a slot is a contiguous run of slot_duration/interval_duration
/// counting sub-intervals.
struct SlotConfig {
    std::int64_t slot_duration = 604800;   // one week
    std::int64_t interval_duration = 300;  // proximity-counting sub-interval
    std::int64_t origin = 0;               // epoch timestamp of slot 0

    // Throws ConfigError unless slot_duration >= interval_duration >= 1 and
    // slot_duration is a multiple of interval_duration.
    void validate() const;

    std::int64_t intervals_per_slot() const { return slot_duration / interval_duration; }
};

struct ParseWarning {
    std::size_t line = 0;
    std::string message;
};

enum class ParseMode { Strict, Lenient };

struct ParseResult {
    std::vector<ContactEvent> events;  // input order
    NodeRegistry registry;             // labels in first-seen order
    std::vector<ParseWarning> warnings;
};

// CSV grammar: `node_a,node_b,timestamp` per line. Lines starting with '#'
// are comments; a line byte-identical to "node_a,node_b,timestamp" is a
// header and skipped; blank lines are ignored. In Strict mode a malformed
// line throws ParseError; in Lenient mode it is skipped and recorded.
ParseResult parse_events(std::istream& in, ParseMode mode = ParseMode::Strict);

/// Per-slot symmetric matrix counting distinct co-proximity intervals.
struct SimilarityMatrix {
    std::int64_t slot = 0;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> counts;  // row-major n*n, symmetric, zero diagonal

    std::uint32_t at(NodeId i, NodeId j) const {
        return counts[static_cast<std::size_t>(i) * n + j];
    }
};

// One matrix per slot between the first and last non-empty slot (inclusive);
// slots without events in that range come out as zero matrices. An event at
// timestamp ts lands in slot floor((ts-origin)/slot_duration) and interval
// floor((ts-origin)/interval_duration); duplicate sightings of a pair inside
// one interval count once. Throws IngestError on events before the origin.
std::vector<SimilarityMatrix> build_similarity(const std::vector<ContactEvent>& events,
                                               const NodeRegistry& registry,
                                               const SlotConfig& cfg);

// Lifts counts to real-valued adjacency weights, one SlotGraph per matrix.
std::vector<SlotGraph> to_slot_graphs(const std::vector<SimilarityMatrix>& sims,
                                      std::shared_ptr<const NodeRegistry> registry);

// Smallest event timestamp rounded down to a slot boundary. Using the minimum
// (rather than the first event) keeps the default origin invariant under
// reordering of the input file.
std::int64_t default_origin(const std::vector<ContactEvent>& events,
                            std::int64_t slot_duration);

}  // namespace tempocent
