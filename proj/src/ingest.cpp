#include "tempocent/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <tuple>

namespace tempocent {

void SlotConfig::validate() const {
    if (interval_duration < 1) throw ConfigError("interval_duration must be >= 1");
    if (slot_duration < interval_duration)
        throw ConfigError("slot_duration must be >= interval_duration");
    if (slot_duration % interval_duration != 0)
        throw ConfigError("slot_duration must be a multiple of interval_duration");
}

namespace {

constexpr const char* kHeader = "node_a,node_b,timestamp";

bool parse_line(const std::string& line, ContactEvent& ev, std::string& err) {
    const auto c1 = line.find(',');
    if (c1 == std::string::npos) {
        err = "expected 3 comma-separated fields";
        return false;
    }
    const auto c2 = line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
        err = "expected 3 comma-separated fields";
        return false;
    }
    ev.node_a = line.substr(0, c1);
    ev.node_b = line.substr(c1 + 1, c2 - c1 - 1);
    if (ev.node_a.empty() || ev.node_b.empty()) {
        err = "empty node label";
        return false;
    }
    const char* ts_begin = line.data() + c2 + 1;
    const char* ts_end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(ts_begin, ts_end, ev.timestamp);
    if (ec != std::errc{} || ptr != ts_end || ts_begin == ts_end) {
        err = "invalid timestamp '" + line.substr(c2 + 1) + "'";
        return false;
    }
    if (ev.timestamp < 0) {
        err = "negative timestamp";
        return false;
    }
    if (ev.node_a == ev.node_b) {
        err = "self-contact of node '" + ev.node_a + "'";
        return false;
    }
    return true;
}

}  // namespace

ParseResult parse_events(std::istream& in, ParseMode mode) {
    ParseResult out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#' || line == kHeader) continue;
        ContactEvent ev;
        std::string err;
        if (!parse_line(line, ev, err)) {
            if (mode == ParseMode::Strict) throw ParseError(line_no, err);
            out.warnings.push_back({line_no, err});
            continue;
        }
        out.registry.add(ev.node_a);
        out.registry.add(ev.node_b);
        out.events.push_back(std::move(ev));
    }
    return out;
}

std::int64_t default_origin(const std::vector<ContactEvent>& events, std::int64_t slot_duration) {
    if (events.empty()) throw ConfigError("no events");
    if (slot_duration < 1) throw ConfigError("slot_duration must be >= 1");
    std::int64_t min_ts = events.front().timestamp;
    for (const auto& ev : events) min_ts = std::min(min_ts, ev.timestamp);
    return (min_ts / slot_duration) * slot_duration;
}

std::vector<SimilarityMatrix> build_similarity(const std::vector<ContactEvent>& events,
                                               const NodeRegistry& registry,
                                               const SlotConfig& cfg) {
    cfg.validate();
    if (events.empty()) throw ConfigError("no events");

    struct Obs {
        std::int64_t slot;
        NodeId i, j;  // i < j
        std::int64_t interval;
        auto operator<=>(const Obs&) const = default;
    };
    std::vector<Obs> obs;
    obs.reserve(events.size());
    for (const auto& ev : events) {
        const auto a = registry.find(ev.node_a);
        const auto b = registry.find(ev.node_b);
        if (!a || !b)
            throw IngestError("event references a label missing from the registry: " +
                              ev.node_a + "," + ev.node_b);
        if (*a == *b) throw IngestError("self-contact of node '" + ev.node_a + "'");
        const std::int64_t rel = ev.timestamp - cfg.origin;
        if (rel < 0)
            throw IngestError("event " + ev.node_a + "," + ev.node_b + "," +
                              std::to_string(ev.timestamp) + " precedes the slot origin");
        obs.push_back({rel / cfg.slot_duration, std::min(*a, *b), std::max(*a, *b),
                       rel / cfg.interval_duration});
    }

    // Distinct-interval counting: duplicates of (pair, interval) collapse here.
    std::sort(obs.begin(), obs.end());
    obs.erase(std::unique(obs.begin(), obs.end()), obs.end());

    const std::int64_t first_slot = obs.front().slot;
    const std::int64_t last_slot = obs.back().slot;
    const auto n_slots = static_cast<std::size_t>(last_slot - first_slot + 1);
    const std::uint32_t n = registry.size();

    // Group boundaries per slot (obs is sorted by slot first).
    std::vector<std::size_t> begin_of(n_slots + 1, obs.size());
    for (std::size_t k = obs.size(); k-- > 0;)
        begin_of[static_cast<std::size_t>(obs[k].slot - first_slot)] = k;
    for (std::size_t s = n_slots; s-- > 0;)
        if (begin_of[s] > begin_of[s + 1]) begin_of[s] = begin_of[s + 1];

    std::vector<SimilarityMatrix> sims(n_slots);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n_slots); ++s) {
        auto& sim = sims[static_cast<std::size_t>(s)];
        sim.slot = first_slot + s;
        sim.n = n;
        sim.counts.assign(static_cast<std::size_t>(n) * n, 0);
        for (std::size_t k = begin_of[s]; k < begin_of[s + 1]; ++k) {
            const auto& o = obs[k];
            ++sim.counts[static_cast<std::size_t>(o.i) * n + o.j];
            ++sim.counts[static_cast<std::size_t>(o.j) * n + o.i];
        }
    }
    return sims;
}

std::vector<SlotGraph> to_slot_graphs(const std::vector<SimilarityMatrix>& sims,
                                      std::shared_ptr<const NodeRegistry> registry) {
    if (!registry) throw ShapeError("to_slot_graphs needs a registry");
    std::vector<SlotGraph> out;
    out.reserve(sims.size());
    for (const auto& sim : sims) {
        if (sim.n != registry->size())
            throw ShapeError("similarity matrix n=" + std::to_string(sim.n) +
                             " does not match registry size " + std::to_string(registry->size()));
        SlotGraph g;
        g.slot = sim.slot;
        g.registry = registry;
        g.adjacency = AdjacencyMatrix(sim.n);
        auto& w = g.adjacency.data();
        for (std::size_t k = 0; k < sim.counts.size(); ++k)
            w[k] = static_cast<double>(sim.counts[k]);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace tempocent
