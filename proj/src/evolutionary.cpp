#include "tempocent/evolutionary.hpp"

#include <string>

namespace tempocent {

void SmoothingConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
}

SlotGraph smooth_adjacency(const SlotGraph& current, const SlotGraph* previous,
                           const SmoothingConfig& cfg) {
    cfg.validate();
    if (previous == nullptr) return current;  // first slot: no history to blend

    const std::uint32_t n = current.adjacency.size();
    if (previous->adjacency.size() != n)
        throw ShapeError("smoothing needs equally sized slots (" + std::to_string(n) + " vs " +
                         std::to_string(previous->adjacency.size()) + ")");
    const bool same_registry =
        current.registry == previous->registry ||
        (current.registry && previous->registry &&
         current.registry->labels() == previous->registry->labels());
    if (!same_registry) throw ShapeError("smoothing needs slots sharing one registry");

    SlotGraph out;
    out.slot = current.slot;
    out.registry = current.registry;
    out.adjacency = AdjacencyMatrix(n);
    const auto& cur = current.adjacency.data();
    const auto& prev = previous->adjacency.data();
    auto& w = out.adjacency.data();
    const double keep = 1.0 - cfg.alpha;
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(w.size()); ++k)
        w[k] = keep * cur[k] + cfg.alpha * prev[k];
    return out;
}

std::vector<CentralityResult> evolutionary_centrality(const std::vector<SlotGraph>& slots,
                                                      CentralityMeasure measure,
                                                      const SmoothingConfig& smoothing,
                                                      const MeasureParams& params) {
    smoothing.validate();
    if (slots.empty()) throw ConfigError("evolutionary centrality needs at least one slot");
    for (std::size_t t = 1; t < slots.size(); ++t)
        if (slots[t].slot != slots[t - 1].slot + 1)
            throw ConfigError("slots must be consecutive by slot index");

    std::vector<CentralityResult> results;
    results.reserve(slots.size());
    for (std::size_t t = 0; t < slots.size(); ++t) {
        const SlotGraph* prev = t > 0 ? &slots[t - 1] : nullptr;
        try {
            SlotGraph smoothed = smooth_adjacency(slots[t], prev, smoothing);
            CentralityResult r = compute_centrality(smoothed, measure, params);
            r.slot = slots[t].slot;
            r.alpha = smoothing.alpha;
            results.push_back(std::move(r));
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(
                "slot " + std::to_string(slots[t].slot) + ": " + e.what(), e.residual);
        }
    }
    return results;
}

}  // namespace tempocent
