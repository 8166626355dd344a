#pragma once

#include <vector>

#include "tempocent/centrality.hpp"
#include "tempocent/graph.hpp"

namespace tempocent {

struct SmoothingConfig {
    double alpha = 0.5;  // history weight; 0 = current slot only, 1 = previous slot only

    void validate() const;  // alpha must lie in [0, 1]
};

// w' = (1-alpha) * current + alpha * previous, elementwise. A null `previous`
// marks the first slot: the current weights pass through untouched (no zero
// history is invented). Both graphs must share n and registry.
SlotGraph smooth_adjacency(const SlotGraph& current, const SlotGraph* previous,
                           const SmoothingConfig& cfg);

// Applies smoothing between consecutive slots, then the chosen measure, for
// every slot. Always smooths with the RAW previous adjacency, never the
// previously smoothed one. Slots must be non-empty and consecutive by index.
// Convergence errors are rethrown naming the offending slot.
std::vector<CentralityResult> evolutionary_centrality(const std::vector<SlotGraph>& slots,
                                                      CentralityMeasure measure,
                                                      const SmoothingConfig& smoothing,
                                                      const MeasureParams& params = {});

}  // namespace tempocent
