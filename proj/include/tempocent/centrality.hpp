#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tempocent/graph.hpp"

namespace tempocent {

enum class CentralityMeasure { Degree, Closeness, Betweenness, Eigenvector, PageRank };

inline constexpr std::array<CentralityMeasure, 5> kAllMeasures = {
    CentralityMeasure::Degree,     CentralityMeasure::Closeness,
    CentralityMeasure::Betweenness, CentralityMeasure::Eigenvector,
    CentralityMeasure::PageRank,
};

const char* to_string(CentralityMeasure m);
std::optional<CentralityMeasure> measure_from_string(std::string_view name);

struct PowerIterationConfig {
    std::uint32_t max_iters = 1000;
    double tolerance = 1e-10;

    void validate() const;  // both must be positive
};

/// Per-slot score vector for one measure.
struct CentralityResult {
    std::int64_t slot = 0;
    CentralityMeasure measure = CentralityMeasure::Degree;
    double alpha = 0.0;  // smoothing factor the scores were computed under (0 = plain)
    std::vector<double> scores;    // one per node; finite, >= 0
    std::vector<NodeId> ranking;   // descending score, ties by ascending id

    // Measure-specific metadata.
    std::vector<std::uint32_t> reachable;  // closeness: other nodes reached per source
    std::optional<double> eigenvalue;      // eigenvector: dominant eigenvalue
    std::uint32_t iterations = 0;          // eigenvector / pagerank
    bool zero_matrix = false;              // eigenvector: adjacency was all-zero
    bool multi_component = false;          // eigenvector: >1 component carries edges
};

// Descending by score, ties broken by ascending node id.
std::vector<NodeId> ranking_from_scores(const std::vector<double>& scores);

// ---- score-vector kernels (OpenMP-parallel; see reference.hpp for the serial
// ---- mirrors kept for testing and benchmarking)

std::vector<double> degree_scores(const BinaryGraph& g);

struct ClosenessScores {
    std::vector<double> scores;
    std::vector<std::uint32_t> reachable;
};
ClosenessScores closeness_scores(const BinaryGraph& g);

// Shortest-path betweenness over unordered pairs, interior vertices only.
std::vector<double> betweenness_scores(const BinaryGraph& g);

struct PowerResult {
    std::vector<double> scores;
    double eigenvalue = 0.0;
    std::uint32_t iterations = 0;
    bool zero_matrix = false;
};
PowerResult eigenvector_scores(const AdjacencyMatrix& a, const PowerIterationConfig& cfg);

struct PageRankResult {
    std::vector<double> scores;
    std::uint32_t iterations = 0;
};
PageRankResult pagerank_scores(const AdjacencyMatrix& a, double damping,
                               const PowerIterationConfig& cfg);

// ---- measure front ends on slot graphs

CentralityResult degree_centrality(const SlotGraph& g, double threshold = 0.0);
CentralityResult closeness_centrality(const SlotGraph& g, double threshold = 0.0);
CentralityResult betweenness_centrality(const SlotGraph& g, double threshold = 0.0);
CentralityResult eigenvector_centrality(const SlotGraph& g, const PowerIterationConfig& cfg = {});
CentralityResult pagerank_centrality(const SlotGraph& g, double damping = 0.85,
                                     const PowerIterationConfig& cfg = {});

struct MeasureParams {
    double threshold = 0.0;  // degree / closeness / betweenness binarization
    double damping = 0.85;   // pagerank
    PowerIterationConfig power{};
};

CentralityResult compute_centrality(const SlotGraph& g, CentralityMeasure measure,
                                    const MeasureParams& params = {});

}  // namespace tempocent
