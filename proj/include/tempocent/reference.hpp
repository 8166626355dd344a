#pragma once

#include <vector>

#include "tempocent/centrality.hpp"
#include "tempocent/graph.hpp"

// Serial mirrors of the OpenMP kernels in centrality.cpp. Kept for testing
// (bitwise comparison against the parallel path) and for the benchmark tool.
namespace tempocent::reference {

std::vector<double> degree_scores(const BinaryGraph& g);

ClosenessScores closeness_scores(const BinaryGraph& g);

std::vector<double> betweenness_scores(const BinaryGraph& g);

PowerResult eigenvector_scores(const AdjacencyMatrix& a, const PowerIterationConfig& cfg);

PageRankResult pagerank_scores(const AdjacencyMatrix& a, double damping,
                               const PowerIterationConfig& cfg);

std::vector<double> smooth_weights(const std::vector<double>& current,
                                   const std::vector<double>& previous, double alpha);

}  // namespace tempocent::reference
