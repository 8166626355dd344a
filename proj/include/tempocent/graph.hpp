#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempocent/errors.hpp"

namespace tempocent {

using NodeId = std::uint32_t;

// Hop count reported for unreachable nodes by shortest_path_lengths().
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Maps external string labels to dense node ids 0..n-1 in first-seen order.
/// Treated as immutable once slot graphs have been built from it.
class NodeRegistry {
public:
    NodeRegistry() = default;

    // Returns the id of `label`, inserting it if unseen.
    NodeId add(const std::string& label);

    std::optional<NodeId> find(const std::string& label) const;

    const std::string& label(NodeId id) const;

    std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

/// Dense symmetric matrix of non-negative contact weights with a zero diagonal.
/// Storage hides behind at()/set()/data(), so a sparse backend can replace the
/// flat vector without touching callers.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(std::uint32_t n) : n_(n), w_(static_cast<std::size_t>(n) * n, 0.0) {}

    std::uint32_t size() const { return n_; }

    double at(NodeId i, NodeId j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }

    // Sets both (i, j) and (j, i). Rejects self-edges and invalid weights.
    void set(NodeId i, NodeId j, double value);

    const std::vector<double>& data() const { return w_; }
    std::vector<double>& data() { return w_; }

    // Throws ShapeError if symmetry, zero diagonal, finiteness or
    // non-negativity is violated.
    void validate() const;

private:
    std::uint32_t n_ = 0;
    std::vector<double> w_;
};

/// One time-slice of the network: slot index, weights, shared node registry.
struct SlotGraph {
    std::int64_t slot = 0;
    AdjacencyMatrix adjacency;
    std::shared_ptr<const NodeRegistry> registry;
};

/// Unweighted view of a slot: sorted duplicate-free neighbor lists, no self-loops.
struct BinaryGraph {
    std::uint32_t n = 0;
    std::vector<std::vector<NodeId>> neighbors;

    std::size_t edge_count() const;
    bool has_edge(NodeId i, NodeId j) const;
    std::uint32_t degree(NodeId v) const { return static_cast<std::uint32_t>(neighbors[v].size()); }
};

// Edge (i, j) exists iff w[i][j] > threshold (strict inequality).
BinaryGraph binarize(const AdjacencyMatrix& a, double threshold = 0.0);
BinaryGraph binarize(const SlotGraph& g, double threshold = 0.0);

// BFS hop counts from `source`; unreachable entries hold kUnreachable.
// Throws InvalidNodeError if source >= g.n.
std::vector<std::uint32_t> shortest_path_lengths(const BinaryGraph& g, NodeId source);

// Component label per node; labels are 0..k-1 in order of first appearance.
std::vector<std::uint32_t> connected_components(const BinaryGraph& g);

}  // namespace tempocent
