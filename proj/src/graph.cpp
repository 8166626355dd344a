#include "tempocent/graph.hpp"

#include <algorithm>
#include <cmath>

namespace tempocent {

NodeId NodeRegistry::add(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    auto id = static_cast<NodeId>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    return id;
}

std::optional<NodeId> NodeRegistry::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& NodeRegistry::label(NodeId id) const {
    if (id >= labels_.size())
        throw InvalidNodeError("node id " + std::to_string(id) + " out of range (n=" +
                               std::to_string(labels_.size()) + ")");
    return labels_[id];
}

void AdjacencyMatrix::set(NodeId i, NodeId j, double value) {
    if (i >= n_ || j >= n_)
        throw InvalidNodeError("node id out of range in AdjacencyMatrix::set");
    if (i == j && value != 0.0)
        throw ShapeError("self-edges are not representable (diagonal must stay zero)");
    if (!std::isfinite(value) || value < 0.0)
        throw ShapeError("adjacency weights must be finite and non-negative");
    w_[static_cast<std::size_t>(i) * n_ + j] = value;
    w_[static_cast<std::size_t>(j) * n_ + i] = value;
}

void AdjacencyMatrix::validate() const {
    if (w_.size() != static_cast<std::size_t>(n_) * n_)
        throw ShapeError("adjacency storage size does not match n*n");
    for (NodeId i = 0; i < n_; ++i) {
        if (at(i, i) != 0.0) throw ShapeError("adjacency diagonal must be zero");
        for (NodeId j = i + 1; j < n_; ++j) {
            const double v = at(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw ShapeError("adjacency weights must be finite and non-negative");
            if (v != at(j, i)) throw ShapeError("adjacency matrix must be symmetric");
        }
    }
}

std::size_t BinaryGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : neighbors) twice += nb.size();
    return twice / 2;
}

bool BinaryGraph::has_edge(NodeId i, NodeId j) const {
    const auto& nb = neighbors[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

BinaryGraph binarize(const AdjacencyMatrix& a, double threshold) {
    if (threshold < 0.0) throw ConfigError("binarize threshold must be >= 0");
    const std::uint32_t n = a.size();
    BinaryGraph g;
    g.n = n;
    g.neighbors.resize(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (i != j && a.at(i, j) > threshold) g.neighbors[i].push_back(j);
    // ascending j loop leaves each list sorted and duplicate-free
    return g;
}

BinaryGraph binarize(const SlotGraph& g, double threshold) {
    return binarize(g.adjacency, threshold);
}

std::vector<std::uint32_t> shortest_path_lengths(const BinaryGraph& g, NodeId source) {
    if (source >= g.n)
        throw InvalidNodeError("BFS source " + std::to_string(source) + " out of range (n=" +
                               std::to_string(g.n) + ")");
    std::vector<std::uint32_t> dist(g.n, kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(g.n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (NodeId w : g.neighbors[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::uint32_t> connected_components(const BinaryGraph& g) {
    std::vector<std::uint32_t> label(g.n, kUnreachable);
    std::uint32_t next = 0;
    std::vector<NodeId> queue;
    for (NodeId s = 0; s < g.n; ++s) {
        if (label[s] != kUnreachable) continue;
        label[s] = next;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeId w : g.neighbors[queue[head]]) {
                if (label[w] == kUnreachable) {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace tempocent
