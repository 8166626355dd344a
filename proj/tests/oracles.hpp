#pragma once

// Test-side oracles: independent brute-force routes the shipped kernels are
// checked against. Everything here favors obviousness over speed and shares
// no code with the implementations under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tempocent/graph.hpp"

namespace oracle {

using tempocent::AdjacencyMatrix;
using tempocent::BinaryGraph;
using tempocent::kUnreachable;
using tempocent::NodeId;
using tempocent::SlotGraph;

// Raw-bits uniform sampling keeps generated cases identical across stdlibs.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(uniform() * bound);
    }
};

inline BinaryGraph er_graph(std::uint32_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    BinaryGraph g;
    g.n = n;
    g.neighbors.resize(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng.uniform() < p) {
                g.neighbors[i].push_back(j);
                g.neighbors[j].push_back(i);
            }
        }
    }
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

// Symmetric zero-diagonal matrix; present edges get weights in (0, 10).
inline AdjacencyMatrix random_weighted(std::uint32_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    AdjacencyMatrix a(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (rng.uniform() < p) a.set(i, j, 0.1 + rng.uniform() * 9.9);
    return a;
}

inline AdjacencyMatrix from_binary(const BinaryGraph& g) {
    AdjacencyMatrix a(g.n);
    for (NodeId v = 0; v < g.n; ++v)
        for (NodeId w : g.neighbors[v])
            if (v < w) a.set(v, w, 1.0);
    return a;
}

inline SlotGraph as_slot(AdjacencyMatrix a, std::int64_t slot = 0) {
    SlotGraph g;
    g.slot = slot;
    g.adjacency = std::move(a);
    return g;
}

inline BinaryGraph graph_from_edges(std::uint32_t n,
                                    const std::vector<std::pair<NodeId, NodeId>>& edges) {
    BinaryGraph g;
    g.n = n;
    g.neighbors.resize(n);
    for (auto [u, v] : edges) {
        g.neighbors[u].push_back(v);
        g.neighbors[v].push_back(u);
    }
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

// ---- shortest paths by exhaustive simple-path enumeration (n <= ~9)

inline void all_paths_dfs(const BinaryGraph& g, NodeId v, std::uint32_t len,
                          std::vector<bool>& visited, std::vector<std::uint32_t>& best) {
    if (len < best[v]) best[v] = len;
    for (NodeId w : g.neighbors[v]) {
        if (visited[w]) continue;
        visited[w] = true;
        all_paths_dfs(g, w, len + 1, visited, best);
        visited[w] = false;
    }
}

inline std::vector<std::uint32_t> brute_shortest_paths(const BinaryGraph& g, NodeId s) {
    std::vector<std::uint32_t> best(g.n, kUnreachable);
    std::vector<bool> visited(g.n, false);
    visited[s] = true;
    all_paths_dfs(g, s, 0, visited, best);
    return best;
}

// ---- betweenness by enumerating every simple path of every pair (n <= ~9)

inline void collect_paths(const BinaryGraph& g, NodeId v, NodeId t, std::vector<NodeId>& path,
                          std::vector<bool>& visited, std::vector<std::vector<NodeId>>& out) {
    if (v == t) {
        out.push_back(path);
        return;
    }
    for (NodeId w : g.neighbors[v]) {
        if (visited[w]) continue;
        visited[w] = true;
        path.push_back(w);
        collect_paths(g, w, t, path, visited, out);
        path.pop_back();
        visited[w] = false;
    }
}

inline std::vector<double> brute_betweenness(const BinaryGraph& g) {
    std::vector<double> cb(g.n, 0.0);
    for (NodeId s = 0; s < g.n; ++s) {
        for (NodeId t = s + 1; t < g.n; ++t) {
            std::vector<std::vector<NodeId>> paths;
            std::vector<NodeId> path{s};
            std::vector<bool> visited(g.n, false);
            visited[s] = true;
            collect_paths(g, s, t, path, visited, paths);
            if (paths.empty()) continue;
            std::size_t min_len = paths.front().size();
            for (const auto& p : paths) min_len = std::min(min_len, p.size());
            std::size_t sigma = 0;
            std::vector<std::size_t> through(g.n, 0);
            for (const auto& p : paths) {
                if (p.size() != min_len) continue;
                ++sigma;
                for (std::size_t k = 1; k + 1 < p.size(); ++k) ++through[p[k]];
            }
            for (NodeId v = 0; v < g.n; ++v)
                if (through[v])
                    cb[v] += static_cast<double>(through[v]) / static_cast<double>(sigma);
        }
    }
    return cb;
}

// ---- components via boolean-matrix transitive closure

inline std::vector<std::uint32_t> closure_components(const BinaryGraph& g) {
    const std::uint32_t n = g.n;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (NodeId v = 0; v < n; ++v) {
        reach[v][v] = true;
        for (NodeId w : g.neighbors[v]) reach[v][w] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId k = 0; k < n; ++k) {
                if (!reach[i][k]) continue;
                for (NodeId j = 0; j < n; ++j) {
                    if (reach[k][j] && !reach[i][j]) {
                        reach[i][j] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    std::vector<std::uint32_t> label(n, kUnreachable);
    std::uint32_t next = 0;
    for (NodeId i = 0; i < n; ++i) {
        if (label[i] != kUnreachable) continue;
        for (NodeId j = 0; j < n; ++j)
            if (reach[i][j]) label[j] = next;
        ++next;
    }
    return label;
}

// ---- cliques by 2^n subset enumeration (n <= ~20 masks, practical n <= 14)

inline bool is_clique(const BinaryGraph& g, const std::vector<NodeId>& members) {
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (!g.has_edge(members[a], members[b])) return false;
    return true;
}

inline bool is_maximal_clique(const BinaryGraph& g, const std::vector<NodeId>& members) {
    if (!is_clique(g, members)) return false;
    for (NodeId v = 0; v < g.n; ++v) {
        if (std::binary_search(members.begin(), members.end(), v)) continue;
        bool adjacent_to_all = true;
        for (NodeId m : members)
            if (!g.has_edge(v, m)) {
                adjacent_to_all = false;
                break;
            }
        if (adjacent_to_all) return false;
    }
    return true;
}

inline std::vector<std::vector<NodeId>> brute_maximal_cliques(const BinaryGraph& g) {
    std::vector<std::vector<NodeId>> out;
    const std::uint32_t n = g.n;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<NodeId> members;
        for (NodeId v = 0; v < n; ++v)
            if (mask & (1u << v)) members.push_back(v);
        if (is_maximal_clique(g, members)) out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- dense linear-algebra oracles (Eigen)

// Non-negative dominant eigenvector, unit L2 norm; optionally reports the
// relative gap between the top two eigenvalue magnitudes.
inline std::vector<double> eigen_dominant(const AdjacencyMatrix& a, double* rel_gap = nullptr) {
    const std::uint32_t n = a.size();
    Eigen::MatrixXd m(n, n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j) m(i, j) = a.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    const auto& values = solver.eigenvalues();  // ascending
    const double top = values(n - 1);           // Perron root of a non-negative matrix
    if (rel_gap != nullptr) {
        double second = 0.0;
        if (n >= 2) second = std::max(std::abs(values(n - 2)), std::abs(values(0)));
        *rel_gap = top > 0.0 ? (top - second) / top : 0.0;
    }
    Eigen::VectorXd vec = solver.eigenvectors().col(n - 1);
    if (vec.sum() < 0.0) vec = -vec;
    vec.normalize();
    std::vector<double> out(n);
    for (NodeId i = 0; i < n; ++i) out[i] = vec(i);
    return out;
}

// Stationary pagerank by direct linear solve of (I - d*M^T) x = (1-d)/n * 1,
// with dangling rows replaced by the uniform distribution. Needs d < 1.
inline std::vector<double> pagerank_solve(const AdjacencyMatrix& a, double damping) {
    const std::uint32_t n = a.size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (NodeId j = 0; j < n; ++j) {
        double strength = 0.0;
        for (NodeId v = 0; v < n; ++v) strength += a.at(j, v);
        for (NodeId v = 0; v < n; ++v)
            m(j, v) = strength > 0.0 ? a.at(j, v) / strength : 1.0 / n;
    }
    Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(n, n) - damping * m.transpose();
    Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, (1.0 - damping) / n);
    Eigen::VectorXd x = system.partialPivLu().solve(rhs);
    std::vector<double> out(n);
    for (NodeId i = 0; i < n; ++i) out[i] = x(i);
    return out;
}

// ---- relabeling helpers for equivariance checks

inline std::vector<NodeId> random_permutation(std::uint32_t n, std::uint64_t seed) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    Rng rng(seed);
    for (std::uint32_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

// perm[v] = new id of old node v
inline AdjacencyMatrix permute(const AdjacencyMatrix& a, const std::vector<NodeId>& perm) {
    AdjacencyMatrix out(a.size());
    for (NodeId i = 0; i < a.size(); ++i)
        for (NodeId j = i + 1; j < a.size(); ++j)
            if (a.at(i, j) != 0.0) out.set(perm[i], perm[j], a.at(i, j));
    return out;
}

inline BinaryGraph permute(const BinaryGraph& g, const std::vector<NodeId>& perm) {
    BinaryGraph out;
    out.n = g.n;
    out.neighbors.resize(g.n);
    for (NodeId v = 0; v < g.n; ++v)
        for (NodeId w : g.neighbors[v]) out.neighbors[perm[v]].push_back(perm[w]);
    for (auto& nb : out.neighbors) std::sort(nb.begin(), nb.end());
    return out;
}

}  // namespace oracle
