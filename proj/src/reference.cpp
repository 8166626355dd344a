#include "tempocent/reference.hpp"

#include <algorithm>
#include <cmath>

// Single-threaded twins of the kernels in centrality.cpp: same arithmetic,
// same accumulation order, no OpenMP. Tests hold the two paths bitwise equal;
// the bench tool times one against the other.
namespace tempocent::reference {

std::vector<double> degree_scores(const BinaryGraph& g) {
    std::vector<double> scores(g.n);
    for (NodeId v = 0; v < g.n; ++v) scores[v] = static_cast<double>(g.neighbors[v].size());
    return scores;
}

ClosenessScores closeness_scores(const BinaryGraph& g) {
    const std::uint32_t n = g.n;
    ClosenessScores out{std::vector<double>(n, 0.0), std::vector<std::uint32_t>(n, 0)};
    for (NodeId v = 0; v < n; ++v) {
        const auto dist = shortest_path_lengths(g, v);
        std::uint64_t sum = 0;
        std::uint32_t reached = 0;
        for (NodeId u = 0; u < n; ++u) {
            if (u == v || dist[u] == kUnreachable) continue;
            sum += dist[u];
            ++reached;
        }
        out.reachable[v] = reached;
        out.scores[v] = reached ? 1.0 / static_cast<double>(sum) : 0.0;
    }
    return out;
}

namespace {

void source_dependency(const BinaryGraph& g, NodeId s, std::vector<double>& delta) {
    const std::uint32_t n = g.n;
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<NodeId>> pred(n);
    std::vector<NodeId> order;
    order.reserve(n);

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.neighbors[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[v] + 1) {
                sigma[w] += sigma[v];
                pred[w].push_back(v);
            }
        }
    }

    delta.assign(n, 0.0);
    for (std::size_t k = order.size(); k-- > 0;) {
        const NodeId w = order[k];
        for (NodeId v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
    }
    delta[s] = 0.0;
}

void matvec(const AdjacencyMatrix& a, const std::vector<double>& x, std::vector<double>& y) {
    const std::uint32_t n = a.size();
    const double* w = a.data().data();
    for (std::uint32_t i = 0; i < n; ++i) {
        const double* row = w + static_cast<std::size_t>(i) * n;
        double acc = 0.0;
        for (std::uint32_t j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

}  // namespace

std::vector<double> betweenness_scores(const BinaryGraph& g) {
    const std::uint32_t n = g.n;
    std::vector<double> cb(n, 0.0);
    std::vector<double> delta;
    for (NodeId s = 0; s < n; ++s) {
        source_dependency(g, s, delta);
        for (NodeId v = 0; v < n; ++v) cb[v] += delta[v];
    }
    for (auto& x : cb) x *= 0.5;
    return cb;
}

PowerResult eigenvector_scores(const AdjacencyMatrix& a, const PowerIterationConfig& cfg) {
    cfg.validate();
    const std::uint32_t n = a.size();
    PowerResult out;
    out.scores.assign(n, 0.0);
    if (n == 0) return out;

    std::vector<double> strength(n, 0.0);
    double total = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) strength[i] += a.at(i, j);
        total += strength[i];
    }
    if (total == 0.0) {
        out.zero_matrix = true;
        return out;
    }
    const double sigma = total / n;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n, 0.0);
    double residual = 0.0;
    for (std::uint32_t iter = 1; iter <= cfg.max_iters; ++iter) {
        matvec(a, x, y);
        for (std::uint32_t i = 0; i < n; ++i)
            if (strength[i] > 0.0) y[i] += sigma * x[i];
        double norm_sq = 0.0;
        for (double v : y) norm_sq += v * v;
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0)
            throw ConvergenceError("power iteration collapsed to the zero vector", 0.0);
        residual = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            y[i] /= norm;
            residual = std::max(residual, std::abs(y[i] - x[i]));
        }
        x.swap(y);
        if (residual < cfg.tolerance) {
            out.iterations = iter;
            matvec(a, x, y);
            double lambda = 0.0;
            for (std::uint32_t i = 0; i < n; ++i) lambda += x[i] * y[i];
            out.eigenvalue = lambda;
            out.scores = std::move(x);
            return out;
        }
    }
    throw ConvergenceError("eigenvector power iteration did not converge within " +
                               std::to_string(cfg.max_iters) + " iterations",
                           residual);
}

PageRankResult pagerank_scores(const AdjacencyMatrix& a, double damping,
                               const PowerIterationConfig& cfg) {
    cfg.validate();
    if (!(damping >= 0.0 && damping <= 1.0)) throw ConfigError("damping must lie in [0, 1]");
    const std::uint32_t n = a.size();
    PageRankResult out;
    if (n == 0) return out;

    std::vector<double> strength(n, 0.0);
    const double* w = a.data().data();
    for (NodeId i = 0; i < n; ++i) {
        double s = 0.0;
        for (NodeId j = 0; j < n; ++j) s += w[static_cast<std::size_t>(i) * n + j];
        strength[i] = s;
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> x(n, inv_n), y(n, 0.0), z(n, 0.0);
    double residual = 0.0;
    for (std::uint32_t iter = 1; iter <= cfg.max_iters; ++iter) {
        double dangling = 0.0;
        for (NodeId j = 0; j < n; ++j) {
            if (strength[j] > 0.0) {
                z[j] = x[j] / strength[j];
            } else {
                z[j] = 0.0;
                dangling += x[j];
            }
        }
        const double base = (1.0 - damping) * inv_n + damping * dangling * inv_n;
        for (NodeId v = 0; v < n; ++v) {
            const double* row = w + static_cast<std::size_t>(v) * n;
            double acc = 0.0;
            for (std::uint32_t j = 0; j < n; ++j) acc += row[j] * z[j];
            y[v] = base + damping * acc;
        }
        residual = 0.0;
        for (NodeId v = 0; v < n; ++v) residual += std::abs(y[v] - x[v]);
        x.swap(y);
        if (residual < cfg.tolerance) {
            out.iterations = iter;
            out.scores = std::move(x);
            return out;
        }
    }
    throw ConvergenceError("pagerank did not converge within " + std::to_string(cfg.max_iters) +
                               " iterations; damping=1 can oscillate on periodic structures, "
                               "try damping < 1",
                           residual);
}

std::vector<double> smooth_weights(const std::vector<double>& current,
                                   const std::vector<double>& previous, double alpha) {
    std::vector<double> out(current.size());
    const double keep = 1.0 - alpha;
    for (std::size_t k = 0; k < current.size(); ++k)
        out[k] = keep * current[k] + alpha * previous[k];
    return out;
}

}  // namespace tempocent::reference
