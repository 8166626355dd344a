#include "tempocent/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tempocent {

const char* to_string(CentralityMeasure m) {
    switch (m) {
        case CentralityMeasure::Degree: return "degree";
        case CentralityMeasure::Closeness: return "closeness";
        case CentralityMeasure::Betweenness: return "betweenness";
        case CentralityMeasure::Eigenvector: return "eigenvector";
        case CentralityMeasure::PageRank: return "pagerank";
    }
    return "unknown";
}

std::optional<CentralityMeasure> measure_from_string(std::string_view name) {
    for (auto m : kAllMeasures)
        if (name == to_string(m)) return m;
    return std::nullopt;
}

void PowerIterationConfig::validate() const {
    if (max_iters == 0) throw ConfigError("max_iters must be positive");
    if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
}

std::vector<NodeId> ranking_from_scores(const std::vector<double>& scores) {
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    return order;
}

std::vector<double> degree_scores(const BinaryGraph& g) {
    std::vector<double> scores(g.n);
    for (NodeId v = 0; v < g.n; ++v) scores[v] = static_cast<double>(g.neighbors[v].size());
    return scores;
}

ClosenessScores closeness_scores(const BinaryGraph& g) {
    const std::uint32_t n = g.n;
    ClosenessScores out{std::vector<double>(n, 0.0), std::vector<std::uint32_t>(n, 0)};
    // Per-source BFS; each source writes only its own entries.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
        const auto dist = shortest_path_lengths(g, static_cast<NodeId>(v));
        std::uint64_t sum = 0;
        std::uint32_t reached = 0;
        for (NodeId u = 0; u < n; ++u) {
            if (u == static_cast<NodeId>(v) || dist[u] == kUnreachable) continue;
            sum += dist[u];
            ++reached;
        }
        out.reachable[v] = reached;
        out.scores[v] = reached ? 1.0 / static_cast<double>(sum) : 0.0;
    }
    return out;
}

namespace {

// Brandes: dependency vector contributed by one BFS source.
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

}  // namespace

std::vector<double> betweenness_scores(const BinaryGraph& g) {
    const std::uint32_t n = g.n;
    std::vector<double> cb(n, 0.0);

    // Sources run in parallel per block; block results are folded in ascending
    // source order so the sums match for any worker count.
    constexpr std::uint32_t kBlock = 128;
    std::vector<std::vector<double>> delta(std::min(kBlock, std::max(n, 1u)));
    for (std::uint32_t base = 0; base < n; base += kBlock) {
        const std::uint32_t cnt = std::min(kBlock, n - base);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(cnt); ++k)
            source_dependency(g, base + static_cast<NodeId>(k), delta[k]);
        for (std::uint32_t k = 0; k < cnt; ++k)
            for (NodeId v = 0; v < n; ++v) cb[v] += delta[k][v];
    }
    for (auto& x : cb) x *= 0.5;  // each unordered pair was counted from both endpoints
    return cb;
}

namespace {

// y = A x, one row per iteration; row sums are serial, so the result does not
// depend on the worker count.
void matvec(const AdjacencyMatrix& a, const std::vector<double>& x, std::vector<double>& y) {
    const std::uint32_t n = a.size();
    const double* w = a.data().data();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const double* row = w + static_cast<std::size_t>(i) * n;
        double acc = 0.0;
        for (std::uint32_t j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

}  // namespace

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

    // Power iteration on A + sigma*D, D = diag(row has edges). The shift
    // leaves eigenvectors untouched and makes the Perron root strictly
    // dominant, otherwise bipartite slots (stars, paths -- routine in sparse
    // contact snapshots) oscillate forever. Skipping isolated rows keeps
    // their entries exactly zero from the first iteration on. sigma = mean
    // row strength, which never exceeds the dominant eigenvalue.
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
            // Rayleigh quotient of the unshifted matrix: the reported
            // eigenvalue matches lambda of the original adjacency.
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
                dangling += x[j];  // dangling mass spreads uniformly
            }
        }
        const double base = (1.0 - damping) * inv_n + damping * dangling * inv_n;
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
            const double* row = w + static_cast<std::size_t>(v) * n;
            double acc = 0.0;
            for (std::uint32_t j = 0; j < n; ++j) acc += row[j] * z[j];
            y[v] = base + damping * acc;
        }
        residual = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) residual += std::abs(y[v] - x[v]);
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

namespace {

CentralityResult finish(CentralityResult r) {
    r.ranking = ranking_from_scores(r.scores);
    return r;
}

}  // namespace

CentralityResult degree_centrality(const SlotGraph& g, double threshold) {
    CentralityResult r;
    r.slot = g.slot;
    r.measure = CentralityMeasure::Degree;
    r.scores = degree_scores(binarize(g, threshold));
    return finish(std::move(r));
}

CentralityResult closeness_centrality(const SlotGraph& g, double threshold) {
    CentralityResult r;
    r.slot = g.slot;
    r.measure = CentralityMeasure::Closeness;
    auto cs = closeness_scores(binarize(g, threshold));
    r.scores = std::move(cs.scores);
    r.reachable = std::move(cs.reachable);
    return finish(std::move(r));
}

CentralityResult betweenness_centrality(const SlotGraph& g, double threshold) {
    CentralityResult r;
    r.slot = g.slot;
    r.measure = CentralityMeasure::Betweenness;
    r.scores = betweenness_scores(binarize(g, threshold));
    return finish(std::move(r));
}

CentralityResult eigenvector_centrality(const SlotGraph& g, const PowerIterationConfig& cfg) {
    CentralityResult r;
    r.slot = g.slot;
    r.measure = CentralityMeasure::Eigenvector;
    auto pr = eigenvector_scores(g.adjacency, cfg);
    r.scores = std::move(pr.scores);
    r.iterations = pr.iterations;
    r.zero_matrix = pr.zero_matrix;
    if (!pr.zero_matrix) r.eigenvalue = pr.eigenvalue;

    // Flag graphs where several components carry edges: the iteration settles
    // on the component with the largest spectral radius.
    const auto labels = connected_components(binarize(g.adjacency, 0.0));
    std::vector<std::uint32_t> sizes;
    for (auto l : labels) {
        if (l >= sizes.size()) sizes.resize(l + 1, 0);
        ++sizes[l];
    }
    std::uint32_t nontrivial = 0;
    for (auto s : sizes)
        if (s >= 2) ++nontrivial;
    r.multi_component = nontrivial > 1;
    return finish(std::move(r));
}

CentralityResult pagerank_centrality(const SlotGraph& g, double damping,
                                     const PowerIterationConfig& cfg) {
    CentralityResult r;
    r.slot = g.slot;
    r.measure = CentralityMeasure::PageRank;
    auto pr = pagerank_scores(g.adjacency, damping, cfg);
    r.scores = std::move(pr.scores);
    r.iterations = pr.iterations;
    return finish(std::move(r));
}

CentralityResult compute_centrality(const SlotGraph& g, CentralityMeasure measure,
                                    const MeasureParams& params) {
    switch (measure) {
        case CentralityMeasure::Degree: return degree_centrality(g, params.threshold);
        case CentralityMeasure::Closeness: return closeness_centrality(g, params.threshold);
        case CentralityMeasure::Betweenness: return betweenness_centrality(g, params.threshold);
        case CentralityMeasure::Eigenvector: return eigenvector_centrality(g, params.power);
        case CentralityMeasure::PageRank:
            return pagerank_centrality(g, params.damping, params.power);
    }
    throw ConfigError("unknown centrality measure");
}

}  // namespace tempocent
