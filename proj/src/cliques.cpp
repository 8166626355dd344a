#include "tempocent/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tempocent/bitset.hpp"

namespace tempocent {

namespace {

constexpr NodeId kNoVertex = static_cast<NodeId>(-1);

struct Frame {
    NodeBitset p, x;
    std::vector<NodeId> cand;  // vertices this frame still has to branch on
    std::size_t next = 0;
    NodeId via = kNoVertex;  // vertex whose selection created this frame
};

// Vertex of P ∪ X with the most neighbors inside P; ascending scan breaks
// ties toward the lowest id.
NodeId choose_pivot(const std::vector<NodeBitset>& nbr, const NodeBitset& p, const NodeBitset& x) {
    NodeId best = kNoVertex;
    std::uint32_t best_cnt = 0;
    p.unite(x).for_each([&](std::uint32_t u) {
        const std::uint32_t c = NodeBitset::intersect_count(nbr[u], p);
        if (best == kNoVertex || c > best_cnt) {
            best = u;
            best_cnt = c;
        }
    });
    return best;
}

// Explicit-stack Bron-Kerbosch; the stack depth is |R|+1, so degenerate
// near-complete graphs cannot exhaust the call stack.
CliqueSet enumerate(const BinaryGraph& g, std::int64_t slot, std::size_t max_cliques,
                    bool use_pivot) {
    const std::uint32_t n = g.n;
    CliqueSet out;
    out.slot = slot;
    out.n = n;
    if (n == 0) return out;

    std::vector<NodeBitset> nbr(n, NodeBitset(n));
    for (NodeId v = 0; v < n; ++v)
        for (NodeId w : g.neighbors[v]) nbr[v].set(w);

    auto candidates = [&](const NodeBitset& p, const NodeBitset& x) {
        if (!use_pivot) return p.to_vector();
        return p.minus(nbr[choose_pivot(nbr, p, x)]).to_vector();
    };

    auto emit = [&](const std::vector<NodeId>& r) {
        if (out.cliques.size() >= max_cliques)
            throw ResourceLimitError("maximal clique count exceeded the configured limit of " +
                                     std::to_string(max_cliques));
        Clique c{r};
        std::sort(c.members.begin(), c.members.end());
        out.cliques.push_back(std::move(c));
    };

    std::vector<NodeId> r;
    std::vector<Frame> stack;
    Frame root;
    root.p = NodeBitset(n);
    for (NodeId v = 0; v < n; ++v) root.p.set(v);
    root.x = NodeBitset(n);
    root.cand = candidates(root.p, root.x);
    stack.push_back(std::move(root));

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == f.cand.size()) {
            if (f.via != kNoVertex) {
                const NodeId v = f.via;
                r.pop_back();
                Frame& parent = stack[stack.size() - 2];
                parent.p.reset(v);
                parent.x.set(v);
            }
            stack.pop_back();
            continue;
        }
        const NodeId v = f.cand[f.next++];
        NodeBitset child_p = NodeBitset::intersect(f.p, nbr[v]);
        NodeBitset child_x = NodeBitset::intersect(f.x, nbr[v]);
        r.push_back(v);
        if (child_p.none()) {
            if (child_x.none()) emit(r);
            r.pop_back();
            f.p.reset(v);
            f.x.set(v);
        } else {
            Frame child;
            child.cand = candidates(child_p, child_x);
            child.p = std::move(child_p);
            child.x = std::move(child_x);
            child.via = v;
            stack.push_back(std::move(child));  // invalidates f
        }
    }

    std::sort(out.cliques.begin(), out.cliques.end(),
              [](const Clique& a, const Clique& b) { return a.members < b.members; });
    for (const auto& c : out.cliques) ++out.size_histogram[c.size()];
    return out;
}

}  // namespace

CliqueSet bron_kerbosch(const BinaryGraph& g, std::int64_t slot, std::size_t max_cliques) {
    return enumerate(g, slot, max_cliques, false);
}

CliqueSet bron_kerbosch_pivot(const BinaryGraph& g, std::int64_t slot, std::size_t max_cliques) {
    return enumerate(g, slot, max_cliques, true);
}

std::map<std::uint32_t, std::size_t> clique_histogram(const std::vector<CliqueSet>& sets) {
    std::map<std::uint32_t, std::size_t> total;
    for (const auto& set : sets)
        for (const auto& [size, count] : set.size_histogram) total[size] += count;
    return total;
}

std::vector<SentinelReport> sentinel_nodes(const std::vector<CliqueSet>& sets, double phi,
                                           std::uint32_t window) {
    if (!(phi > 0.0 && phi <= 1.0)) throw ConfigError("phi must lie in (0, 1]");
    if (window == 0) throw ConfigError("window must be positive");
    for (std::size_t k = 1; k < sets.size(); ++k) {
        if (sets[k].slot <= sets[k - 1].slot) throw ConfigError("clique sets must be ordered by slot");
        if (sets[k].n != sets[k - 1].n) throw ShapeError("clique sets must share one node count");
    }

    std::vector<SentinelReport> reports;
    reports.reserve(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto& set = sets[k];
        SentinelReport rep;
        rep.slot = set.slot;
        rep.participation.assign(set.n, 0);
        for (const auto& c : set.cliques)
            for (NodeId v : c.members) ++rep.participation[v];

        const auto m = static_cast<double>(set.cliques.size());
        if (!set.cliques.empty()) {
            // tiny slack so phi*m landing a hair above an integer (FP rounding)
            // cannot exclude a node that meets the bound exactly
            const double bound = phi * m - 1e-9;
            for (NodeId v = 0; v < set.n; ++v)
                if (static_cast<double>(rep.participation[v]) >= bound)
                    rep.common_nodes.push_back(v);
        }

        if (k + 1 >= window) {
            rep.persistent_sentinels = rep.common_nodes;
            for (std::size_t back = 1; back < window && !rep.persistent_sentinels.empty(); ++back) {
                const auto& other = reports[k - back].common_nodes;
                std::vector<NodeId> merged;
                std::set_intersection(rep.persistent_sentinels.begin(),
                                      rep.persistent_sentinels.end(), other.begin(), other.end(),
                                      std::back_inserter(merged));
                rep.persistent_sentinels = std::move(merged);
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace tempocent
