#include <doctest.h>

#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "tempocent/evolutionary.hpp"
#include "tempocent/reference.hpp"

using namespace tempocent;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

std::vector<SlotGraph> random_slots(std::uint32_t n, std::size_t count, std::uint64_t seed) {
    std::vector<SlotGraph> slots;
    for (std::size_t t = 0; t < count; ++t)
        slots.push_back(oracle::as_slot(oracle::random_weighted(n, 0.4, seed * 100 + t),
                                        static_cast<std::int64_t>(t)));
    return slots;
}

// slot 0: node 0 is the hub of a star over all nodes; slot 1: node 0 is
// isolated and the rest form a connected non-bipartite graph.
std::vector<SlotGraph> hub_then_silence(std::uint32_t n) {
    AdjacencyMatrix first(n);
    for (NodeId v = 1; v < n; ++v) first.set(0, v, 1.0);
    AdjacencyMatrix second(n);
    for (NodeId v = 1; v + 1 < n; ++v) second.set(v, v + 1, 1.0);
    second.set(1, 3, 1.0);  // triangle 1-2-3
    return {oracle::as_slot(std::move(first), 0), oracle::as_slot(std::move(second), 1)};
}

}  // namespace

TEST_CASE("smoothing blends elementwise") {
    auto current = oracle::as_slot(AdjacencyMatrix(2), 1);
    current.adjacency.set(0, 1, 1.0);
    const auto previous = oracle::as_slot(AdjacencyMatrix(2), 0);
    const auto smoothed = smooth_adjacency(current, &previous, SmoothingConfig{0.5});
    CHECK(smoothed.adjacency.at(0, 1) == 0.5);
    CHECK(smoothed.slot == 1);
}

TEST_CASE("smoothing endpoints reproduce either slot exactly") {
    const auto cur = oracle::as_slot(oracle::random_weighted(10, 0.5, 42), 1);
    const auto prev = oracle::as_slot(oracle::random_weighted(10, 0.5, 43), 0);
    const auto at0 = smooth_adjacency(cur, &prev, SmoothingConfig{0.0});
    CHECK(bitwise_equal(at0.adjacency.data(), cur.adjacency.data()));
    const auto at1 = smooth_adjacency(cur, &prev, SmoothingConfig{1.0});
    CHECK(bitwise_equal(at1.adjacency.data(), prev.adjacency.data()));
}

TEST_CASE("smoothing matches the elementwise oracle") {
    const auto cur = oracle::as_slot(oracle::random_weighted(10, 0.6, 77), 5);
    const auto prev = oracle::as_slot(oracle::random_weighted(10, 0.6, 78), 4);
    const auto got = smooth_adjacency(cur, &prev, SmoothingConfig{0.3});
    const auto want =
        reference::smooth_weights(cur.adjacency.data(), prev.adjacency.data(), 0.3);
    CHECK(bitwise_equal(got.adjacency.data(), want));
}

TEST_CASE("absent history passes the current slot through, alpha ignored") {
    const auto cur = oracle::as_slot(oracle::random_weighted(6, 0.5, 99), 0);
    const auto out = smooth_adjacency(cur, nullptr, SmoothingConfig{0.9});
    CHECK(bitwise_equal(out.adjacency.data(), cur.adjacency.data()));
}

TEST_CASE("smoothing validates alpha and shapes") {
    const auto cur = oracle::as_slot(AdjacencyMatrix(3), 1);
    const auto prev = oracle::as_slot(AdjacencyMatrix(4), 0);
    CHECK_THROWS_AS(smooth_adjacency(cur, &prev, SmoothingConfig{0.5}), ShapeError);
    CHECK_THROWS_AS(smooth_adjacency(cur, nullptr, SmoothingConfig{1.5}), ConfigError);
    CHECK_THROWS_AS(smooth_adjacency(cur, nullptr, SmoothingConfig{-0.1}), ConfigError);
}

TEST_CASE("smoothed matrices keep every adjacency invariant") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto cur = oracle::as_slot(oracle::random_weighted(8, 0.5, 200 + seed), 1);
        const auto prev = oracle::as_slot(oracle::random_weighted(8, 0.5, 300 + seed), 0);
        for (const double alpha : {0.0, 0.1, 0.5, 0.9, 1.0}) {
            const auto s = smooth_adjacency(cur, &prev, SmoothingConfig{alpha});
            s.adjacency.validate();
            for (NodeId i = 0; i < 8; ++i) {
                for (NodeId j = 0; j < 8; ++j) {
                    const double lo = std::min(cur.adjacency.at(i, j), prev.adjacency.at(i, j));
                    const double hi = std::max(cur.adjacency.at(i, j), prev.adjacency.at(i, j));
                    CHECK(s.adjacency.at(i, j) >= lo - 1e-12);
                    CHECK(s.adjacency.at(i, j) <= hi + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("history keeps vanished edges alive for every positive alpha") {
    auto cur = oracle::as_slot(AdjacencyMatrix(4), 1);
    auto prev = oracle::as_slot(AdjacencyMatrix(4), 0);
    prev.adjacency.set(0, 1, 3.0);  // present before, gone now
    for (const double alpha : {0.01, 0.25, 0.5, 1.0}) {
        const auto s = smooth_adjacency(cur, &prev, SmoothingConfig{alpha});
        CHECK(s.adjacency.at(0, 1) > 0.0);
    }
}

TEST_CASE("alpha 0 pipeline is bitwise identical to plain per-slot centrality") {
    const auto slots = random_slots(9, 4, 11);
    for (const auto m : kAllMeasures) {
        const auto evo = evolutionary_centrality(slots, m, SmoothingConfig{0.0});
        REQUIRE(evo.size() == slots.size());
        for (std::size_t t = 0; t < slots.size(); ++t) {
            const auto plain = compute_centrality(slots[t], m, {});
            CHECK(bitwise_equal(evo[t].scores, plain.scores));
            CHECK(evo[t].alpha == 0.0);
            CHECK(evo[t].slot == slots[t].slot);
        }
    }
}

TEST_CASE("alpha 1 reproduces the previous slot's plain scores") {
    const auto slots = random_slots(9, 4, 23);
    for (const auto m : kAllMeasures) {
        const auto evo = evolutionary_centrality(slots, m, SmoothingConfig{1.0});
        for (std::size_t t = 1; t < slots.size(); ++t) {
            const auto plain_prev = compute_centrality(slots[t - 1], m, {});
            CHECK(bitwise_equal(evo[t].scores, plain_prev.scores));
        }
    }
}

TEST_CASE("a single slot is returned unsmoothed regardless of alpha") {
    const auto slots = random_slots(8, 1, 31);
    for (const double alpha : {0.0, 0.5, 1.0}) {
        const auto evo =
            evolutionary_centrality(slots, CentralityMeasure::PageRank, SmoothingConfig{alpha});
        const auto plain = compute_centrality(slots[0], CentralityMeasure::PageRank, {});
        CHECK(bitwise_equal(evo[0].scores, plain.scores));
    }
}

TEST_CASE("smoothing revives a hub that went silent") {
    const auto slots = hub_then_silence(6);

    const auto plain =
        evolutionary_centrality(slots, CentralityMeasure::Eigenvector, SmoothingConfig{0.0});
    CHECK(plain[1].scores[0] == 0.0);  // isolated: exactly zero

    const auto evo =
        evolutionary_centrality(slots, CentralityMeasure::Eigenvector, SmoothingConfig{0.5});
    CHECK(evo[1].scores[0] > 0.0);
}

TEST_CASE("evolutionary centrality validates its slot list") {
    CHECK_THROWS_AS(evolutionary_centrality({}, CentralityMeasure::Degree, SmoothingConfig{0.5}),
                    ConfigError);
    auto slots = random_slots(5, 2, 47);
    slots[1].slot = 7;  // gap
    CHECK_THROWS_AS(evolutionary_centrality(slots, CentralityMeasure::Degree, SmoothingConfig{0.5}),
                    ConfigError);
}

TEST_CASE("convergence failures name the offending slot") {
    auto slots = random_slots(3, 2, 53);
    // slot 0 is a triangle (uniform fixed point, converges instantly);
    // slot 1 a pure star, which oscillates under damping 1
    slots[0].adjacency = AdjacencyMatrix(3);
    slots[0].adjacency.set(0, 1, 1.0);
    slots[0].adjacency.set(1, 2, 1.0);
    slots[0].adjacency.set(0, 2, 1.0);
    slots[1].adjacency = AdjacencyMatrix(3);
    slots[1].adjacency.set(0, 1, 1.0);
    slots[1].adjacency.set(0, 2, 1.0);
    MeasureParams params;
    params.damping = 1.0;
    try {
        evolutionary_centrality(slots, CentralityMeasure::PageRank, SmoothingConfig{0.0}, params);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::string(e.what()).find("slot 1") != std::string::npos);
    }
}
