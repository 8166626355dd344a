#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "tempocent/cliques.hpp"
#include "tempocent/synth.hpp"

using namespace tempocent;

TEST_CASE("same seed, same trace bytes") {
    SyntheticModel model;
    model.n_nodes = 15;
    model.n_slots = 2;
    model.seed = 2024;
    std::ostringstream a, b;
    write_trace_csv(a, generate_trace(model));
    write_trace_csv(b, generate_trace(model));
    CHECK(a.str() == b.str());
    CHECK(a.str().starts_with("node_a,node_b,timestamp\n"));
}

TEST_CASE("zero rates produce a header-only file") {
    SyntheticModel model;
    model.intra_rate = 0.0;
    model.inter_rate = 0.0;
    const auto events = generate_trace(model);
    CHECK(events.empty());
    std::ostringstream out;
    write_trace_csv(out, events);
    CHECK(out.str() == "node_a,node_b,timestamp\n");
}

TEST_CASE("events are sorted by timestamp and stay within their slots") {
    SyntheticModel model;
    model.n_nodes = 12;
    model.n_slots = 3;
    model.seed = 7;
    const auto events = generate_trace(model);
    REQUIRE(!events.empty());
    for (std::size_t k = 1; k < events.size(); ++k)
        CHECK(events[k - 1].timestamp <= events[k].timestamp);
    for (const auto& ev : events) {
        CHECK(ev.timestamp >= 0);
        CHECK(ev.timestamp < model.slot_duration * model.n_slots);
        CHECK(ev.node_a != ev.node_b);
    }
}

TEST_CASE("one dense community forms a complete slot graph") {
    SyntheticModel model;
    model.n_nodes = 6;
    model.n_slots = 1;
    model.n_communities = 1;
    model.intra_rate = 25.0;
    model.inter_rate = 0.0;
    model.hub_count = 0;
    model.seed = 42;
    const auto events = generate_trace(model);
    NodeRegistry reg;
    for (const auto& ev : events) {
        reg.add(ev.node_a);
        reg.add(ev.node_b);
    }
    REQUIRE(reg.size() == 6);
    SlotConfig cfg{model.slot_duration, 300, 0};
    const auto slots = to_slot_graphs(build_similarity(events, reg, cfg),
                                      std::make_shared<const NodeRegistry>(reg));
    REQUIRE(slots.size() == 1);
    const auto set = bron_kerbosch(binarize(slots[0], 0.0));
    REQUIRE(set.cliques.size() == 1);
    CHECK(set.cliques[0].size() == 6);
}

TEST_CASE("model validation rejects bad parameters") {
    SyntheticModel model;
    model.n_communities = 0;
    CHECK_THROWS_AS(generate_trace(model), ConfigError);
    model = {};
    model.hub_count = model.n_nodes + 1;
    CHECK_THROWS_AS(generate_trace(model), ConfigError);
    model = {};
    model.intra_rate = -1.0;
    CHECK_THROWS_AS(generate_trace(model), ConfigError);
}
