#include "tempocent/synth.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <tuple>

namespace tempocent {

void SyntheticModel::validate() const {
    if (n_nodes == 0) throw ConfigError("n_nodes must be positive");
    if (n_slots == 0) throw ConfigError("n_slots must be positive");
    if (n_communities == 0 || n_communities > n_nodes)
        throw ConfigError("n_communities must lie in [1, n_nodes]");
    if (intra_rate < 0.0 || inter_rate < 0.0) throw ConfigError("rates must be >= 0");
    if (hub_count > n_nodes) throw ConfigError("hub_count must be <= n_nodes");
    if (hub_boost < 0.0) throw ConfigError("hub_boost must be >= 0");
    if (slot_duration < 1) throw ConfigError("slot_duration must be >= 1");
}

namespace {

// Samplers built on raw mt19937_64 output: byte-reproducible everywhere,
// unlike the stdlib distribution objects.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t uniform_below(std::mt19937_64& rng, std::int64_t bound) {
    return static_cast<std::int64_t>(uniform01(rng) * static_cast<double>(bound));
}

// Knuth's product-of-uniforms Poisson; fine for the small rates used here.
std::uint32_t poisson(std::mt19937_64& rng, double rate) {
    if (rate <= 0.0) return 0;
    const double limit = std::exp(-rate);
    double product = 1.0;
    std::uint32_t k = 0;
    do {
        product *= uniform01(rng);
        ++k;
    } while (product > limit);
    return k - 1;
}

}  // namespace

std::vector<ContactEvent> generate_trace(const SyntheticModel& model) {
    model.validate();
    std::mt19937_64 rng(model.seed);

    const auto community = [&](std::uint32_t v) {
        return static_cast<std::uint64_t>(v) * model.n_communities / model.n_nodes;
    };

    std::vector<ContactEvent> events;
    for (std::uint32_t slot = 0; slot < model.n_slots; ++slot) {
        const std::int64_t slot_start = static_cast<std::int64_t>(slot) * model.slot_duration;
        for (std::uint32_t i = 0; i < model.n_nodes; ++i) {
            for (std::uint32_t j = i + 1; j < model.n_nodes; ++j) {
                double rate =
                    community(i) == community(j) ? model.intra_rate : model.inter_rate;
                if (i < model.hub_count || j < model.hub_count) rate *= model.hub_boost;
                const std::uint32_t k = poisson(rng, rate);
                for (std::uint32_t e = 0; e < k; ++e) {
                    ContactEvent ev;
                    ev.node_a = "u" + std::to_string(i);
                    ev.node_b = "u" + std::to_string(j);
                    ev.timestamp = slot_start + uniform_below(rng, model.slot_duration);
                    events.push_back(std::move(ev));
                }
            }
        }
    }
    std::sort(events.begin(), events.end(), [](const ContactEvent& a, const ContactEvent& b) {
        return std::tie(a.timestamp, a.node_a, a.node_b) <
               std::tie(b.timestamp, b.node_a, b.node_b);
    });
    return events;
}

void write_trace_csv(std::ostream& out, const std::vector<ContactEvent>& events) {
    out << "node_a,node_b,timestamp\n";
    for (const auto& ev : events)
        out << ev.node_a << ',' << ev.node_b << ',' << ev.timestamp << '\n';
}

}  // namespace tempocent
