#include "tempocent/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include <json.hpp>

namespace tempocent::io {

namespace {

using ordered_json = nlohmann::ordered_json;

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, path.string() + ": " + e.what());
    }
    return j;
}

std::vector<double> normalized_scores(const CentralityResult& r, bool normalize_max) {
    std::vector<double> scores = r.scores;
    if (normalize_max) {
        const double mx = scores.empty() ? 0.0 : *std::max_element(scores.begin(), scores.end());
        if (mx > 0.0)
            for (auto& s : scores) s /= mx;
    }
    return scores;
}

// rank[v] = 1-based position of v in the ranking
std::vector<std::uint32_t> rank_positions(const CentralityResult& r) {
    std::vector<std::uint32_t> rank(r.ranking.size(), 0);
    for (std::uint32_t pos = 0; pos < r.ranking.size(); ++pos) rank[r.ranking[pos]] = pos + 1;
    return rank;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw Error("write to " + path.string() + " failed");
}

void write_registry(const std::filesystem::path& path, const NodeRegistry& registry) {
    ordered_json j = registry.labels();
    write_text_file(path, j.dump() + "\n");
}

NodeRegistry read_registry(const std::filesystem::path& path) {
    const auto j = load_json(path);
    if (!j.is_array()) throw ShapeError(path.string() + ": registry must be a JSON array");
    NodeRegistry registry;
    for (const auto& item : j) {
        if (!item.is_string()) throw ShapeError(path.string() + ": labels must be strings");
        const auto label = item.get<std::string>();
        const auto before = registry.size();
        registry.add(label);
        if (registry.size() == before)
            throw ShapeError(path.string() + ": duplicate label '" + label + "'");
    }
    return registry;
}

std::filesystem::path slot_graph_filename(std::int64_t slot) {
    return "slot_" + std::to_string(slot) + ".json";
}

void write_slot_graph(const std::filesystem::path& path, const SlotGraph& g) {
    const std::uint32_t n = g.adjacency.size();
    ordered_json j;
    j["slot"] = g.slot;
    j["n"] = n;
    auto rows = ordered_json::array();
    for (NodeId i = 0; i < n; ++i) {
        auto row = ordered_json::array();
        for (NodeId jx = 0; jx < n; ++jx) row.push_back(g.adjacency.at(i, jx));
        rows.push_back(std::move(row));
    }
    j["weights"] = std::move(rows);
    write_text_file(path, j.dump() + "\n");
}

SlotGraph read_slot_graph(const std::filesystem::path& path,
                          std::shared_ptr<const NodeRegistry> registry) {
    const auto j = load_json(path);
    SlotGraph g;
    g.slot = j.at("slot").get<std::int64_t>();
    const auto n = j.at("n").get<std::uint32_t>();
    if (registry && n != registry->size())
        throw ShapeError(path.string() + ": n=" + std::to_string(n) +
                         " does not match registry size " + std::to_string(registry->size()));
    g.registry = std::move(registry);
    g.adjacency = AdjacencyMatrix(n);
    const auto& rows = j.at("weights");
    if (!rows.is_array() || rows.size() != n)
        throw ShapeError(path.string() + ": weights must be an n x n array");
    auto& w = g.adjacency.data();
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ShapeError(path.string() + ": weights must be an n x n array");
        for (std::uint32_t k = 0; k < n; ++k)
            w[static_cast<std::size_t>(i) * n + k] = row[k].get<double>();
    }
    g.adjacency.validate();
    return g;
}

std::vector<SlotGraph> read_slot_graphs(const std::filesystem::path& dir,
                                        std::shared_ptr<const NodeRegistry> registry) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.starts_with("slot_") && name.ends_with(".json")) files.push_back(entry.path());
    }
    if (files.empty()) throw Error("no slot_<t>.json files in " + dir.string());

    std::vector<SlotGraph> slots;
    slots.reserve(files.size());
    for (const auto& path : files) slots.push_back(read_slot_graph(path, registry));
    std::sort(slots.begin(), slots.end(),
              [](const SlotGraph& a, const SlotGraph& b) { return a.slot < b.slot; });
    for (std::size_t t = 1; t < slots.size(); ++t)
        if (slots[t].slot != slots[t - 1].slot + 1)
            throw ShapeError(dir.string() + ": stored slots are not consecutive");
    return slots;
}

std::string centrality_record_json(const CentralityResult& result, const NodeRegistry& registry,
                                   bool normalize_max) {
    const auto scores = normalized_scores(result, normalize_max);
    const auto rank = rank_positions(result);
    ordered_json j;
    j["slot"] = result.slot;
    j["measure"] = to_string(result.measure);
    j["alpha"] = result.alpha;
    auto arr = ordered_json::array();
    for (std::uint32_t v = 0; v < scores.size(); ++v) {
        ordered_json e;
        e["label"] = registry.label(v);
        e["score"] = scores[v];
        e["rank"] = rank[v];
        arr.push_back(std::move(e));
    }
    j["scores"] = std::move(arr);
    return j.dump() + "\n";
}

std::string centrality_rows_csv(const CentralityResult& result, const NodeRegistry& registry,
                                bool normalize_max) {
    const auto scores = normalized_scores(result, normalize_max);
    const auto rank = rank_positions(result);
    std::string out;
    for (std::uint32_t v = 0; v < scores.size(); ++v) {
        out += std::to_string(result.slot);
        out += ',';
        out += to_string(result.measure);
        out += ',';
        out += registry.label(v);
        out += ',';
        out += format_double(scores[v]);
        out += ',';
        out += std::to_string(rank[v]);
        out += '\n';
    }
    return out;
}

std::string clique_lines_tsv(const CliqueSet& set, const NodeRegistry& registry,
                             std::uint32_t min_size) {
    std::string out;
    std::vector<std::string> labels;
    for (const auto& c : set.cliques) {
        if (c.size() < min_size) continue;
        out += std::to_string(set.slot);
        out += '\t';
        out += std::to_string(c.size());
        out += '\t';
        labels.clear();
        for (NodeId v : c.members) labels.push_back(registry.label(v));
        std::sort(labels.begin(), labels.end());
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (k) out += ',';
            out += labels[k];
        }
        out += '\n';
    }
    return out;
}

std::string histogram_csv(const std::map<std::uint32_t, std::size_t>& histogram) {
    std::string out = "size,count\n";
    for (const auto& [size, count] : histogram) {
        out += std::to_string(size);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

std::string sentinels_json(const std::vector<SentinelReport>& reports,
                           const NodeRegistry& registry) {
    auto arr = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json j;
        j["slot"] = rep.slot;
        ordered_json part;
        for (std::uint32_t v = 0; v < rep.participation.size(); ++v)
            part[registry.label(v)] = rep.participation[v];
        j["participation"] = std::move(part);
        auto common = ordered_json::array();
        for (NodeId v : rep.common_nodes) common.push_back(registry.label(v));
        j["common_nodes"] = std::move(common);
        auto persistent = ordered_json::array();
        for (NodeId v : rep.persistent_sentinels) persistent.push_back(registry.label(v));
        j["persistent_sentinels"] = std::move(persistent);
        arr.push_back(std::move(j));
    }
    return arr.dump() + "\n";
}

}  // namespace tempocent::io
