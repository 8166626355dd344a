#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tempocent/centrality.hpp"
#include "tempocent/cliques.hpp"
#include "tempocent/graph.hpp"

namespace tempocent::io {

// Shortest decimal that round-trips to the same double (pinned output format).
std::string format_double(double v);

// registry.json: bare JSON array of labels in id order.
void write_registry(const std::filesystem::path& path, const NodeRegistry& registry);
NodeRegistry read_registry(const std::filesystem::path& path);

// slot_<t>.json: {"slot": t, "n": n, "weights": [[...], ...]}.
std::filesystem::path slot_graph_filename(std::int64_t slot);
void write_slot_graph(const std::filesystem::path& path, const SlotGraph& g);
SlotGraph read_slot_graph(const std::filesystem::path& path,
                          std::shared_ptr<const NodeRegistry> registry);

// Loads every slot_<t>.json in `dir`, sorted by slot; validates invariants
// and that slot indices are consecutive.
std::vector<SlotGraph> read_slot_graphs(const std::filesystem::path& dir,
                                        std::shared_ptr<const NodeRegistry> registry);

// {"slot":…, "measure":…, "alpha":…, "scores":[{"label":…, "score":…, "rank":…}, …]}
// normalize_max divides scores by the slot maximum (if positive) at output time.
std::string centrality_record_json(const CentralityResult& result, const NodeRegistry& registry,
                                   bool normalize_max);

// Rows of `slot,measure,label,score,rank` (no header; callers prepend it).
std::string centrality_rows_csv(const CentralityResult& result, const NodeRegistry& registry,
                                bool normalize_max);

// One clique per line: slot<TAB>size<TAB>comma-separated labels in ascending
// id order. Cliques below min_size are dropped.
std::string clique_lines_tsv(const CliqueSet& set, const NodeRegistry& registry,
                             std::uint32_t min_size);

// "size,count" header plus one row per size, ascending.
std::string histogram_csv(const std::map<std::uint32_t, std::size_t>& histogram);

// JSON array of per-slot sentinel reports.
std::string sentinels_json(const std::vector<SentinelReport>& reports,
                           const NodeRegistry& registry);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace tempocent::io
