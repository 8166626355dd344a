#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tempocent/centrality.hpp"
#include "tempocent/cliques.hpp"
#include "tempocent/evolutionary.hpp"
#include "tempocent/graph.hpp"
#include "tempocent/ingest.hpp"
#include "tempocent/io.hpp"
#include "tempocent/synth.hpp"
#include "tempocent/threading.hpp"

namespace fs = std::filesystem;
using namespace tempocent;

namespace {

struct SynthOpts {
    std::string output;
    SyntheticModel model;
};

struct IngestOpts {
    std::string input;
    std::string outdir;
    std::int64_t slot_duration = 604800;
    std::int64_t interval = 300;
    std::int64_t origin = -1;  // -1 = derive from the trace
    bool lenient = false;
};

struct CentralityOpts {
    std::string outdir;
    std::string measure = "all";
    double alpha = 0.5;
    double threshold = 0.0;
    double damping = 0.85;
    std::string format = "json";
    std::string normalize = "none";
};

struct CliquesOpts {
    std::string outdir;
    double threshold = 0.0;
    double phi = 1.0;
    std::uint32_t window = 3;
    std::uint32_t min_clique_size = 1;
    std::string algorithm = "pivot";
};

std::vector<CentralityMeasure> selected_measures(const std::string& name) {
    if (name == "all") return {kAllMeasures.begin(), kAllMeasures.end()};
    const auto m = measure_from_string(name);
    if (!m) throw ConfigError("unknown measure '" + name + "'");
    return {*m};
}

void cmd_synth(const SynthOpts& opts) {
    const auto events = generate_trace(opts.model);
    std::ostringstream buf;
    write_trace_csv(buf, events);
    io::write_text_file(opts.output, buf.str());
    std::cout << "wrote " << events.size() << " events to " << opts.output << "\n";
}

void cmd_ingest(const IngestOpts& opts) {
    std::ifstream in(opts.input, std::ios::binary);
    if (!in) throw Error("cannot open " + opts.input);
    auto parsed = parse_events(in, opts.lenient ? ParseMode::Lenient : ParseMode::Strict);
    for (const auto& w : parsed.warnings)
        std::cerr << "warning: " << opts.input << " line " << w.line << ": " << w.message << "\n";
    if (parsed.events.empty()) throw ConfigError("no events in " + opts.input);

    SlotConfig cfg;
    cfg.slot_duration = opts.slot_duration;
    cfg.interval_duration = opts.interval;
    cfg.origin = opts.origin >= 0 ? opts.origin
                                  : default_origin(parsed.events, opts.slot_duration);
    const auto sims = build_similarity(parsed.events, parsed.registry, cfg);
    auto registry = std::make_shared<const NodeRegistry>(std::move(parsed.registry));
    const auto slots = to_slot_graphs(sims, registry);

    fs::create_directories(opts.outdir);
    io::write_registry(fs::path(opts.outdir) / "registry.json", *registry);
    for (const auto& g : slots)
        io::write_slot_graph(fs::path(opts.outdir) / io::slot_graph_filename(g.slot), g);
    std::cout << "ingested " << parsed.events.size() << " events into " << slots.size()
              << " slot(s), n=" << registry->size() << "\n";
}

void cmd_centrality(const CentralityOpts& opts) {
    if (opts.format != "json" && opts.format != "csv")
        throw ConfigError("format must be json or csv");
    if (opts.normalize != "none" && opts.normalize != "max")
        throw ConfigError("normalize must be none or max");
    const bool normalize_max = opts.normalize == "max";
    const auto measures = selected_measures(opts.measure);

    const fs::path outdir(opts.outdir);
    auto registry =
        std::make_shared<const NodeRegistry>(io::read_registry(outdir / "registry.json"));
    const auto slots = io::read_slot_graphs(outdir, registry);

    SmoothingConfig smoothing{opts.alpha};
    MeasureParams params;
    params.threshold = opts.threshold;
    params.damping = opts.damping;

    // Compute everything before writing anything, so a failure leaves no
    // partial report behind.
    std::vector<std::vector<CentralityResult>> all;
    all.reserve(measures.size());
    for (const auto m : measures)
        all.push_back(evolutionary_centrality(slots, m, smoothing, params));

    if (opts.format == "json") {
        std::size_t files = 0;
        for (const auto& results : all) {
            for (const auto& r : results) {
                const auto name = "centrality_" + std::string(to_string(r.measure)) + "_slot_" +
                                  std::to_string(r.slot) + ".json";
                io::write_text_file(outdir / name,
                                    io::centrality_record_json(r, *registry, normalize_max));
                ++files;
            }
        }
        std::cout << "wrote " << files << " centrality report(s) to " << opts.outdir << "\n";
    } else {
        std::string csv = "slot,measure,label,score,rank\n";
        for (const auto& results : all)
            for (const auto& r : results)
                csv += io::centrality_rows_csv(r, *registry, normalize_max);
        io::write_text_file(outdir / "centrality.csv", csv);
        std::cout << "wrote centrality.csv to " << opts.outdir << "\n";
    }
}

// min-size filtering happens at reporting time; enumeration always sees the
// full clique set.
CliqueSet filter_min_size(CliqueSet set, std::uint32_t min_size) {
    if (min_size <= 1) return set;
    std::erase_if(set.cliques, [&](const Clique& c) { return c.size() < min_size; });
    set.size_histogram.clear();
    for (const auto& c : set.cliques) ++set.size_histogram[c.size()];
    return set;
}

void cmd_cliques(const CliquesOpts& opts) {
    if (opts.algorithm != "pivot" && opts.algorithm != "basic")
        throw ConfigError("algorithm must be pivot or basic");
    const bool use_pivot = opts.algorithm == "pivot";

    const fs::path outdir(opts.outdir);
    auto registry =
        std::make_shared<const NodeRegistry>(io::read_registry(outdir / "registry.json"));
    const auto slots = io::read_slot_graphs(outdir, registry);

    std::vector<CliqueSet> sets(slots.size());
    std::vector<std::string> failures(slots.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(slots.size()); ++t) {
        try {
            const auto bg = binarize(slots[t], opts.threshold);
            sets[t] = use_pivot ? bron_kerbosch_pivot(bg, slots[t].slot)
                                : bron_kerbosch(bg, slots[t].slot);
        } catch (const std::exception& e) {
            failures[t] = e.what();
        }
    }
    for (std::size_t t = 0; t < failures.size(); ++t)
        if (!failures[t].empty())
            throw ResourceLimitError("slot " + std::to_string(slots[t].slot) + ": " + failures[t]);

    std::vector<CliqueSet> reported;
    reported.reserve(sets.size());
    for (auto& set : sets) reported.push_back(filter_min_size(std::move(set), opts.min_clique_size));

    std::string tsv;
    for (const auto& set : reported)
        tsv += io::clique_lines_tsv(set, *registry, opts.min_clique_size);
    io::write_text_file(outdir / "cliques.tsv", tsv);
    io::write_text_file(outdir / "histogram.csv", io::histogram_csv(clique_histogram(reported)));
    io::write_text_file(outdir / "sentinels.json",
                        io::sentinels_json(sentinel_nodes(reported, opts.phi, opts.window),
                                           *registry));
    std::cout << "wrote cliques.tsv, histogram.csv, sentinels.json to " << opts.outdir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();

    CLI::App app{"temporal contact-graph centrality and maximal-clique toolkit"};
    app.require_subcommand(1);

    SynthOpts synth;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic contact trace");
    synth_cmd->add_option("--output", synth.output, "output CSV path")->required();
    synth_cmd->add_option("--nodes", synth.model.n_nodes, "node count");
    synth_cmd->add_option("--slots", synth.model.n_slots, "slot count");
    synth_cmd->add_option("--communities", synth.model.n_communities, "community count");
    synth_cmd->add_option("--intra-rate", synth.model.intra_rate,
                          "expected events per intra-community pair per slot");
    synth_cmd->add_option("--inter-rate", synth.model.inter_rate,
                          "expected events per cross-community pair per slot");
    synth_cmd->add_option("--hubs", synth.model.hub_count, "number of boosted hub nodes");
    synth_cmd->add_option("--hub-boost", synth.model.hub_boost, "hub rate multiplier");
    synth_cmd->add_option("--seed", synth.model.seed, "rng seed");
    synth_cmd->add_option("--slot-duration", synth.model.slot_duration, "slot length in seconds");

    IngestOpts ingest;
    auto* ingest_cmd = app.add_subcommand("ingest", "parse a trace into per-slot graphs");
    ingest_cmd->add_option("--input", ingest.input, "contact CSV path")->required();
    ingest_cmd->add_option("--outdir", ingest.outdir, "output directory")->required();
    ingest_cmd->add_option("--slot-duration", ingest.slot_duration, "slot length in seconds");
    ingest_cmd->add_option("--interval", ingest.interval, "counting sub-interval in seconds");
    ingest_cmd->add_option("--origin", ingest.origin,
                           "epoch timestamp of slot 0 (default: derived from the trace)");
    ingest_cmd->add_flag("--lenient", ingest.lenient, "skip malformed lines with a warning");

    CentralityOpts cent;
    auto* cent_cmd = app.add_subcommand("centrality", "compute per-slot centrality reports");
    cent_cmd->add_option("--outdir", cent.outdir, "directory holding ingested slot files")
        ->required();
    cent_cmd->add_option("--measure", cent.measure,
                         "degree|closeness|betweenness|eigenvector|pagerank|all");
    cent_cmd->add_option("--alpha", cent.alpha, "history weight (0 = plain centrality)");
    cent_cmd->add_option("--threshold", cent.threshold, "edge threshold for binarized measures");
    cent_cmd->add_option("--damping", cent.damping, "pagerank damping factor");
    cent_cmd->add_option("--format", cent.format, "json|csv");
    cent_cmd->add_option("--normalize", cent.normalize, "none|max");

    CliquesOpts cliq;
    auto* cliq_cmd = app.add_subcommand("cliques", "enumerate maximal cliques per slot");
    cliq_cmd->add_option("--outdir", cliq.outdir, "directory holding ingested slot files")
        ->required();
    cliq_cmd->add_option("--threshold", cliq.threshold, "edge threshold");
    cliq_cmd->add_option("--phi", cliq.phi, "common-node participation fraction, in (0,1]");
    cliq_cmd->add_option("--window", cliq.window, "persistence window in slots");
    cliq_cmd->add_option("--min-clique-size", cliq.min_clique_size, "smallest reported clique");
    cliq_cmd->add_option("--algorithm", cliq.algorithm, "pivot|basic");

    IngestOpts rep_ingest;
    CentralityOpts rep_cent;
    CliquesOpts rep_cliq;
    auto* report_cmd =
        app.add_subcommand("report", "full pipeline: ingest + centrality + cliques");
    report_cmd->add_option("--input", rep_ingest.input, "contact CSV path")->required();
    report_cmd->add_option("--outdir", rep_ingest.outdir, "output directory")->required();
    report_cmd->add_option("--slot-duration", rep_ingest.slot_duration, "slot length in seconds");
    report_cmd->add_option("--interval", rep_ingest.interval, "counting sub-interval in seconds");
    report_cmd->add_option("--origin", rep_ingest.origin, "epoch timestamp of slot 0");
    report_cmd->add_flag("--lenient", rep_ingest.lenient, "skip malformed lines with a warning");
    report_cmd->add_option("--measure", rep_cent.measure,
                           "degree|closeness|betweenness|eigenvector|pagerank|all");
    report_cmd->add_option("--alpha", rep_cent.alpha, "history weight (0 = plain centrality)");
    report_cmd->add_option("--threshold", rep_cent.threshold, "edge threshold");
    report_cmd->add_option("--damping", rep_cent.damping, "pagerank damping factor");
    report_cmd->add_option("--format", rep_cent.format, "json|csv");
    report_cmd->add_option("--normalize", rep_cent.normalize, "none|max");
    report_cmd->add_option("--phi", rep_cliq.phi, "common-node participation fraction");
    report_cmd->add_option("--window", rep_cliq.window, "persistence window in slots");
    report_cmd->add_option("--min-clique-size", rep_cliq.min_clique_size,
                           "smallest reported clique");
    report_cmd->add_option("--algorithm", rep_cliq.algorithm, "pivot|basic");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth_cmd->parsed()) cmd_synth(synth);
        if (ingest_cmd->parsed()) cmd_ingest(ingest);
        if (cent_cmd->parsed()) cmd_centrality(cent);
        if (cliq_cmd->parsed()) cmd_cliques(cliq);
        if (report_cmd->parsed()) {
            cmd_ingest(rep_ingest);
            rep_cent.outdir = rep_ingest.outdir;
            rep_cliq.outdir = rep_ingest.outdir;
            rep_cliq.threshold = rep_cent.threshold;
            cmd_centrality(rep_cent);
            cmd_cliques(rep_cliq);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
