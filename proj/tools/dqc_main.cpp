// dqc: replay edge-update streams against the dynamic quasi-clique engines,
// generate workloads, and query the exact small-graph oracle.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqc/bench.hpp"
#include "dqc/nsf.hpp"
#include "dqc/oracle.hpp"
#include "dqc/workload.hpp"

namespace {

struct CliOptions {
    std::string dataset;
    std::string stream_path;
    std::string out;
    std::string engine = "dmi";
    std::string backend = "bt";
    std::string flavor = "rand";
    std::string emit_mapping;
    std::string out_graph;
    dqc::EngineParams params{};
    bool temporal = false;
    bool verify = false;
    std::size_t q = 1000;
    std::size_t jobs = 1;
    std::vector<double> gammas, bs;
    std::vector<int> ks;
    std::vector<std::size_t> batches, capacities;
};

void attach_engine_options(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--engine", o.engine, "Engine: dmi (incremental list) or nsf (neighbor-search baseline)")
        ->check(CLI::IsMember({"dmi", "nsf"}));
    cmd->add_option("--backend", o.backend, "Similarity backend: exact, bf (buffered minhash), bt (bottom-k)")
        ->check(CLI::IsMember({"exact", "bf", "bt"}));
    cmd->add_option("--gamma", o.params.detect.gamma, "Containment threshold γ")->capture_default_str();
    cmd->add_option("--b", o.params.detect.b, "Detect validity fraction b")->capture_default_str();
    cmd->add_option("--alpha", o.params.detect.alpha, "Density threshold α")->capture_default_str();
    cmd->add_option("--rtol", o.params.r_tol, "Candidate-list dedup Jaccard cap")->capture_default_str();
    cmd->add_option("--B", o.params.capacity, "Candidate list capacity")->capture_default_str();
    cmd->add_option("--batch", o.params.batch, "Ops between full reconstructions")->capture_default_str();
    cmd->add_option("--k", o.params.k, "Sketch slots / bottom-k prefix")->capture_default_str();
    cmd->add_option("--l", o.params.l, "Buffer depth (bf backend)")->capture_default_str();
    cmd->add_option("--R", o.params.rounds, "Extraction rounds (nsf)")->capture_default_str();
    cmd->add_option("--seed", o.params.seed, "Hash/RNG master seed")
        ->envname("DQC_SEED")
        ->capture_default_str();
    cmd->add_flag_callback(
        "--paper-literal-gamma",
        [&o]() { o.params.gamma_rule = dqc::GammaRule::PaperLiteral; },
        "Use the published incremental γ-degree rules verbatim (known to drift)");
    cmd->add_flag("--halt-full-list", o.params.halt_requires_full_list,
                  "Build halts on the γ-degree bound only once the list is full");
}

dqc::Backend parse_backend(const std::string& name) {
    if (name == "exact") return dqc::Backend::Exact;
    if (name == "bf") return dqc::Backend::BufferedMinHash;
    return dqc::Backend::BottomK;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

void write_mapping(const std::string& path, const std::vector<std::uint64_t>& original) {
    std::ostringstream csv;
    csv << "dense,original\n";
    for (std::size_t i = 0; i < original.size(); ++i) csv << i << ',' << original[i] << "\n";
    write_file(path, csv.str());
}

void write_edge_list(const std::string& path, const dqc::DynamicGraph& g) {
    std::vector<std::pair<dqc::VertexId, dqc::VertexId>> edges;
    edges.reserve(g.edge_count());
    for (dqc::VertexId u = 0; u < g.vertex_count(); ++u) {
        for (dqc::VertexId v : g.neighbors(u)) {
            if (u < v) edges.push_back({u, v});
        }
    }
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "# " << g.vertex_count() << " vertices, " << edges.size() << " edges\n";
    for (auto [u, v] : edges) out << u << ' ' << v << "\n";
    write_file(path, out.str());
}

// Loads the dataset and resolves the stream: either a stream file replayed
// against an edge list, or a temporal event file unrolled into both.
struct RunInputs {
    dqc::DynamicGraph graph{0};
    dqc::OperationStream stream;
    std::vector<std::uint64_t> original_id;
};

RunInputs resolve_inputs(const CliOptions& o, bool need_stream) {
    RunInputs in;
    if (o.temporal) {
        if (o.flavor != "temp" && o.flavor != "tinc") {
            throw std::invalid_argument("--temporal requires --flavor temp or tinc");
        }
        auto loaded = dqc::load_temporal(o.dataset);
        auto workload = dqc::from_temporal(loaded.events, loaded.vertex_count, o.q, o.params.seed,
                                           o.flavor == "temp", o.params.detect.gamma, o.params.gamma_rule);
        in.graph = std::move(workload.initial);
        in.stream = std::move(workload.stream);
        in.original_id = std::move(loaded.original_id);
        return in;
    }
    auto loaded = dqc::load_edge_list(o.dataset, o.params.detect.gamma, o.params.gamma_rule);
    in.graph = std::move(loaded.graph);
    in.original_id = std::move(loaded.original_id);
    if (need_stream) in.stream = dqc::load_stream(o.stream_path);
    return in;
}

int cmd_run(CliOptions& o) {
    o.params.backend = parse_backend(o.backend);
    std::string why;
    if (!o.params.valid(&why)) {
        std::cerr << "invalid parameters: " << why << "\n";
        return 2;
    }
    RunInputs in = resolve_inputs(o, /*need_stream=*/!o.temporal);
    if (!o.emit_mapping.empty()) write_mapping(o.emit_mapping, in.original_id);

    const dqc::EngineKind engine = o.engine == "dmi" ? dqc::EngineKind::Dmi : dqc::EngineKind::Nsf;
    dqc::RunReport report = dqc::run_benchmark(in.graph, in.stream, engine, o.params, o.verify);

    const std::string json = dqc::report_json(report);
    if (o.out.empty()) {
        std::cout << json << "\n";
    } else {
        write_file(o.out + ".json", json + "\n");
        write_file(o.out + ".csv", dqc::report_csv(report));
        std::cerr << "wrote " << o.out << ".json and " << o.out << ".csv\n";
    }
    return 0;
}

int cmd_sweep(CliOptions& o) {
    o.params.backend = parse_backend(o.backend);
    RunInputs in = resolve_inputs(o, /*need_stream=*/!o.temporal);
    const dqc::EngineKind engine = o.engine == "dmi" ? dqc::EngineKind::Dmi : dqc::EngineKind::Nsf;
    auto results = dqc::run_sweep(in.graph, in.stream, engine, o.params, o.gammas, o.bs, o.ks, o.batches,
                                  o.capacities, o.jobs);
    const std::string csv = dqc::sweep_csv(results);
    if (o.out.empty()) {
        std::cout << csv;
    } else {
        write_file(o.out, csv);
        std::cerr << "wrote " << o.out << "\n";
    }
    const bool any_ok = std::any_of(results.begin(), results.end(), [](const auto& r) { return r.ok; });
    if (!any_ok) {
        std::cerr << "every grid point failed";
        if (!results.empty()) std::cerr << " (first error: " << results.front().error << ")";
        std::cerr << "\n";
        return 2;
    }
    return 0;
}

int cmd_gen(CliOptions& o) {
    if (o.flavor == "temp" || o.flavor == "tinc") {
        auto loaded = dqc::load_temporal(o.dataset);
        auto workload = dqc::from_temporal(loaded.events, loaded.vertex_count, o.q, o.params.seed,
                                           o.flavor == "temp", o.params.detect.gamma, o.params.gamma_rule);
        dqc::save_stream(workload.stream, o.out);
        if (!o.out_graph.empty()) write_edge_list(o.out_graph, workload.initial);
        if (!o.emit_mapping.empty()) write_mapping(o.emit_mapping, loaded.original_id);
        std::cerr << "stream: " << workload.stream.ops.size() << " ops; initial graph: "
                  << workload.initial.edge_count() << " edges\n";
        return 0;
    }
    auto loaded = dqc::load_edge_list(o.dataset, o.params.detect.gamma, o.params.gamma_rule);
    dqc::OperationStream s;
    if (o.flavor == "rand") {
        s = dqc::gen_random(loaded.graph, o.q, o.params.seed);
    } else if (o.flavor == "inc") {
        s = dqc::gen_incremental(loaded.graph, o.q, o.params.seed);
    } else {
        s = dqc::gen_decremental(loaded.graph, o.q, o.params.seed);
    }
    dqc::save_stream(s, o.out);
    if (!o.out_graph.empty()) write_edge_list(o.out_graph, loaded.graph);
    if (!o.emit_mapping.empty()) write_mapping(o.emit_mapping, loaded.original_id);
    std::cerr << "stream: " << s.ops.size() << " ops\n";
    return 0;
}

int cmd_oracle(CliOptions& o) {
    auto loaded = dqc::load_edge_list(o.dataset, o.params.detect.gamma, o.params.gamma_rule);
    dqc::VertexSet best = dqc::max_quasi_clique_exact(loaded.graph, o.params.detect.alpha);

    nlohmann::json j;
    j["alpha"] = o.params.detect.alpha;
    j["size"] = best.size();
    j["density"] = loaded.graph.density(best);
    j["members_dense"] = best.ids();
    std::vector<std::uint64_t> orig;
    orig.reserve(best.size());
    for (dqc::VertexId v : best) orig.push_back(loaded.original_id[v]);
    j["members_original"] = orig;

    const std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file(o.out, text);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic α-quasi-clique maintenance over edge streams"};
    app.require_subcommand(1);
    CliOptions o;

    CLI::App* run = app.add_subcommand("run", "Replay a stream against an engine and report latency/quality");
    run->add_option("--dataset", o.dataset, "Edge list (or temporal events with --temporal)")->required();
    auto* run_stream = run->add_option("--stream", o.stream_path, "Operation stream file");
    auto* run_temporal =
        run->add_flag("--temporal", o.temporal, "Dataset is temporal events; derive initial graph + stream");
    run_stream->excludes(run_temporal);
    run->add_option("--flavor", o.flavor, "Temporal unroll flavor (temp or tinc)")
        ->check(CLI::IsMember({"temp", "tinc", "rand", "inc", "del"}));
    run->add_option("--q", o.q, "Op count for temporal unrolls")->capture_default_str();
    run->add_flag("--verify", o.verify, "Check engine invariants after every op (exit 3 on violation)");
    run->add_option("--out", o.out, "Output prefix: writes <out>.json and <out>.csv (stdout JSON otherwise)");
    run->add_option("--emit-mapping", o.emit_mapping, "Write dense→original vertex id mapping CSV here");
    attach_engine_options(run, o);
    run->callback([&]() {
        if (!o.temporal && o.stream_path.empty()) {
            throw CLI::ValidationError("--stream is required unless --temporal is set");
        }
    });

    CLI::App* sweep = app.add_subcommand("sweep", "Grid of runs over {γ, b, k, Batch, B}; combined CSV");
    sweep->add_option("--dataset", o.dataset, "Edge list (or temporal events with --temporal)")->required();
    auto* sweep_stream = sweep->add_option("--stream", o.stream_path, "Operation stream file");
    auto* sweep_temporal =
        sweep->add_flag("--temporal", o.temporal, "Dataset is temporal events; derive initial graph + stream");
    sweep_stream->excludes(sweep_temporal);
    sweep->add_option("--q", o.q, "Op count for temporal unrolls")->capture_default_str();
    sweep->add_option("--gammas", o.gammas, "γ axis (defaults to --gamma)");
    sweep->add_option("--bs", o.bs, "b axis");
    sweep->add_option("--ks", o.ks, "k axis");
    sweep->add_option("--batches", o.batches, "Batch axis");
    sweep->add_option("--Bs", o.capacities, "Capacity axis");
    sweep->add_option("--jobs", o.jobs, "Parallel worker threads")->capture_default_str();
    sweep->add_option("--out", o.out, "Combined CSV path (stdout otherwise)");
    attach_engine_options(sweep, o);
    sweep->callback([&]() {
        if (!o.temporal && o.stream_path.empty()) {
            throw CLI::ValidationError("--stream is required unless --temporal is set");
        }
    });

    CLI::App* gen = app.add_subcommand("gen", "Generate an operation stream from a dataset");
    gen->add_option("--dataset", o.dataset, "Edge list (rand/inc/del) or temporal events (temp/tinc)")
        ->required();
    gen->add_option("--flavor", o.flavor, "rand | inc | del | temp | tinc")
        ->required()
        ->check(CLI::IsMember({"rand", "inc", "del", "temp", "tinc"}));
    gen->add_option("--q", o.q, "Requested op count")->capture_default_str();
    gen->add_option("--seed", o.params.seed, "Stream RNG seed")->envname("DQC_SEED")->capture_default_str();
    gen->add_option("--gamma", o.params.detect.gamma, "γ for the derived initial graph (temp/tinc)")
        ->capture_default_str();
    gen->add_option("--out", o.out, "Stream file to write")->required();
    gen->add_option("--out-graph", o.out_graph, "Also write the initial graph edge list (temp/tinc)");
    gen->add_option("--emit-mapping", o.emit_mapping, "Write dense→original vertex id mapping CSV here");

    CLI::App* oracle = app.add_subcommand("oracle", "Exact maximum α-quasi-clique (≤ 20 vertices)");
    oracle->add_option("--dataset", o.dataset, "Edge list")->required();
    oracle->add_option("--alpha", o.params.detect.alpha, "Density threshold α")->capture_default_str();
    oracle->add_option("--out", o.out, "Write the JSON result here (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (gen->parsed()) return cmd_gen(o);
        return cmd_oracle(o);
    } catch (const dqc::VerifyFailure& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
