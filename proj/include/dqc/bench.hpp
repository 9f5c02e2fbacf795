#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dqc/dmi.hpp"
#include "dqc/workload.hpp"

namespace dqc {

enum class EngineKind { Dmi, Nsf };

struct OpRecord {
    std::size_t index;
    OpKind kind;
    double latency_us;
    bool has_solution;
    std::size_t best_size;   // 0 without a solution
    double best_density;     // meaningless without a solution
};

struct RunReport {
    std::string engine;
    std::string backend;
    EngineParams params;
    std::size_t initial_vertices = 0;
    std::size_t initial_edges = 0;
    double init_ms = 0.0;
    std::size_t builds = 0; // includes the initial build
    std::vector<OpRecord> ops;
    std::size_t peak_rss_kb = 0; // resident-set high water mark; approximate

    double mean_latency_us() const;
    double median_latency_us() const;
    // Quality means are taken over the operations that had a solution.
    double mean_best_size() const;
    double mean_best_density() const;
    double solution_rate() const;
};

struct VerifyFailure : std::runtime_error {
    explicit VerifyFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Replays the stream on a fresh engine over a copy of `initial`, timing each
// operation. Throws std::invalid_argument for a replay collision (message
// names the op index) and VerifyFailure when `verify_each_op` is set and a
// post-op invariant check fails.
RunReport run_benchmark(const DynamicGraph& initial, const OperationStream& stream, EngineKind engine,
                        const EngineParams& params, bool verify_each_op = false);

std::string backend_name(Backend b);
std::string engine_name(EngineKind e);

std::string report_csv(const RunReport& r);
std::string report_json(const RunReport& r);

struct SweepPoint {
    double gamma, b;
    int k;
    std::size_t batch, capacity;
};

// Cartesian grid over the supplied axes (empty axes pinned to params'
// values); independent runs, optionally across worker threads. Grid points
// whose configuration is invalid are skipped and reported with an error tag.
struct SweepResult {
    SweepPoint point;
    bool ok = false;
    std::string error;
    RunReport report;
};

std::vector<SweepResult> run_sweep(const DynamicGraph& initial, const OperationStream& stream, EngineKind engine,
                                   const EngineParams& base, const std::vector<double>& gammas,
                                   const std::vector<double>& bs, const std::vector<int>& ks,
                                   const std::vector<std::size_t>& batches, const std::vector<std::size_t>& capacities,
                                   std::size_t jobs = 1);

std::string sweep_csv(const std::vector<SweepResult>& results);

std::size_t peak_rss_kb();

} // namespace dqc
