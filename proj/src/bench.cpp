#include "dqc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <optional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dqc/nsf.hpp"
#include "dqc/oracle.hpp"

namespace dqc {

double RunReport::mean_latency_us() const {
    if (ops.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& r : ops) sum += r.latency_us;
    return sum / static_cast<double>(ops.size());
}

double RunReport::median_latency_us() const {
    if (ops.empty()) return 0.0;
    std::vector<double> lat;
    lat.reserve(ops.size());
    for (const auto& r : ops) lat.push_back(r.latency_us);
    std::sort(lat.begin(), lat.end());
    const std::size_t mid = lat.size() / 2;
    return lat.size() % 2 == 1 ? lat[mid] : 0.5 * (lat[mid - 1] + lat[mid]);
}

double RunReport::mean_best_size() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : ops) {
        if (!r.has_solution) continue;
        sum += static_cast<double>(r.best_size);
        ++count;
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double RunReport::mean_best_density() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : ops) {
        if (!r.has_solution) continue;
        sum += r.best_density;
        ++count;
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double RunReport::solution_rate() const {
    if (ops.empty()) return 0.0;
    std::size_t count = 0;
    for (const auto& r : ops) count += r.has_solution ? 1 : 0;
    return static_cast<double>(count) / static_cast<double>(ops.size());
}

std::string backend_name(Backend b) {
    switch (b) {
    case Backend::Exact: return "exact";
    case Backend::BufferedMinHash: return "bf";
    case Backend::BottomK: return "bt";
    }
    return "?";
}

std::string engine_name(EngineKind e) { return e == EngineKind::Dmi ? "dmi" : "nsf"; }

std::size_t peak_rss_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream ls(line.substr(6));
            std::size_t kb = 0;
            ls >> kb;
            return kb;
        }
    }
    return 0;
}

RunReport run_benchmark(const DynamicGraph& initial, const OperationStream& stream, EngineKind engine,
                        const EngineParams& params, bool verify_each_op) {
    using clock = std::chrono::steady_clock;

    RunReport report;
    report.engine = engine_name(engine);
    report.backend = backend_name(params.backend);
    report.params = params;
    report.initial_vertices = initial.vertex_count();
    report.initial_edges = initial.edge_count();

    // Collision scan up front so a bad stream aborts before any timing.
    if (auto bad = first_replay_collision(stream, initial)) {
        std::string msg = "replay collision at op " + std::to_string(*bad);
        if (*bad < stream.lines.size()) msg += " (line " + std::to_string(stream.lines[*bad]) + ")";
        throw std::invalid_argument(msg);
    }

    DynamicGraph working(initial);
    const auto t0 = clock::now();
    std::optional<DmiEngine> dmi;
    std::optional<NsfEngine> nsf;
    if (engine == EngineKind::Dmi) {
        dmi.emplace(std::move(working), params);
    } else {
        nsf.emplace(std::move(working), params);
    }
    report.init_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

    report.ops.reserve(stream.ops.size());
    for (std::size_t i = 0; i < stream.ops.size(); ++i) {
        const Operation& op = stream.ops[i];
        OpRecord rec{};
        rec.index = i;
        rec.kind = op.kind;

        const auto s0 = clock::now();
        std::optional<VertexSet> nsf_best;
        if (dmi) {
            if (op.kind == OpKind::Insert) {
                dmi->add_edge(op.u, op.v);
            } else {
                dmi->delete_edge(op.u, op.v);
            }
        } else {
            nsf_best = op.kind == OpKind::Insert ? nsf->add_edge(op.u, op.v) : nsf->delete_edge(op.u, op.v);
        }
        rec.latency_us = std::chrono::duration<double, std::micro>(clock::now() - s0).count();

        if (dmi) {
            if (const QuasiClique* best = dmi->query_best()) {
                rec.has_solution = true;
                rec.best_size = best->size();
                rec.best_density = best->density();
            }
        } else if (nsf_best) {
            rec.has_solution = true;
            rec.best_size = nsf_best->size();
            rec.best_density = nsf->graph().density(*nsf_best);
        }

        if (verify_each_op) {
            if (dmi) {
                if (!verify_list(dmi->candidates(), dmi->graph(), params.detect.alpha)) {
                    throw VerifyFailure("candidate list invariant violated after op " + std::to_string(i));
                }
            } else if (nsf_best) {
                const auto& c = *nsf_best;
                if (!meets_density(nsf->graph().internal_edge_count(c), c.size(), params.detect.alpha)) {
                    throw VerifyFailure("extracted clique below alpha after op " + std::to_string(i));
                }
            }
        }
        report.ops.push_back(rec);
    }

    report.builds = dmi ? dmi->rebuild_count() : nsf->rebuild_count();
    report.peak_rss_kb = peak_rss_kb();
    return report;
}

std::string report_csv(const RunReport& r) {
    std::ostringstream out;
    out << "op,kind,latency_us,best_size,best_density\n";
    out << std::fixed;
    for (const auto& rec : r.ops) {
        out << rec.index << ',' << static_cast<char>(rec.kind) << ',' << std::setprecision(3) << rec.latency_us
            << ',';
        if (rec.has_solution) {
            out << rec.best_size << ',' << std::setprecision(4) << rec.best_density;
        } else {
            out << "0,"; // no solution
        }
        out << "\n";
    }
    return out.str();
}

std::string report_json(const RunReport& r) {
    nlohmann::json j;
    j["engine"] = r.engine;
    j["backend"] = r.backend;
    j["params"] = {
        {"gamma", r.params.detect.gamma}, {"b", r.params.detect.b},
        {"alpha", r.params.detect.alpha}, {"r_tol", r.params.r_tol},
        {"B", r.params.capacity},         {"batch", r.params.batch},
        {"k", r.params.k},                {"l", r.params.l},
        {"R", r.params.rounds},           {"seed", r.params.seed},
        {"gamma_rule", r.params.gamma_rule == GammaRule::Corrected ? "corrected" : "paper-literal"},
    };
    j["initial"] = {{"vertices", r.initial_vertices}, {"edges", r.initial_edges}};
    j["operations"] = r.ops.size();
    j["init_ms"] = r.init_ms;
    j["builds"] = r.builds;
    j["mean_latency_us"] = r.mean_latency_us();
    j["median_latency_us"] = r.median_latency_us();
    j["mean_best_size"] = r.mean_best_size();
    j["mean_best_density"] = r.mean_best_density();
    j["solution_rate"] = r.solution_rate();
    j["peak_rss_kb_approx"] = r.peak_rss_kb;
    return j.dump(2);
}

std::vector<SweepResult> run_sweep(const DynamicGraph& initial, const OperationStream& stream, EngineKind engine,
                                   const EngineParams& base, const std::vector<double>& gammas,
                                   const std::vector<double>& bs, const std::vector<int>& ks,
                                   const std::vector<std::size_t>& batches, const std::vector<std::size_t>& capacities,
                                   std::size_t jobs) {
    const std::vector<double> gamma_axis = gammas.empty() ? std::vector<double>{base.detect.gamma} : gammas;
    const std::vector<double> b_axis = bs.empty() ? std::vector<double>{base.detect.b} : bs;
    const std::vector<int> k_axis = ks.empty() ? std::vector<int>{base.k} : ks;
    const std::vector<std::size_t> batch_axis = batches.empty() ? std::vector<std::size_t>{base.batch} : batches;
    const std::vector<std::size_t> cap_axis = capacities.empty() ? std::vector<std::size_t>{base.capacity} : capacities;

    std::vector<SweepResult> results;
    for (double gamma : gamma_axis) {
        for (double b : b_axis) {
            for (int k : k_axis) {
                for (std::size_t batch : batch_axis) {
                    for (std::size_t cap : cap_axis) {
                        SweepResult r;
                        r.point = {gamma, b, k, batch, cap};
                        results.push_back(std::move(r));
                    }
                }
            }
        }
    }

    auto work = [&](std::size_t i) {
        SweepResult& r = results[i];
        EngineParams p = base;
        p.detect.gamma = r.point.gamma;
        p.detect.b = r.point.b;
        p.k = r.point.k;
        p.batch = r.point.batch;
        p.capacity = r.point.capacity;
        std::string why;
        if (!p.valid(&why)) {
            r.ok = false;
            r.error = why;
            return;
        }
        try {
            r.report = run_benchmark(initial, stream, engine, p);
            r.ok = true;
        } catch (const std::exception& e) {
            r.ok = false;
            r.error = e.what();
        }
    };

    jobs = std::max<std::size_t>(1, std::min(jobs, results.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < results.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (std::size_t t = 0; t < jobs; ++t) {
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < results.size(); i = next.fetch_add(1)) work(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return results;
}

std::string sweep_csv(const std::vector<SweepResult>& results) {
    std::ostringstream out;
    out << "gamma,b,k,batch,B,ok,mean_latency_us,median_latency_us,mean_best_size,mean_best_density,"
           "solution_rate,builds,error\n";
    out << std::fixed;
    for (const auto& r : results) {
        out << std::setprecision(4) << r.point.gamma << ',' << r.point.b << ',' << r.point.k << ','
            << r.point.batch << ',' << r.point.capacity << ',' << (r.ok ? 1 : 0) << ',';
        if (r.ok) {
            out << std::setprecision(3) << r.report.mean_latency_us() << ',' << r.report.median_latency_us()
                << ',' << std::setprecision(4) << r.report.mean_best_size() << ','
                << r.report.mean_best_density() << ',' << r.report.solution_rate() << ',' << r.report.builds
                << ',';
        } else {
            out << ",,,,,,";
        }
        out << '"' << r.error << '"' << "\n";
    }
    return out.str();
}

} // namespace dqc
