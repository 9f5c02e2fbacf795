#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqc/detect.hpp"
#include "dqc/graph.hpp"
#include "dqc/quasi_clique.hpp"
#include "dqc/sketch.hpp"

namespace dqc {

struct EngineParams {
    DetectParams detect{};      // gamma, b, alpha
    double r_tol = 0.6;         // similarity ceiling between stored candidates
    std::size_t capacity = 5;   // B: max tracked candidates
    std::size_t batch = 5000;   // full rebuild cadence (operations since last rebuild)
    int k = 8;                  // sketch slots / bottom-k prefix
    int l = 8;                  // buffer depth (buffered variant)
    int rounds = 20;            // R: extraction rounds (neighbor-search engine)
    Backend backend = Backend::BottomK;
    std::uint64_t seed = 42;
    GammaRule gamma_rule = GammaRule::Corrected;
    bool halt_requires_full_list = false; // alternative Build halt: only once |L| = B

    bool valid(std::string* why = nullptr) const;
};

// Dynamic MinHash incremental engine: keeps a bounded list L of high-quality
// α-quasi-cliques current across edge insertions/deletions, rebuilding from
// scratch every `batch` operations and whenever deletions exhaust L.
class DmiEngine {
public:
    DmiEngine(DynamicGraph graph, const EngineParams& params);

    // Return false (leaving all state untouched) for duplicate inserts /
    // absent deletes. Self-loops and out-of-range ids throw.
    bool add_edge(VertexId u, VertexId v);
    bool delete_edge(VertexId u, VertexId v);

    // Largest candidate; ties by higher density, then lexicographically
    // smallest member list. Null when L is empty.
    const QuasiClique* query_best() const;

    const std::vector<QuasiClique>& candidates() const { return list_; }
    const DynamicGraph& graph() const { return g_; }
    const EngineParams& params() const { return params_; }
    std::size_t rebuild_count() const { return rebuild_count_; }
    std::size_t ops_since_rebuild() const { return ops_since_rebuild_; }

    // Full rebuild (Alg. 2): recompute γ-degrees and signatures, reset L, then
    // try vertices in descending d_γ order until the halt rule fires.
    void build();

private:
    void add_clique(VertexSet c);
    std::size_t smallest_tracked_size() const; // 0 when L is empty

    DynamicGraph g_;
    EngineParams params_;
    SignatureStore sigs_;
    std::vector<QuasiClique> list_;
    std::size_t ops_since_rebuild_ = 0;
    std::size_t rebuild_count_ = 0;
};

} // namespace dqc
