#pragma once

#include <optional>
#include <set>

#include "dqc/dmi.hpp"

namespace dqc {

// Neighbor-search baseline: caches detect's output per center vertex, keeps
// the α-feasible centers in an ordered index (size descending, id ascending),
// and lazily revalidates the top entries on extraction. Only a mutated edge's
// endpoints are re-detected per operation.
class NsfEngine {
public:
    NsfEngine(DynamicGraph graph, const EngineParams& params);

    // Each call counts as one operation toward the rebuild cadence. A
    // duplicate insert / absent delete leaves the graph untouched but still
    // re-detects the endpoints, per the maintenance routine.
    std::optional<VertexSet> add_edge(VertexId u, VertexId v);
    std::optional<VertexSet> delete_edge(VertexId u, VertexId v);

    // Up to `rounds` pop/revalidate/reinsert steps; returns the best fresh
    // clique seen, stopping early once a revalidated top confirms its indexed
    // size. Mutates the cached state (that is the point).
    std::optional<VertexSet> extract(int rounds);

    const DynamicGraph& graph() const { return g_; }
    const EngineParams& params() const { return params_; }
    std::size_t rebuild_count() const { return rebuild_count_; }
    const VertexSet& cached_clique(VertexId u) const { return clique_of_[u]; }
    bool indexed(VertexId u) const;

    void build();

private:
    struct IndexKey {
        std::size_t size;
        VertexId center;
        bool operator<(const IndexKey& o) const {
            if (size != o.size) return size > o.size; // larger first
            return center < o.center;
        }
    };

    void redetect(VertexId u);
    std::optional<VertexSet> top_cached() const;

    DynamicGraph g_;
    EngineParams params_;
    SignatureStore sigs_;
    std::vector<VertexSet> clique_of_;
    std::set<IndexKey> index_;
    std::size_t ops_since_rebuild_ = 0;
    std::size_t rebuild_count_ = 0;
};

} // namespace dqc
