#pragma once

#include <numeric>
#include <vector>

#include "dqc/graph.hpp"
#include "dqc/rng.hpp"

namespace testutil {

inline std::vector<dqc::VertexId> iota_ids(std::size_t n, dqc::VertexId start = 0) {
    std::vector<dqc::VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), start);
    return ids;
}

inline void connect_all(dqc::DynamicGraph& g, const std::vector<dqc::VertexId>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) g.insert_edge(ids[i], ids[j]);
    }
}

inline dqc::DynamicGraph complete(std::size_t n, double gamma = 0.9) {
    dqc::DynamicGraph g(n, gamma);
    connect_all(g, iota_ids(n));
    g.gamma_degree_init();
    return g;
}

inline dqc::DynamicGraph path_graph(std::size_t n, double gamma = 0.9) {
    dqc::DynamicGraph g(n, gamma);
    for (dqc::VertexId u = 0; u + 1 < n; ++u) g.insert_edge(u, u + 1);
    g.gamma_degree_init();
    return g;
}

// Star with center 0 and `leaves` leaves.
inline dqc::DynamicGraph star(std::size_t leaves, double gamma = 0.9) {
    dqc::DynamicGraph g(leaves + 1, gamma);
    for (dqc::VertexId leaf = 1; leaf <= leaves; ++leaf) g.insert_edge(0, leaf);
    g.gamma_degree_init();
    return g;
}

inline dqc::DynamicGraph er(std::size_t n, double p, std::uint64_t seed, double gamma = 0.9,
                            dqc::GammaRule rule = dqc::GammaRule::Corrected) {
    dqc::DynamicGraph g(n, gamma, rule);
    dqc::Rng rng(seed);
    for (dqc::VertexId u = 0; u < n; ++u) {
        for (dqc::VertexId v = u + 1; v < n; ++v) {
            if (rng.unit() < p) g.insert_edge(u, v);
        }
    }
    g.gamma_degree_init();
    return g;
}

// Incremental γ-degrees must match a from-scratch recomputation at every vertex.
inline bool gamma_degrees_fresh(const dqc::DynamicGraph& g) {
    for (dqc::VertexId u = 0; u < g.vertex_count(); ++u) {
        if (g.gamma_degree(u) != g.gamma_degree_fresh(u)) return false;
    }
    return true;
}

// One uniformly random mutation (fair coin between insert-a-non-edge and
// delete-an-edge, falling back to the other kind when a pool is empty),
// applied together with its incremental γ-degree update. Returns the pair.
inline std::pair<dqc::VertexId, dqc::VertexId> random_mutation(dqc::DynamicGraph& g, dqc::Rng& rng) {
    const std::size_t n = g.vertex_count();
    for (;;) {
        const auto u = static_cast<dqc::VertexId>(rng.bounded(n));
        const auto v = static_cast<dqc::VertexId>(rng.bounded(n));
        if (u == v) continue;
        const bool want_insert = rng.coin();
        if (want_insert == g.has_edge(u, v)) continue; // wrong pool; redraw
        if (want_insert) {
            g.insert_edge(u, v);
            g.gamma_on_insert(u, v);
        } else {
            g.delete_edge(u, v);
            g.gamma_on_delete(u, v);
        }
        return {u, v};
    }
}

inline dqc::VertexSet make_set(std::vector<dqc::VertexId> ids) { return dqc::VertexSet(std::move(ids)); }

} // namespace testutil
