#pragma once

#include <unordered_map>

#include "dqc/graph.hpp"

namespace dqc {

// A tracked candidate: member set plus cached |E(S)| and open in-clique
// degrees d_S(w) = |neighbors(w) ∩ S|, kept consistent with the graph across
// every maintenance path.
class QuasiClique {
public:
    QuasiClique() = default;
    QuasiClique(VertexSet members, const DynamicGraph& g);

    const VertexSet& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::size_t internal_edges() const { return internal_edges_; }
    double density() const { return density_value(internal_edges_, members_.size()); }
    bool contains(VertexId w) const { return members_.contains(w); }
    std::size_t in_clique_degree(VertexId w) const { return degree_.at(w); }

    // Both endpoints must be members; adjusts the caches for an edge that was
    // just inserted into / deleted from the graph between them.
    void on_internal_insert(VertexId u, VertexId v);
    void on_internal_delete(VertexId u, VertexId v);

    // Drops w, fixing the caches via the graph's adjacency.
    void remove_vertex(VertexId w, const DynamicGraph& g);

    bool cache_consistent(const DynamicGraph& g) const;

private:
    VertexSet members_;
    std::size_t internal_edges_ = 0;
    std::unordered_map<VertexId, std::size_t> degree_;
};

// Alg. 5: repair S after losing edge (u,v) (already removed from g, caches in
// S still counting it). Returns the number of vertices removed — 0 when the
// edge was outside S or density survives, 1/2 after a successful greedy
// repair, 3 when S should be evicted. Caches stay consistent on every path.
// Repairs that would shrink S below two vertices are not attempted.
int clique_delete_edge(QuasiClique& s, VertexId u, VertexId v, double alpha, const DynamicGraph& g);

} // namespace dqc
