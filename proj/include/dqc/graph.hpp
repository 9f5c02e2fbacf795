#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace dqc {

using VertexId = std::uint32_t;

// Sorted, duplicate-free set of vertex ids. Small enough in this codebase
// (neighborhoods, clique members) that a flat sorted vector wins.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> ids);

    bool contains(VertexId v) const;
    // Returns false if v was already present.
    bool insert(VertexId v);
    bool erase(VertexId v);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    void clear() { ids_.clear(); }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<VertexId>& ids() const { return ids_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.ids_ == b.ids_; }
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.ids_ < b.ids_; }

private:
    std::vector<VertexId> ids_;
};

std::size_t intersection_size(const VertexSet& a, const VertexSet& b);
std::size_t union_size(const VertexSet& a, const VertexSet& b);
// |A ∩ B| / |A ∪ B|; 1.0 when both sets are empty.
double exact_jaccard(const VertexSet& a, const VertexSet& b);

// Edge density |E(S)| / C(|S|,2); sets with fewer than two vertices have
// density 1.0 by convention so they are never rejected on density grounds.
double density_value(std::size_t internal_edges, std::size_t size);
// Canonical "density ≥ alpha" predicate. Every admission/eviction/repair
// decision in the codebase goes through this one comparison so float
// rounding cannot make two call sites disagree on the same set.
bool meets_density(std::size_t internal_edges, std::size_t size, double alpha);

enum class GammaRule {
    Corrected,    // exact: matches from-scratch recomputation after every op
    PaperLiteral, // crossing conditions verbatim; known to drift (kept for comparison)
};

// Undirected simple graph over a fixed vertex universe [0, n), with
// incrementally maintained γ-degrees (Def. of d_γ uses closed neighborhoods:
// |N(u)| = degree(u) + 1, and u itself always counts toward d_γ(u)).
class DynamicGraph {
public:
    explicit DynamicGraph(std::size_t n, double gamma = 0.9, GammaRule rule = GammaRule::Corrected);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    double gamma() const { return gamma_; }
    GammaRule gamma_rule() const { return rule_; }

    // Re-parameterize the γ-degree bookkeeping. Leaves the counters stale;
    // callers must follow with gamma_degree_init().
    void set_gamma(double gamma, GammaRule rule);

    bool has_edge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId u) const { return adj_[u].size(); }
    std::size_t closed_size(VertexId u) const { return adj_[u].size() + 1; }
    const std::unordered_set<VertexId>& neighbors(VertexId u) const { return adj_[u]; }
    VertexSet closed_neighborhood(VertexId u) const;

    // Both return false (and change nothing) when the edge is already
    // present / already absent. Self-loops and out-of-range ids throw.
    bool insert_edge(VertexId u, VertexId v);
    bool delete_edge(VertexId u, VertexId v);

    // |N(u) ∩ N(v)| over closed neighborhoods.
    std::size_t closed_intersection_size(VertexId u, VertexId v) const;

    std::size_t internal_edge_count(const VertexSet& s) const;
    double density(const VertexSet& s) const;

    // γ-degree maintenance. gamma_on_insert/gamma_on_delete assume the edge
    // mutation has already been applied to the adjacency.
    void gamma_degree_init();
    // Returns the sorted set of vertices whose d_γ increased.
    std::vector<VertexId> gamma_on_insert(VertexId u, VertexId v);
    void gamma_on_delete(VertexId u, VertexId v);

    std::int64_t gamma_degree(VertexId u) const { return gamma_degree_[u]; }
    std::int64_t gamma_degree_fresh(VertexId u) const; // from-scratch, for checks

    // closed_size(v) ≥ γ · closed_size(u): does v count toward d_γ(u)?
    bool meets_gamma(std::size_t closed_v, std::size_t closed_u) const {
        return static_cast<double>(closed_v) >= gamma_ * static_cast<double>(closed_u);
    }

private:
    void check_vertex(VertexId u) const;
    void literal_insert_update(VertexId u, VertexId v, std::vector<VertexId>& increased);
    void literal_delete_update(VertexId u, VertexId v);

    std::vector<std::unordered_set<VertexId>> adj_;
    std::vector<std::int64_t> gamma_degree_;
    std::size_t edge_count_ = 0;
    double gamma_;
    GammaRule rule_;
};

} // namespace dqc
