#include "dqc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dqc {

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::insert(VertexId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) return false;
    ids_.insert(it, v);
    return true;
}

bool VertexSet::erase(VertexId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return false;
    ids_.erase(it);
    return true;
}

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    std::size_t count = 0;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

std::size_t union_size(const VertexSet& a, const VertexSet& b) {
    return a.size() + b.size() - intersection_size(a, b);
}

double exact_jaccard(const VertexSet& a, const VertexSet& b) {
    if (a.empty() && b.empty()) return 1.0;
    const std::size_t inter = intersection_size(a, b);
    const std::size_t uni = a.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

double density_value(std::size_t internal_edges, std::size_t size) {
    if (size < 2) return 1.0;
    const double pairs = 0.5 * static_cast<double>(size) * static_cast<double>(size - 1);
    return static_cast<double>(internal_edges) / pairs;
}

bool meets_density(std::size_t internal_edges, std::size_t size, double alpha) {
    if (size < 2) return true;
    const double pairs = 0.5 * static_cast<double>(size) * static_cast<double>(size - 1);
    return static_cast<double>(internal_edges) >= alpha * pairs;
}

DynamicGraph::DynamicGraph(std::size_t n, double gamma, GammaRule rule)
    : adj_(n), gamma_degree_(n, 0), gamma_(gamma), rule_(rule) {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma outside [0,1]");
    gamma_degree_init();
}

void DynamicGraph::set_gamma(double gamma, GammaRule rule) {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma outside [0,1]");
    gamma_ = gamma;
    rule_ = rule;
}

void DynamicGraph::check_vertex(VertexId u) const {
    if (u >= adj_.size()) throw std::out_of_range("vertex id outside the universe");
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
    return adj_[u].count(v) != 0;
}

VertexSet DynamicGraph::closed_neighborhood(VertexId u) const {
    check_vertex(u);
    std::vector<VertexId> ids;
    ids.reserve(adj_[u].size() + 1);
    ids.assign(adj_[u].begin(), adj_[u].end());
    ids.push_back(u);
    return VertexSet(std::move(ids));
}

bool DynamicGraph::insert_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (!adj_[u].insert(v).second) return false;
    adj_[v].insert(u);
    ++edge_count_;
    return true;
}

bool DynamicGraph::delete_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[u].erase(v) == 0) return false;
    adj_[v].erase(u);
    --edge_count_;
    return true;
}

std::size_t DynamicGraph::closed_intersection_size(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return closed_size(u);
    // Walk the smaller closed set, membership-test against the larger.
    if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
    std::size_t count = 0;
    for (VertexId w : adj_[u]) {
        if (w == v || adj_[v].count(w) != 0) ++count;
    }
    // u itself: u ∈ N(v) iff u-v adjacent.
    if (adj_[v].count(u) != 0) ++count;
    return count;
}

std::size_t DynamicGraph::internal_edge_count(const VertexSet& s) const {
    std::size_t twice = 0;
    for (VertexId w : s) {
        check_vertex(w);
        const auto& nb = adj_[w];
        if (nb.size() < s.size()) {
            for (VertexId x : nb) twice += s.contains(x) ? 1 : 0;
        } else {
            for (VertexId x : s) twice += nb.count(x);
        }
    }
    return twice / 2;
}

double DynamicGraph::density(const VertexSet& s) const {
    return density_value(internal_edge_count(s), s.size());
}

std::int64_t DynamicGraph::gamma_degree_fresh(VertexId u) const {
    check_vertex(u);
    const std::size_t cu = closed_size(u);
    std::int64_t d = meets_gamma(cu, cu) ? 1 : 0; // u counts itself (always holds for γ ≤ 1)
    for (VertexId v : adj_[u]) {
        if (meets_gamma(closed_size(v), cu)) ++d;
    }
    return d;
}

void DynamicGraph::gamma_degree_init() {
    for (VertexId u = 0; u < adj_.size(); ++u) gamma_degree_[u] = gamma_degree_fresh(u);
}

// Literal Alg. 3 lines 7-9: for x ∈ {u,v}, w ∈ N(x) (closed, so w = x included),
// increment d_γ(w) when x now meets w's threshold and either just crossed it or
// is the freshly attached endpoint.
void DynamicGraph::literal_insert_update(VertexId u, VertexId v, std::vector<VertexId>& increased) {
    const VertexId ends[2] = {u, v};
    for (VertexId x : ends) {
        const std::size_t cx = closed_size(x);
        auto visit = [&](VertexId w) {
            const std::size_t cw = closed_size(w);
            const bool is_new_endpoint = (x == u && w == v) || (x == v && w == u);
            if (meets_gamma(cx, cw) && (!meets_gamma(cx - 1, cw) || is_new_endpoint)) {
                ++gamma_degree_[w];
                increased.push_back(w);
            }
        };
        for (VertexId w : adj_[x]) visit(w);
        visit(x);
    }
}

// Literal Alg. 4 lines 6-8: decrement d_γ(w) when x just dropped below w's
// threshold. Misses the vanished endpoint and the endpoints' own threshold
// shift; kept verbatim for comparison runs.
void DynamicGraph::literal_delete_update(VertexId u, VertexId v) {
    const VertexId ends[2] = {u, v};
    for (VertexId x : ends) {
        const std::size_t cx = closed_size(x);
        auto visit = [&](VertexId w) {
            const std::size_t cw = closed_size(w);
            if (!meets_gamma(cx, cw) && meets_gamma(cx + 1, cw)) --gamma_degree_[w];
        };
        for (VertexId w : adj_[x]) visit(w);
        visit(x);
    }
}

std::vector<VertexId> DynamicGraph::gamma_on_insert(VertexId u, VertexId v) {
    std::vector<VertexId> increased;
    if (rule_ == GammaRule::PaperLiteral) {
        literal_insert_update(u, v, increased);
    } else {
        // Non-endpoints: only the sizes of u and v changed among their members,
        // each by +1, so the single-crossing delta is exact.
        const VertexId ends[2] = {u, v};
        for (VertexId x : ends) {
            const std::size_t cx = closed_size(x);
            for (VertexId w : adj_[x]) {
                if (w == u || w == v) continue;
                const std::size_t cw = closed_size(w);
                if (meets_gamma(cx, cw) && !meets_gamma(cx - 1, cw)) {
                    ++gamma_degree_[w];
                    increased.push_back(w);
                }
            }
        }
        // Endpoints: their own threshold γ|N(x)| moved as well, so members can
        // leave (and the new neighbor arrive) in the same step; a rescan is the
        // only rule exact against recomputation, and costs the same O(d(x)).
        for (VertexId x : ends) {
            const std::int64_t fresh = gamma_degree_fresh(x);
            if (fresh > gamma_degree_[x]) increased.push_back(x);
            gamma_degree_[x] = fresh;
        }
    }
    std::sort(increased.begin(), increased.end());
    increased.erase(std::unique(increased.begin(), increased.end()), increased.end());
    return increased;
}

void DynamicGraph::gamma_on_delete(VertexId u, VertexId v) {
    if (rule_ == GammaRule::PaperLiteral) {
        literal_delete_update(u, v);
        return;
    }
    const VertexId ends[2] = {u, v};
    for (VertexId x : ends) {
        const std::size_t cx = closed_size(x);
        for (VertexId w : adj_[x]) {
            if (w == u || w == v) continue;
            const std::size_t cw = closed_size(w);
            if (!meets_gamma(cx, cw) && meets_gamma(cx + 1, cw)) --gamma_degree_[w];
        }
    }
    for (VertexId x : ends) gamma_degree_[x] = gamma_degree_fresh(x);
}

} // namespace dqc
