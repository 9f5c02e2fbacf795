#include "dqc/quasi_clique.hpp"

#include <array>
#include <limits>

namespace dqc {

QuasiClique::QuasiClique(VertexSet members, const DynamicGraph& g) : members_(std::move(members)) {
    degree_.reserve(members_.size());
    std::size_t twice = 0;
    for (VertexId w : members_) {
        std::size_t d = 0;
        const auto& nb = g.neighbors(w);
        if (nb.size() < members_.size()) {
            for (VertexId x : nb) d += members_.contains(x) ? 1 : 0;
        } else {
            for (VertexId x : members_) d += nb.count(x);
        }
        degree_[w] = d;
        twice += d;
    }
    internal_edges_ = twice / 2;
}

void QuasiClique::on_internal_insert(VertexId u, VertexId v) {
    ++internal_edges_;
    ++degree_[u];
    ++degree_[v];
}

void QuasiClique::on_internal_delete(VertexId u, VertexId v) {
    --internal_edges_;
    --degree_[u];
    --degree_[v];
}

void QuasiClique::remove_vertex(VertexId w, const DynamicGraph& g) {
    internal_edges_ -= degree_[w];
    for (VertexId x : members_) {
        if (x != w && g.has_edge(x, w)) --degree_[x];
    }
    degree_.erase(w);
    members_.erase(w);
}

bool QuasiClique::cache_consistent(const DynamicGraph& g) const {
    if (degree_.size() != members_.size()) return false;
    std::size_t twice = 0;
    for (VertexId w : members_) {
        auto it = degree_.find(w);
        if (it == degree_.end()) return false;
        std::size_t d = 0;
        for (VertexId x : members_) {
            if (x != w && g.has_edge(w, x)) ++d;
        }
        if (d != it->second) return false;
        twice += d;
    }
    return twice / 2 == internal_edges_;
}

int clique_delete_edge(QuasiClique& s, VertexId u, VertexId v, double alpha, const DynamicGraph& g) {
    if (!s.contains(u) || !s.contains(v)) return 0;
    s.on_internal_delete(u, v);
    if (meets_density(s.internal_edges(), s.size(), alpha)) return 0;

    // x, y: the two members of minimum in-clique degree after the loss,
    // ties to the smaller id.
    VertexId x = 0, y = 0;
    std::size_t dx = std::numeric_limits<std::size_t>::max();
    std::size_t dy = std::numeric_limits<std::size_t>::max();
    for (VertexId w : s.members()) {
        const std::size_t d = s.in_clique_degree(w);
        if (d < dx) {
            y = x;
            dy = dx;
            x = w;
            dx = d;
        } else if (d < dy) {
            y = w;
            dy = d;
        }
    }

    const std::size_t size = s.size();
    auto try_single = [&](VertexId w) {
        if (size - 1 < 2) return false;
        return meets_density(s.internal_edges() - s.in_clique_degree(w), size - 1, alpha);
    };
    const std::array<VertexId, 3> singles{u, v, x};
    for (std::size_t i = 0; i < singles.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j) seen = seen || singles[j] == singles[i];
        if (seen) continue;
        if (try_single(singles[i])) {
            s.remove_vertex(singles[i], g);
            return 1;
        }
    }

    auto try_pair = [&](VertexId z, VertexId w) {
        if (z == w || size - 2 < 2) return false;
        const std::size_t lost = s.in_clique_degree(z) + s.in_clique_degree(w) - (g.has_edge(z, w) ? 1 : 0);
        return meets_density(s.internal_edges() - lost, size - 2, alpha);
    };
    const std::array<VertexId, 4> cand{u, v, x, y};
    for (std::size_t i = 0; i < cand.size(); ++i) {
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            if (try_pair(cand[i], cand[j])) {
                s.remove_vertex(cand[i], g);
                s.remove_vertex(cand[j], g);
                return 2;
            }
        }
    }
    return 3;
}

} // namespace dqc
