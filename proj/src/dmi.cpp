#include "dqc/dmi.hpp"

#include <algorithm>
#include <numeric>

namespace dqc {

bool EngineParams::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why != nullptr) *why = msg;
        return false;
    };
    if (!detect.valid(why)) return false;
    if (!(r_tol > 0.0 && r_tol <= 1.0)) return fail("r_tol must lie in (0, 1]");
    if (capacity < 1) return fail("B must be at least 1");
    if (batch < 1) return fail("Batch must be at least 1");
    if (k < 1) return fail("k must be at least 1");
    if (l < 1) return fail("l must be at least 1");
    if (rounds < 1) return fail("R must be at least 1");
    return true;
}

DmiEngine::DmiEngine(DynamicGraph graph, const EngineParams& params)
    : g_(std::move(graph)), params_(params), sigs_(params.backend, params.seed, params.k, params.l) {
    std::string why;
    if (!params_.valid(&why)) throw std::invalid_argument(why);
    // One γ governs both the containment threshold and the d_γ bookkeeping;
    // the engine's configuration wins over whatever the graph was built with.
    g_.set_gamma(params_.detect.gamma, params_.gamma_rule);
    build();
}

std::size_t DmiEngine::smallest_tracked_size() const {
    std::size_t m = list_.empty() ? 0 : list_.front().size();
    for (const auto& s : list_) m = std::min(m, s.size());
    return m;
}

void DmiEngine::add_clique(VertexSet c) {
    if (c.size() < 2) return;
    const std::size_t edges = g_.internal_edge_count(c);
    if (!meets_density(edges, c.size(), params_.detect.alpha)) return;

    // S_r: smallest tracked candidate too similar to C (ties: earliest);
    // S_min: smallest tracked candidate overall.
    std::size_t similar = list_.size(), smallest = list_.size();
    for (std::size_t i = 0; i < list_.size(); ++i) {
        const std::size_t sz = list_[i].size();
        if (exact_jaccard(list_[i].members(), c) > params_.r_tol &&
            (similar == list_.size() || sz < list_[similar].size())) {
            similar = i;
        }
        if (smallest == list_.size() || sz < list_[smallest].size()) smallest = i;
    }

    if (similar != list_.size()) {
        // A near-duplicate is already tracked: replace it only with a strictly
        // larger candidate, otherwise drop C — this is what keeps L's members
        // pairwise dissimilar.
        if (c.size() > list_[similar].size()) list_[similar] = QuasiClique(std::move(c), g_);
        return;
    }
    if (list_.size() < params_.capacity) {
        list_.emplace_back(std::move(c), g_);
        return;
    }
    if (c.size() > list_[smallest].size()) list_[smallest] = QuasiClique(std::move(c), g_);
}

void DmiEngine::build() {
    g_.gamma_degree_init();
    sigs_.init_all(g_);
    list_.clear();
    const SignatureStore* sp = params_.backend == Backend::Exact ? nullptr : &sigs_;

    std::vector<VertexId> order(g_.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (g_.gamma_degree(a) != g_.gamma_degree(b)) return g_.gamma_degree(a) > g_.gamma_degree(b);
        return a < b;
    });

    for (VertexId u : order) {
        const bool list_full = list_.size() >= params_.capacity;
        if ((!params_.halt_requires_full_list || list_full) &&
            g_.gamma_degree(u) < static_cast<std::int64_t>(smallest_tracked_size())) {
            break;
        }
        add_clique(detect(g_, u, params_.detect, sp));
    }
    ++rebuild_count_;
    ops_since_rebuild_ = 0;
}

bool DmiEngine::add_edge(VertexId u, VertexId v) {
    if (!g_.insert_edge(u, v)) return false;
    ++ops_since_rebuild_;
    if (ops_since_rebuild_ >= params_.batch) {
        build();
        return true;
    }
    // Tracked candidates containing both endpoints gain the edge first, so
    // the counters are current before any candidate admitted below computes
    // its own caches from the updated graph.
    for (auto& s : list_) {
        if (s.contains(u) && s.contains(v)) s.on_internal_insert(u, v);
    }
    if (params_.backend != Backend::Exact) sigs_.on_edge_insert(g_, u, v);
    const std::vector<VertexId> increased = g_.gamma_on_insert(u, v);
    const SignatureStore* sp = params_.backend == Backend::Exact ? nullptr : &sigs_;
    for (VertexId w : increased) {
        if (g_.gamma_degree(w) >= static_cast<std::int64_t>(smallest_tracked_size())) {
            add_clique(detect(g_, w, params_.detect, sp));
        }
    }
    return true;
}

bool DmiEngine::delete_edge(VertexId u, VertexId v) {
    if (!g_.delete_edge(u, v)) return false;
    ++ops_since_rebuild_;
    if (ops_since_rebuild_ >= params_.batch) {
        build();
        return true;
    }
    if (params_.backend != Backend::Exact) sigs_.on_edge_delete(g_, u, v);
    g_.gamma_on_delete(u, v);
    for (auto it = list_.begin(); it != list_.end();) {
        if (clique_delete_edge(*it, u, v, params_.detect.alpha, g_) == 3) {
            it = list_.erase(it);
        } else {
            ++it;
        }
    }
    if (list_.empty()) build();
    return true;
}

const QuasiClique* DmiEngine::query_best() const {
    const QuasiClique* best = nullptr;
    for (const auto& s : list_) {
        if (best == nullptr) {
            best = &s;
            continue;
        }
        if (s.size() != best->size()) {
            if (s.size() > best->size()) best = &s;
        } else if (s.density() != best->density()) {
            if (s.density() > best->density()) best = &s;
        } else if (s.members() < best->members()) {
            best = &s;
        }
    }
    return best;
}

} // namespace dqc
