#include "dqc/nsf.hpp"

#include <stdexcept>

namespace dqc {

NsfEngine::NsfEngine(DynamicGraph graph, const EngineParams& params)
    : g_(std::move(graph)), params_(params), sigs_(params.backend, params.seed, params.k, params.l) {
    std::string why;
    if (!params_.valid(&why)) throw std::invalid_argument(why);
    g_.set_gamma(params_.detect.gamma, params_.gamma_rule); // keep graph() coherent with the config
    build();
}

bool NsfEngine::indexed(VertexId u) const {
    return index_.count(IndexKey{clique_of_[u].size(), u}) != 0;
}

void NsfEngine::build() {
    sigs_.init_all(g_);
    clique_of_.assign(g_.vertex_count(), VertexSet{});
    index_.clear();
    for (VertexId u = 0; u < g_.vertex_count(); ++u) redetect(u);
    ++rebuild_count_;
    ops_since_rebuild_ = 0;
}

// Refresh center u: drop its index entry, re-run detect, index the result
// when it is a usable α-quasi-clique.
void NsfEngine::redetect(VertexId u) {
    index_.erase(IndexKey{clique_of_[u].size(), u});
    const SignatureStore* sp = params_.backend == Backend::Exact ? nullptr : &sigs_;
    clique_of_[u] = detect(g_, u, params_.detect, sp);
    const VertexSet& c = clique_of_[u];
    if (c.size() >= 2 && meets_density(g_.internal_edge_count(c), c.size(), params_.detect.alpha)) {
        index_.insert(IndexKey{c.size(), u});
    }
}

std::optional<VertexSet> NsfEngine::top_cached() const {
    if (index_.empty()) return std::nullopt;
    return clique_of_[index_.begin()->center];
}

std::optional<VertexSet> NsfEngine::add_edge(VertexId u, VertexId v) {
    const bool applied = g_.insert_edge(u, v);
    ++ops_since_rebuild_;
    if (ops_since_rebuild_ >= params_.batch) {
        build();
        return top_cached();
    }
    if (applied && params_.backend != Backend::Exact) sigs_.on_edge_insert(g_, u, v);
    redetect(u);
    redetect(v);
    return extract(params_.rounds);
}

std::optional<VertexSet> NsfEngine::delete_edge(VertexId u, VertexId v) {
    const bool applied = g_.delete_edge(u, v);
    ++ops_since_rebuild_;
    if (ops_since_rebuild_ >= params_.batch) {
        build();
        return top_cached();
    }
    if (applied && params_.backend != Backend::Exact) sigs_.on_edge_delete(g_, u, v);
    redetect(u);
    redetect(v);
    return extract(params_.rounds);
}

std::optional<VertexSet> NsfEngine::extract(int rounds) {
    std::optional<VertexSet> best;
    for (int i = 0; i < rounds && !index_.empty(); ++i) {
        const IndexKey top = *index_.begin();
        redetect(top.center); // erases the stale entry, may reinsert a fresh one
        const VertexSet& fresh = clique_of_[top.center];
        if (!indexed(top.center)) continue; // fell below α or shrank away: discarded
        if (!best || fresh.size() > best->size()) best = fresh;
        if (fresh.size() >= top.size) break; // cache was honest, nothing bigger remains
    }
    return best;
}

} // namespace dqc
