#include "dqc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace dqc {

namespace {

std::vector<VertexId> mask_to_ids(std::uint32_t mask) {
    std::vector<VertexId> ids;
    while (mask != 0) {
        const int b = std::countr_zero(mask);
        ids.push_back(static_cast<VertexId>(b));
        mask &= mask - 1;
    }
    return ids;
}

} // namespace

VertexSet max_quasi_clique_exact(const DynamicGraph& g, double alpha) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("exact oracle capped at 20 vertices");
    if (n == 0) return VertexSet{};

    std::vector<std::uint32_t> adj(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.neighbors(u)) adj[u] |= std::uint32_t{1} << v;
    }
    std::vector<std::size_t> degrees(n);
    for (VertexId u = 0; u < n; ++u) degrees[u] = g.degree(u);
    std::sort(degrees.rbegin(), degrees.rend());

    auto edges_in = [&](std::uint32_t mask) {
        std::size_t twice = 0;
        std::uint32_t rest = mask;
        while (rest != 0) {
            const int b = std::countr_zero(rest);
            twice += static_cast<std::size_t>(std::popcount(adj[static_cast<std::size_t>(b)] & mask));
            rest &= rest - 1;
        }
        return twice / 2;
    };

    // Size-descending: the first feasible size wins; within it keep the
    // lexicographically smallest member list.
    for (std::size_t s = n; s >= 2; --s) {
        // A size-s hit needs Σ min(d(v), s−1) over its members ≥ 2α·C(s,2);
        // the s largest degrees bound that from above.
        double cap = 0.0;
        for (std::size_t i = 0; i < s; ++i) cap += static_cast<double>(std::min(degrees[i], s - 1));
        if (cap < 2.0 * alpha * 0.5 * static_cast<double>(s) * static_cast<double>(s - 1)) continue;

        bool found = false;
        std::vector<VertexId> best;
        // Gosper's hack over all s-subsets of [0, n).
        std::uint32_t mask = (std::uint32_t{1} << s) - 1;
        const std::uint32_t limit = n == 32 ? 0 : (std::uint32_t{1} << n);
        while (mask < limit) {
            if (meets_density(edges_in(mask), s, alpha)) {
                auto ids = mask_to_ids(mask);
                if (!found || std::lexicographical_compare(ids.begin(), ids.end(), best.begin(), best.end())) {
                    best = std::move(ids);
                    found = true;
                }
            }
            const std::uint32_t c = mask & (~mask + 1);
            const std::uint32_t r = mask + c;
            if (r == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if (found) return VertexSet(std::move(best));
    }
    return VertexSet{};
}

int min_repair_exact(const VertexSet& s, const DynamicGraph& g, double alpha) {
    if (s.size() > 15) throw std::invalid_argument("repair oracle capped at 15 members");
    const std::vector<VertexId>& ids = s.ids();
    const std::size_t m = ids.size();

    const std::size_t edges = g.internal_edge_count(s);
    if (meets_density(edges, m, alpha)) return 0;

    std::vector<std::size_t> deg(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && g.has_edge(ids[i], ids[j])) ++deg[i];
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (meets_density(edges - deg[i], m - 1, alpha)) return 1;
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::size_t lost = deg[i] + deg[j] - (g.has_edge(ids[i], ids[j]) ? 1 : 0);
            if (meets_density(edges - lost, m - 2, alpha)) return 2;
        }
    }
    return 3;
}

bool verify_list(const std::vector<QuasiClique>& list, const DynamicGraph& g, double alpha) {
    for (const QuasiClique& s : list) {
        if (s.size() < 2) return false;
        if (!meets_density(s.internal_edges(), s.size(), alpha)) return false;
        if (!s.cache_consistent(g)) return false;
    }
    return true;
}

} // namespace dqc
