#include "dqc/sketch.hpp"

#include <algorithm>
#include <stdexcept>

namespace dqc {

void BufferedSignature::insert_entry(std::vector<SketchEntry>& buf, SketchEntry e) {
    auto it = std::lower_bound(buf.begin(), buf.end(), e);
    buf.insert(it, e);
    if (static_cast<int>(buf.size()) > l_) buf.pop_back();
}

void BufferedSignature::add(const HashScheme& scheme, VertexId w) {
    for (int s = 0; s < k(); ++s) {
        auto& buf = slots_[static_cast<std::size_t>(s)];
        const SketchEntry e{scheme.hash(s, w), w};
        if (buf.size() == member_count_) {
            // Buffer still holds every member's hash: grow unconditionally.
            insert_entry(buf, e);
        } else if (!buf.empty() && e < buf.back()) {
            // Entries outside the buffer all hash above buf.back(), so only a
            // value below the max may enter; anything else would break that.
            insert_entry(buf, e);
        }
    }
    ++member_count_;
}

void BufferedSignature::remove(const HashScheme& scheme, VertexId w, std::vector<int>* emptied) {
    for (int s = 0; s < k(); ++s) {
        auto& buf = slots_[static_cast<std::size_t>(s)];
        const SketchEntry e{scheme.hash(s, w), w};
        auto it = std::lower_bound(buf.begin(), buf.end(), e);
        if (it != buf.end() && *it == e) {
            buf.erase(it);
            if (buf.empty() && emptied != nullptr) emptied->push_back(s);
        }
    }
    if (member_count_ > 0) --member_count_;
}

double estimate_jaccard(const BufferedSignature& a, const BufferedSignature& b) {
    if (a.k() != b.k()) throw std::invalid_argument("signatures built with different k");
    if (a.member_count() == 0 || b.member_count() == 0) {
        return (a.member_count() == 0 && b.member_count() == 0) ? 1.0 : 0.0;
    }
    int agree = 0;
    for (int s = 0; s < a.k(); ++s) {
        const auto ma = a.slot_min(s);
        const auto mb = b.slot_min(s);
        if (ma && mb && *ma == *mb) ++agree;
    }
    return static_cast<double>(agree) / static_cast<double>(a.k());
}

double estimate_jaccard(const BottomKSignature& a, const BottomKSignature& b, int k) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    if (a.member_count() == 0 || b.member_count() == 0) {
        return (a.member_count() == 0 && b.member_count() == 0) ? 1.0 : 0.0;
    }
    // Merge the two ordered stores, walking at most k distinct union entries.
    // A union entry contributes iff it sits in both sets; since at most k
    // entries are consumed from either side, everything walked lies inside
    // both k-prefixes automatically.
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    int walked = 0;
    int shared = 0;
    while (walked < k && (ia != a.entries().end() || ib != b.entries().end())) {
        if (ib == b.entries().end() || (ia != a.entries().end() && *ia < *ib)) {
            ++ia;
        } else if (ia == a.entries().end() || *ib < *ia) {
            ++ib;
        } else {
            ++shared;
            ++ia;
            ++ib;
        }
        ++walked;
    }
    return static_cast<double>(shared) / static_cast<double>(walked);
}

double estimate_containment(std::size_t size_u, std::size_t size_v, double jaccard) {
    if (size_u == 0) return 0.0;
    const double t = (static_cast<double>(size_u) + static_cast<double>(size_v)) * jaccard /
                     (static_cast<double>(size_u) * (1.0 + jaccard));
    return std::clamp(t, 0.0, 1.0);
}

SignatureStore::SignatureStore(Backend backend, std::uint64_t master_seed, int k, int l)
    : backend_(backend), scheme_(master_seed, k), k_(k), l_(l) {}

void SignatureStore::init_all(const DynamicGraph& g) {
    const std::size_t n = g.vertex_count();
    if (backend_ == Backend::BufferedMinHash) {
        buffered_.assign(n, BufferedSignature(scheme_, l_));
        for (VertexId u = 0; u < n; ++u) {
            buffered_[u].init(scheme_, l_, g.closed_neighborhood(u));
        }
    } else if (backend_ == Backend::BottomK) {
        bottomk_.assign(n, BottomKSignature());
        for (VertexId u = 0; u < n; ++u) {
            bottomk_[u].init(scheme_, g.closed_neighborhood(u));
        }
    }
}

void SignatureStore::on_edge_insert(const DynamicGraph&, VertexId u, VertexId v) {
    if (backend_ == Backend::BufferedMinHash) {
        buffered_[u].add(scheme_, v);
        buffered_[v].add(scheme_, u);
    } else if (backend_ == Backend::BottomK) {
        bottomk_[u].add(scheme_, v);
        bottomk_[v].add(scheme_, u);
    }
}

void SignatureStore::on_edge_delete(const DynamicGraph& g, VertexId u, VertexId v) {
    if (backend_ == Backend::BufferedMinHash) {
        std::vector<int> emptied;
        buffered_[u].remove(scheme_, v, &emptied);
        if (!emptied.empty() && buffered_[u].member_count() > 0) {
            buffered_[u].rebuild_slots(scheme_, emptied, g.closed_neighborhood(u));
        }
        emptied.clear();
        buffered_[v].remove(scheme_, u, &emptied);
        if (!emptied.empty() && buffered_[v].member_count() > 0) {
            buffered_[v].rebuild_slots(scheme_, emptied, g.closed_neighborhood(v));
        }
    } else if (backend_ == Backend::BottomK) {
        bottomk_[u].remove(scheme_, v);
        bottomk_[v].remove(scheme_, u);
    }
}

double SignatureStore::jaccard(VertexId u, VertexId v) const {
    switch (backend_) {
    case Backend::BufferedMinHash:
        return estimate_jaccard(buffered_[u], buffered_[v]);
    case Backend::BottomK:
        return estimate_jaccard(bottomk_[u], bottomk_[v], k_);
    case Backend::Exact:
    default:
        throw std::logic_error("exact backend keeps no signatures");
    }
}

} // namespace dqc
