#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dqc/graph.hpp"
#include "dqc/hash.hpp"

namespace dqc {

// All sketches order by (hash value, vertex id) so ties between distinct
// vertices are still a total order; "minimum hash" always means the minimum
// such pair.
using SketchEntry = std::pair<std::uint64_t, VertexId>;

// l-buffered k-MinHash: k independent hash slots, each keeping the l smallest
// (hash, id) pairs seen among the current members. A buffer may shrink below l
// after removals; its front stays the true slot minimum because everything
// outside the buffer hashes above the buffer's max. A buffer that empties
// while members remain is refilled by rescanning the member set.
class BufferedSignature {
public:
    BufferedSignature() = default;
    BufferedSignature(const HashScheme& scheme, int l) : slots_(static_cast<std::size_t>(scheme.k())), l_(l) {}

    template <typename Range>
    void init(const HashScheme& scheme, int l, const Range& members) {
        slots_.assign(static_cast<std::size_t>(scheme.k()), {});
        l_ = l;
        member_count_ = 0;
        for (VertexId w : members) {
            add(scheme, w);
        }
    }

    void add(const HashScheme& scheme, VertexId w);
    // Drops w's entries. Slots left empty are reported through `emptied`
    // (when non-null) so the owner can rebuild them via rebuild_slots.
    void remove(const HashScheme& scheme, VertexId w, std::vector<int>* emptied);

    template <typename Range>
    void rebuild_slots(const HashScheme& scheme, const std::vector<int>& slots, const Range& members) {
        for (int s : slots) {
            auto& buf = slots_[static_cast<std::size_t>(s)];
            buf.clear();
            for (VertexId w : members) insert_entry(buf, {scheme.hash(s, w), w});
        }
    }

    // Convenience for callers that have the member set at hand.
    template <typename Range>
    void remove_and_repair(const HashScheme& scheme, VertexId w, const Range& remaining) {
        std::vector<int> emptied;
        remove(scheme, w, &emptied);
        if (!emptied.empty() && member_count_ > 0) rebuild_slots(scheme, emptied, remaining);
    }

    std::optional<SketchEntry> slot_min(int slot) const {
        const auto& buf = slots_[static_cast<std::size_t>(slot)];
        if (buf.empty()) return std::nullopt;
        return buf.front();
    }

    int k() const { return static_cast<int>(slots_.size()); }
    int l() const { return l_; }
    std::size_t member_count() const { return member_count_; }
    const std::vector<SketchEntry>& slot(int i) const { return slots_[static_cast<std::size_t>(i)]; }

private:
    void insert_entry(std::vector<SketchEntry>& buf, SketchEntry e);

    std::vector<std::vector<SketchEntry>> slots_; // each sorted ascending, size ≤ l
    int l_ = 0;
    std::size_t member_count_ = 0;
};

// Bottom-k signature: the full ordered (hash, id) multiset of the members
// under the single global hash (slot 0). Add/remove are exact; queries walk
// the k smallest entries. Exact whenever k covers the union of the two sets.
class BottomKSignature {
public:
    BottomKSignature() = default;

    template <typename Range>
    void init(const HashScheme& scheme, const Range& members) {
        entries_.clear();
        for (VertexId w : members) entries_.insert({scheme.hash(0, w), w});
    }

    void add(const HashScheme& scheme, VertexId w) { entries_.insert({scheme.hash(0, w), w}); }
    void remove(const HashScheme& scheme, VertexId w) { entries_.erase({scheme.hash(0, w), w}); }

    std::size_t member_count() const { return entries_.size(); }
    const std::set<SketchEntry>& entries() const { return entries_; }

private:
    std::set<SketchEntry> entries_;
};

// σ̂ per Eq. (2): fraction of slots whose minima coincide.
double estimate_jaccard(const BufferedSignature& a, const BufferedSignature& b);
// σ̂ per Eq. (3): |S_k(A∪B) ∩ S_k(A) ∩ S_k(B)| over |S_k(A∪B)|. The
// denominator is min(k, |A∪B|), which coincides with k on Eq. (3)'s intended
// domain and keeps the estimate exact when k covers the whole union.
double estimate_jaccard(const BottomKSignature& a, const BottomKSignature& b, int k);

// Containment estimate t̂(u,v) from a Jaccard estimate, clamped to [0, 1]:
// (|N(u)|+|N(v)|)·σ̂ / (|N(u)|·(1+σ̂)).
double estimate_containment(std::size_t size_u, std::size_t size_v, double jaccard);

enum class Backend { Exact, BufferedMinHash, BottomK };

// Per-vertex signatures of closed neighborhoods for one graph, in the variant
// the backend asks for. Exact backend stores nothing.
class SignatureStore {
public:
    SignatureStore() = default;
    SignatureStore(Backend backend, std::uint64_t master_seed, int k, int l);

    Backend backend() const { return backend_; }
    const HashScheme& scheme() const { return scheme_; }

    void init_all(const DynamicGraph& g);
    // Both expect the edge mutation to already be applied to the graph.
    void on_edge_insert(const DynamicGraph& g, VertexId u, VertexId v);
    void on_edge_delete(const DynamicGraph& g, VertexId u, VertexId v);

    double jaccard(VertexId u, VertexId v) const;

private:
    Backend backend_ = Backend::Exact;
    HashScheme scheme_;
    int k_ = 0;
    int l_ = 0;
    std::vector<BufferedSignature> buffered_;
    std::vector<BottomKSignature> bottomk_;
};

} // namespace dqc
