#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dqc/graph.hpp"

namespace dqc {

enum class OpKind : char { Insert = '+', Delete = '-' };

struct Operation {
    OpKind kind;
    VertexId u, v;
    friend bool operator==(const Operation&, const Operation&) = default;
};

struct OperationStream {
    std::vector<Operation> ops;
    std::size_t declared_q = 0;
    std::uint64_t seed = 0;
    std::string flavor;
    std::vector<std::size_t> lines; // 1-based source line per op when parsed from a file; empty when generated
};

// --- generators (all replay-valid against the given initial graph) ---------

// Fair coin per step: insert a uniform non-edge / delete a uniform edge; when
// the chosen pool is empty the other kind is used.
OperationStream gen_random(const DynamicGraph& g, std::size_t q, std::uint64_t seed);
// q distinct uniform non-edges (inserts only). Truncates to the pool size.
OperationStream gen_incremental(const DynamicGraph& g, std::size_t q, std::uint64_t seed);
// q distinct uniform existing edges (deletes only). Truncates to the pool size.
OperationStream gen_decremental(const DynamicGraph& g, std::size_t q, std::uint64_t seed);

struct TemporalEvent {
    VertexId u, v;
    std::int64_t start;
    std::optional<std::int64_t> end;
};

struct TemporalWorkload {
    DynamicGraph initial;
    OperationStream stream;
};

// Interval events → insert/delete stream. Edges alive at time 0 (start ≤ 0 <
// end) form the initial graph; overlapping windows on one pair coalesce via a
// live counter; ties in time keep input order. `draw_missing_ends`: absent
// ends are drawn start + Uniform(1, horizon − start) ("temp"); otherwise end
// events are dropped entirely and the stream is insert-only ("tinc").
TemporalWorkload from_temporal(const std::vector<TemporalEvent>& events, std::size_t n, std::size_t q,
                               std::uint64_t seed, bool draw_missing_ends, double gamma = 0.9,
                               GammaRule rule = GammaRule::Corrected);

// --- stream file format -----------------------------------------------------
// Header "%q <count> %seed <seed> %flavor <tag>", then one op per line:
// "+ u v" or "- u v". '#' starts a comment.

std::string serialize_stream(const OperationStream& s);
OperationStream parse_stream(std::istream& in);
OperationStream load_stream(const std::string& path);
void save_stream(const OperationStream& s, const std::string& path);

// Applies the stream to a copy of g; returns the 0-based index of the first
// colliding op (duplicate insert / absent delete), or nullopt if clean.
std::optional<std::size_t> first_replay_collision(const OperationStream& s, DynamicGraph g);

// --- edge-list input ---------------------------------------------------------

struct LoadedGraph {
    DynamicGraph graph;
    std::vector<std::uint64_t> original_id;               // dense -> original
    std::unordered_map<std::uint64_t, VertexId> id_map;   // original -> dense
    std::size_t skipped_lines = 0;                        // malformed records
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
};

// Whitespace-separated "u v" lines; '#'/'%' lines skipped; arbitrary ids
// remapped to a dense [0, n). Self-loops and repeated edges are dropped and
// counted.
LoadedGraph load_edge_list(const std::string& path, double gamma = 0.9, GammaRule rule = GammaRule::Corrected);

struct LoadedTemporal {
    std::vector<TemporalEvent> events;
    std::size_t vertex_count = 0;
    std::vector<std::uint64_t> original_id;
    std::size_t skipped_lines = 0;
};

// "u v start" or "u v start end" lines, same comment/remap rules.
LoadedTemporal load_temporal(const std::string& path);

} // namespace dqc
