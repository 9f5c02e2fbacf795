#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "dqc/workload.hpp"
#include "helpers.hpp"

using namespace dqc;

namespace {

// Writes content to a scratch file in the working directory and removes it on
// scope exit.
struct ScratchFile {
    std::string path;
    ScratchFile(const std::string& name, const std::string& content) : path("wl_scratch_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~ScratchFile() { std::remove(path.c_str()); }
};

std::set<std::pair<VertexId, VertexId>> op_pairs(const OperationStream& s) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& op : s.ops) {
        pairs.insert(op.u < op.v ? std::make_pair(op.u, op.v) : std::make_pair(op.v, op.u));
    }
    return pairs;
}

} // namespace

TEST_SUITE("workload") {

TEST_CASE("random stream: replay-valid, deterministic, seed-sensitive") {
    auto g = testutil::er(15, 0.3, 3);

    const auto empty = gen_random(g, 0, 42);
    CHECK(empty.ops.empty());
    CHECK(empty.flavor == "rand");
    CHECK(empty.lines.empty());

    const auto s = gen_random(g, 1000, 42);
    REQUIRE(s.ops.size() == 1000);
    CHECK_FALSE(first_replay_collision(s, g).has_value());
    CHECK(serialize_stream(s) == serialize_stream(gen_random(g, 1000, 42)));
    CHECK(serialize_stream(s) != serialize_stream(gen_random(g, 1000, 43)));
}

TEST_CASE("random stream on a complete graph must start with a deletion") {
    const auto s = gen_random(testutil::complete(6), 5, 7);
    REQUIRE(!s.ops.empty());
    CHECK(s.ops[0].kind == OpKind::Delete);
}

TEST_CASE("incremental stream: distinct fresh pairs, truncated to the pool") {
    auto g = testutil::er(8, 0.5, 11);
    const std::size_t missing = 28 - g.edge_count();

    const auto s = gen_incremental(g, 100, 5);
    CHECK(s.flavor == "inc");
    REQUIRE(s.ops.size() == missing);
    CHECK(op_pairs(s).size() == missing); // no pair repeats
    for (const auto& op : s.ops) {
        CHECK(op.kind == OpKind::Insert);
        CHECK_FALSE(g.has_edge(op.u, op.v));
    }
    CHECK_FALSE(first_replay_collision(s, g).has_value());
}

TEST_CASE("decremental stream: existing edges only, can drain the graph") {
    auto g = testutil::er(8, 0.5, 11);
    const std::size_t m = g.edge_count();

    const auto s = gen_decremental(g, 100, 5);
    CHECK(s.flavor == "del");
    REQUIRE(s.ops.size() == m);
    CHECK(op_pairs(s).size() == m);
    for (const auto& op : s.ops) {
        CHECK(op.kind == OpKind::Delete);
        CHECK(g.has_edge(op.u, op.v));
    }

    auto replay = g;
    for (const auto& op : s.ops) REQUIRE(replay.delete_edge(op.u, op.v));
    CHECK(replay.edge_count() == 0);
}

TEST_CASE("temporal conversion: one bounded interval") {
    std::vector<TemporalEvent> ev{{0, 1, 1, 3}};
    auto w = from_temporal(ev, 4, 10, 9, /*draw_missing_ends=*/true);
    CHECK(w.initial.edge_count() == 0);
    REQUIRE(w.stream.ops.size() == 2);
    CHECK(w.stream.ops[0] == Operation{OpKind::Insert, 0, 1});
    CHECK(w.stream.ops[1] == Operation{OpKind::Delete, 0, 1});
    CHECK(w.stream.flavor == "temp");
}

TEST_CASE("temporal conversion: overlapping windows coalesce") {
    std::vector<TemporalEvent> ev{{0, 1, 1, 5}, {0, 1, 3, 9}};
    auto w = from_temporal(ev, 2, 10, 9, true);
    REQUIRE(w.stream.ops.size() == 2); // inner boundary events are absorbed
    CHECK(w.stream.ops[0].kind == OpKind::Insert);
    CHECK(w.stream.ops[1].kind == OpKind::Delete);
}

TEST_CASE("temporal conversion: windows spanning time zero seed the graph") {
    std::vector<TemporalEvent> ev{
        {2, 3, -2, 4},  // alive at 0 → initial edge, deleted by the stream
        {1, 2, -5, -1}, // closed before 0 → gone entirely
    };
    auto w = from_temporal(ev, 4, 10, 9, true);
    CHECK(w.initial.edge_count() == 1);
    CHECK(w.initial.has_edge(2, 3));
    REQUIRE(w.stream.ops.size() == 1);
    CHECK(w.stream.ops[0] == Operation{OpKind::Delete, 2, 3});

    // Insert-only flavor drops the ends: the expired edge stays, nothing is
    // ever deleted downstream.
    auto inc = from_temporal(ev, 4, 10, 9, /*draw_missing_ends=*/false);
    CHECK(inc.stream.flavor == "tinc");
    CHECK(inc.initial.edge_count() == 2);
    CHECK(inc.stream.ops.empty());
}

TEST_CASE("temporal conversion: a missing end is drawn after the start") {
    std::vector<TemporalEvent> ev{{0, 1, 2, std::nullopt}};
    auto w = from_temporal(ev, 2, 10, 77, true);
    REQUIRE(w.stream.ops.size() == 2);
    CHECK(w.stream.ops[0].kind == OpKind::Insert);
    CHECK(w.stream.ops[1].kind == OpKind::Delete);
}

TEST_CASE("temporal conversion honors the operation budget") {
    std::vector<TemporalEvent> ev;
    for (VertexId u = 0; u < 6; ++u) {
        for (VertexId v = u + 1; v < 6; ++v) ev.push_back({u, v, u + v + 1, std::nullopt});
    }
    auto w = from_temporal(ev, 6, 4, 9, false);
    CHECK(w.stream.ops.size() == 4);
}

TEST_CASE("stream round-trip preserves everything observable") {
    auto g = testutil::er(10, 0.4, 21);
    const auto s = gen_random(g, 50, 13);
    std::istringstream in(serialize_stream(s));
    const auto back = parse_stream(in);
    CHECK(back.ops == s.ops);
    CHECK(back.declared_q == s.ops.size());
    CHECK(back.seed == s.seed);
    CHECK(back.flavor == s.flavor);
}

TEST_CASE("parser records source lines and rejects junk by line number") {
    std::istringstream good("%q 2 %seed 9 %flavor rand\n# comment\n+ 1 2\n\n- 1 2\n");
    const auto s = parse_stream(good);
    REQUIRE(s.ops.size() == 2);
    CHECK(s.declared_q == 2);
    CHECK(s.seed == 9);
    CHECK(s.lines == std::vector<std::size_t>{3, 5});

    std::istringstream bad("%q 1 %seed 0 %flavor rand\n# fine\n+ 1 2\nx 3 4\n");
    CHECK_THROWS_WITH_AS(parse_stream(bad), "malformed stream line 4", std::runtime_error);
}

TEST_CASE("replay collision scan reports the first offender") {
    DynamicGraph g(4, 0.9);
    g.insert_edge(0, 1);
    g.gamma_degree_init();

    OperationStream s;
    s.ops = {{OpKind::Insert, 0, 2}, {OpKind::Insert, 0, 1}, {OpKind::Delete, 2, 3}};
    auto hit = first_replay_collision(s, g);
    REQUIRE(hit.has_value());
    CHECK(*hit == 1); // duplicate insert; the scan never reaches the absent delete

    s.ops = {{OpKind::Delete, 0, 1}, {OpKind::Insert, 0, 1}};
    CHECK_FALSE(first_replay_collision(s, g).has_value());
}

TEST_CASE("edge list loader: dense remap, junk accounting") {
    ScratchFile f("edges.el",
                  "# comment\n"
                  "% also skipped\n"
                  "100 7\n"
                  "7 100\n"
                  "5 5\n"
                  "garbage\n"
                  "100 8\n");
    const auto loaded = load_edge_list(f.path, 0.9);
    CHECK(loaded.original_id == std::vector<std::uint64_t>{100, 7, 8});
    CHECK(loaded.id_map.at(100) == 0);
    CHECK(loaded.id_map.at(7) == 1);
    CHECK(loaded.id_map.at(8) == 2);
    CHECK(loaded.graph.vertex_count() == 3);
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.graph.has_edge(0, 1));
    CHECK(loaded.graph.has_edge(0, 2));
    CHECK(loaded.duplicates == 1);
    CHECK(loaded.self_loops == 1);
    CHECK(loaded.skipped_lines == 1);

    CHECK_THROWS_AS((void)load_edge_list("definitely_not_here.el", 0.9), std::runtime_error);
}

TEST_CASE("temporal loader: three- and four-field records") {
    ScratchFile f("edges.tel",
                  "# t\n"
                  "1 2 5\n"
                  "2 3 -1 4\n"
                  "9 9 3\n"
                  "nonsense\n");
    const auto loaded = load_temporal(f.path);
    REQUIRE(loaded.events.size() == 2);
    CHECK(loaded.vertex_count == 3);
    CHECK(loaded.skipped_lines == 2);
    CHECK(loaded.events[0].start == 5);
    CHECK_FALSE(loaded.events[0].end.has_value());
    CHECK(loaded.events[1].start == -1);
    REQUIRE(loaded.events[1].end.has_value());
    CHECK(*loaded.events[1].end == 4);

    // Dense ids assigned in first-appearance order: 1→0, 2→1, 3→2.
    CHECK(loaded.events[0].u == 0);
    CHECK(loaded.events[0].v == 1);
    CHECK(loaded.events[1].u == 1);
    CHECK(loaded.events[1].v == 2);
}

TEST_CASE("save and load streams through the filesystem") {
    auto g = testutil::er(9, 0.4, 2);
    const auto s = gen_random(g, 25, 4);
    const std::string path = "wl_scratch_roundtrip.ops";
    save_stream(s, path);
    const auto back = load_stream(path);
    std::remove(path.c_str());
    CHECK(back.ops == s.ops);
    CHECK(back.lines.size() == back.ops.size());
    CHECK_THROWS_AS((void)load_stream("missing_stream.ops"), std::runtime_error);
}

} // TEST_SUITE
