#include <doctest.h>

#include <algorithm>
#include <optional>
#include <utility>

#include "dqc/nsf.hpp"
#include "helpers.hpp"

using namespace dqc;
using testutil::make_set;

namespace {

EngineParams base_params(double gamma = 0.9, double b = 0.6, double alpha = 0.8) {
    EngineParams p;
    p.detect = DetectParams{gamma, b, alpha};
    p.backend = Backend::Exact;
    p.batch = 1000;
    p.rounds = 20;
    return p;
}

// Largest fresh detect over all centers that yields a usable candidate.
std::optional<VertexSet> detect_sweep_best(const DynamicGraph& g, const DetectParams& p) {
    std::optional<VertexSet> best;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        auto c = detect(g, u, p, nullptr);
        if (c.size() < 2 || !meets_density(g.internal_edge_count(c), c.size(), p.alpha)) continue;
        if (!best || c.size() > best->size()) best = std::move(c);
    }
    return best;
}

} // namespace

TEST_SUITE("nsf") {

TEST_CASE("edgeless graph indexes nothing") {
    DynamicGraph g(5, 0.9);
    g.gamma_degree_init();
    NsfEngine e(g, base_params());
    CHECK_FALSE(e.extract(10).has_value());
    for (VertexId u = 0; u < 5; ++u) CHECK_FALSE(e.indexed(u));
    // A single edge is still below the b-threshold for either endpoint.
    CHECK_FALSE(e.add_edge(0, 1).has_value());
}

TEST_CASE("complete graph: every center caches the full clique") {
    auto g = testutil::complete(5);
    NsfEngine e(std::move(g), base_params());
    const auto k5 = make_set({0, 1, 2, 3, 4});
    for (VertexId u = 0; u < 5; ++u) {
        CHECK(e.indexed(u));
        CHECK(e.cached_clique(u) == k5);
    }
    auto r = e.extract(1); // honest top confirms itself in one round
    REQUIRE(r.has_value());
    CHECK(*r == k5);
}

TEST_CASE("pendant and attachment centers stay out of the index") {
    DynamicGraph g(7, 0.9);
    testutil::connect_all(g, testutil::iota_ids(6));
    g.insert_edge(0, 6);
    g.gamma_degree_init();
    NsfEngine e(std::move(g), base_params());

    CHECK_FALSE(e.indexed(0)); // diluted by the pendant
    CHECK_FALSE(e.indexed(6));
    for (VertexId u = 1; u <= 5; ++u) {
        CHECK(e.indexed(u));
        CHECK(e.cached_clique(u) == make_set({0, 1, 2, 3, 4, 5}));
    }
    auto r = e.extract(3);
    REQUIRE(r.has_value());
    CHECK(r->size() == 6);
}

TEST_CASE("inserting the missing edge upgrades the reported clique") {
    // K4 minus (2,3); only the tight triangles pass α = 0.95 beforehand.
    DynamicGraph g(4, 0.99);
    testutil::connect_all(g, testutil::iota_ids(4));
    g.delete_edge(2, 3);
    g.gamma_degree_init();

    auto p = base_params(0.99, 0.6, 0.95);
    NsfEngine e(std::move(g), p);
    CHECK_FALSE(e.indexed(0));
    CHECK(e.indexed(2));
    CHECK(e.cached_clique(2) == make_set({0, 1, 2}));
    CHECK(e.indexed(3));

    auto r = e.add_edge(2, 3);
    REQUIRE(r.has_value());
    CHECK(*r == make_set({0, 1, 2, 3}));
}

TEST_CASE("operations count toward the rebuild cadence even when redundant") {
    auto g = testutil::complete(4);
    auto p = base_params();
    p.batch = 2;
    NsfEngine e(std::move(g), p);
    REQUIRE(e.rebuild_count() == 1);

    e.add_edge(0, 1); // duplicate: graph untouched, still one operation
    CHECK(e.rebuild_count() == 1);
    auto r = e.add_edge(0, 1); // second operation → scheduled rebuild
    CHECK(e.rebuild_count() == 2);
    REQUIRE(r.has_value()); // the rebuilt index reports its fresh top
    CHECK(r->size() == 4);
}

TEST_CASE("stale index entries burn extraction rounds") {
    // K6 {0..5} + K5 {6..10}. Deleting (1,2) leaves four stale size-6 index
    // entries (centers 0,3,4,5); each costs one round to invalidate before a
    // fresh size-5 top can confirm itself.
    auto build_graph = [] {
        DynamicGraph g(11, 0.9);
        testutil::connect_all(g, testutil::iota_ids(6));
        testutil::connect_all(g, testutil::iota_ids(5, 6));
        g.gamma_degree_init();
        return g;
    };

    auto tight = base_params();
    tight.rounds = 2;
    NsfEngine starved(build_graph(), tight);
    CHECK_FALSE(starved.delete_edge(1, 2).has_value());

    auto roomy = base_params();
    roomy.rounds = 5;
    NsfEngine patient(build_graph(), roomy);
    auto r = patient.delete_edge(1, 2);
    REQUIRE(r.has_value());
    CHECK(*r == make_set({0, 1, 3, 4, 5}));

    // The starved engine already paid for two invalidations; a follow-up
    // extraction clears the remaining two and finds the same answer.
    auto later = starved.extract(3);
    REQUIRE(later.has_value());
    CHECK(*later == make_set({0, 1, 3, 4, 5}));
}

TEST_CASE("with fresh caches the reported size matches a full detect sweep") {
    auto p = base_params();
    p.batch = 1; // rebuild after every operation: caches never go stale

    auto g = testutil::er(20, 0.35, /*seed=*/202);
    NsfEngine e(g, p);

    Rng rng(77);
    for (int op = 0; op < 100; ++op) {
        VertexId u = 0, v = 0;
        while (u == v) {
            u = static_cast<VertexId>(rng.bounded(20));
            v = static_cast<VertexId>(rng.bounded(20));
        }
        std::optional<VertexSet> got;
        if (g.has_edge(u, v)) {
            g.delete_edge(u, v);
            got = e.delete_edge(u, v);
        } else {
            g.insert_edge(u, v);
            got = e.add_edge(u, v);
        }
        const auto want = detect_sweep_best(e.graph(), p.detect);
        REQUIRE(got.has_value() == want.has_value());
        if (want) {
            REQUIRE(got->size() == want->size());
            REQUIRE(meets_density(e.graph().internal_edge_count(*got), got->size(), p.detect.alpha));
        }
    }
}

} // TEST_SUITE
