#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hullkit/graph_gen.hpp"
#include "hullkit/hulls.hpp"

using namespace hullkit;

namespace {

VertexSet make_set(int universe, std::initializer_list<int> elems) {
    VertexSet s(universe);
    for (int v : elems) s.add(v);
    return s;
}

}  // namespace

TEST_CASE("iso hull of a pair is a shortest path") {
    std::mt19937 rng(41);
    for (int t = 0; t < 30; ++t) {
        int n = 4 + int(rng() % 6);
        Graph g = random_connected_graph(n, rng(), 35);
        auto dist = all_pairs_distances(g);
        int u = int(rng() % unsigned(n)), v = int(rng() % unsigned(n));
        if (u == v) continue;
        auto r = iso_hull_exact(g, dist, make_set(n, {u, v}));
        CHECK(r.optimal);
        CHECK(r.size == dist.at(u, v) + 1);
    }
}

TEST_CASE("C4: opposite corners hull to one of the two 3-vertex paths") {
    Graph g = cycle_graph(4);
    auto dist = all_pairs_distances(g);
    auto r = iso_hull_exact(g, dist, make_set(4, {0, 2}));
    CHECK(r.optimal);
    CHECK(r.size == 3);
    CHECK(is_isometric(g, dist, r.vertices));
}

TEST_CASE("exact search equals plain enumeration on random graphs") {
    std::mt19937 rng(1234);
    for (int t = 0; t < 40; ++t) {
        int n = 4 + int(rng() % 6);
        Graph g = random_connected_graph(n, rng(), 30);
        auto dist = all_pairs_distances(g);
        VertexSet s(n);
        while (s.size() < 3) s.add(int(rng() % unsigned(n)));
        auto exact = iso_hull_exact(g, dist, s);
        auto reference = oracles::iso_hull_enumerate(g, dist, s);
        REQUIRE(exact.optimal);
        CHECK(exact.size == reference.size);
        CHECK(is_isometric(g, dist, exact.vertices));
        CHECK(s.subset_of(exact.vertices));
        auto greedy = iso_hull_greedy(g, dist, s);
        CHECK(greedy.size >= exact.size);
        CHECK(is_isometric(g, dist, greedy.vertices));
    }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
    Graph g = hypercube_graph(4);
    auto dist = all_pairs_distances(g);
    auto r = iso_hull_exact(g, dist, make_set(16, {0, 15, 5}), /*node_budget=*/1);
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.optimal);
    CHECK(is_isometric(g, dist, r.vertices));  // still a valid upper bound
}

TEST_CASE("hull set verdicts on small cycles") {
    Graph c4 = cycle_graph(4);
    // Every 3-subset of C4 is itself isometric, so no 3-set is a hull set.
    auto verdict = is_hull_set(c4, make_set(4, {0, 1, 2}));
    CHECK(verdict.kind == HullSetVerdict::Kind::NotHullSet);
    REQUIRE(verdict.witness.has_value());
    CHECK(int(verdict.witness->size()) < 4);
    CHECK(is_hull_set(c4, VertexSet::full(4)).kind == HullSetVerdict::Kind::HullSet);

    Graph c6 = cycle_graph(6);
    CHECK(is_hull_set(c6, make_set(6, {0, 2, 4})).kind == HullSetVerdict::Kind::HullSet);
}

TEST_CASE("isometric hull numbers of named graphs") {
    CHECK(iso_hull_number(path_graph(4)).size == 2);
    CHECK(iso_hull_number(cycle_graph(4)).size == 4);
    CHECK(iso_hull_number(cycle_graph(6)).size == 3);
    auto r = iso_hull_number(cycle_graph(6));
    CHECK(is_hull_set(cycle_graph(6), r.witness).kind == HullSetVerdict::Kind::HullSet);
}

TEST_CASE("hull number via coordinate reversal matches the direct route") {
    for (const Graph& g : {hypercube_graph(2), hypercube_graph(3), cycle_graph(6), path_graph(7)}) {
        auto direct = hull_number(g);
        auto via = hull_number_via_coordinate_reversal(g);
        CHECK(via.size == direct.size);
        CHECK(conv(g, via.witness) == VertexSet::full(g.n()));
    }
}

TEST_CASE("coordinate reversal route rejects non-partial-cubes") {
    CHECK_THROWS_AS(hull_number_via_coordinate_reversal(complete_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(hull_number_via_coordinate_reversal(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("conv_oracle rejects disconnected graphs") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS(conv_oracle(g, all_pairs_distances(g)));
}
