#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hullkit/graph_gen.hpp"
#include "hullkit/hulls.hpp"
#include "hullkit/oracles.hpp"
#include "hullkit/reductions.hpp"

using namespace hullkit;

namespace {

VertexSet make_set(int universe, std::initializer_list<int> elems) {
    VertexSet s(universe);
    for (int v : elems) s.add(v);
    return s;
}

bool bipartite(const Graph& g) {
    std::vector<int> color(std::size_t(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[std::size_t(s)] != -1) continue;
        color[std::size_t(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int w : g.neighbors(queue[h])) {
                if (color[std::size_t(w)] == -1) {
                    color[std::size_t(w)] = 1 - color[std::size_t(queue[h])];
                    queue.push_back(w);
                } else if (color[std::size_t(w)] == color[std::size_t(queue[h])]) {
                    return false;
                }
            }
    }
    return true;
}

}  // namespace

TEST_CASE("instance formats round-trip byte stable") {
    Digraph d = Digraph::parse_string("d 3 2\n0 1\n# comment\n2 0\n");
    CHECK(d.n == 3);
    CHECK(Digraph::parse_string(d.serialize()).serialize() == d.serialize());

    auto h = HittingSetInstance::parse_string("universe 3 count 2\n0 1\n1 2\n");
    CHECK(h.sets.size() == 2);
    CHECK(HittingSetInstance::parse_string(h.serialize()).serialize() == h.serialize());

    auto c = CubeVectorSet::parse_string("dim 3 count 2\n010\n101\n");
    CHECK(c.d == 3);
    CHECK(CubeVectorSet::parse_string(c.serialize()).serialize() == c.serialize());
    CHECK_THROWS(CubeVectorSet::parse_string("dim 2 count 2\n01\n01\n"));  // duplicate

    auto phi = CnfFormula::parse_dimacs_string("p cnf 3 2\n1 2 -3 0\n-1 2 3 0\n");
    CHECK(phi.n_vars == 3);
    CHECK(CnfFormula::parse_dimacs_string(phi.serialize_dimacs()).serialize_dimacs() ==
          phi.serialize_dimacs());
    CHECK_THROWS(CnfFormula::parse_dimacs_string("p cnf 2 1\n1 1 2 0\n"));  // repeated variable

    auto q = QbfInstance::parse_qdimacs_string("p cnf 2 2\ne 1 0\na 2 0\n1 2 2 0\n-1 -2 -2 0\n");
    CHECK(q.n_x == 1);
    CHECK(q.n_y == 1);
    CHECK(QbfInstance::parse_qdimacs_string(q.serialize_qdimacs()).serialize_qdimacs() ==
          q.serialize_qdimacs());
}

TEST_CASE("dominating set to closure: star digraph") {
    Digraph d;
    d.n = 5;
    for (int v = 1; v < 5; ++v) d.add_arc(0, v);
    auto red = dominating_to_closure(d);
    auto dom = oracles::dominating_set_exact(d);
    CHECK(dom.size == 1);
    auto images = enumerate_images(red.oracle, ImageStrategy::Exhaustive);
    auto table = min_gen(red.oracle, images);
    CHECK(int(table.label_of(VertexSet::full(red.oracle.universe)).size()) == dom.size);
    // Round trip of certificates.
    VertexSet gen = red.to_generator(dom.witness);
    CHECK(red.oracle.evaluate(gen) == VertexSet::full(red.oracle.universe));
    VertexSet back = red.to_dominating(gen);
    for (int v = 0; v < d.n; ++v) {
        bool dominated = back.contains(v);
        for (auto [t, head] : d.arcs)
            if (head == v && back.contains(t)) dominated = true;
        CHECK(dominated);
    }
}

TEST_CASE("hitting to coordinate reversal: optimum shifts by one") {
    // {a}, {b}: hitting OPT 2, reversal OPT 3.
    HittingSetInstance h;
    h.universe = 2;
    h.sets = {make_set(2, {0}), make_set(2, {1})};
    auto red = hitting_to_coordinate(h);
    auto hit = oracles::hitting_set_exact(h);
    REQUIRE(hit.has_value());
    CHECK(hit->size == 2);
    auto rev = coordinate_reversal_solve(red.cube);
    REQUIRE(rev.has_value());
    CHECK(rev->size == 3);
    VertexSet fwd = red.to_reversal(hit->witness);
    CHECK(int(fwd.size()) == hit->size + 1);
    CHECK(fwd.contains(red.x_index));
    CHECK(red.to_hitting(fwd).size() == hit->witness.size());
}

TEST_CASE("coordinate to hitting and back preserves the optimum") {
    CubeVectorSet c;
    c.d = 3;
    c.vectors = {make_set(3, {}), make_set(3, {0}), make_set(3, {1}), make_set(3, {0, 1, 2})};
    auto trans = coordinate_to_hitting(c);
    REQUIRE(trans.feasible);
    CHECK(trans.instance.universe == int(c.vectors.size()));
    CHECK(trans.instance.sets.size() == 2 * std::size_t(c.d));
    auto hit = oracles::hitting_set_exact(trans.instance);
    auto rev = coordinate_reversal_solve(c);
    REQUIRE(hit.has_value());
    REQUIRE(rev.has_value());
    CHECK(hit->size == rev->size);
}

TEST_CASE("M_k rows: column 0 is constant, so reversal is infeasible") {
    CubeVectorSet m2 = build_Mk_instance(2);
    CHECK(m2.d == 4);
    CHECK(m2.vectors.size() == 2);
    // Columns of M_k enumerate all binary k-tuples, so some column is all-zero.
    auto trans = coordinate_to_hitting(m2);
    CHECK_FALSE(trans.feasible);
    CHECK(trans.constant_coordinate == 0);
    CHECK_FALSE(coordinate_reversal_solve(m2).has_value());
    CubeVectorSet m3 = build_Mk_instance(3);
    CHECK(m3.d == 8);
    CHECK(m3.vectors.size() == 3);
    CHECK_THROWS(build_Mk_instance(6));
}

TEST_CASE("triangle gadget sizes, corner distances, bipartiteness") {
    std::vector<std::pair<int, int>> expect{{3, 4}, {5, 13}, {7, 28}, {9, 49}};
    for (auto [gamma, size] : expect) {
        auto [g, layout] = triangle_gadget(gamma);
        CHECK(g.n() == size);
        CHECK(bipartite(g));
        auto dist = all_pairs_distances(g);
        int x = layout.at("x"), y = layout.at("y"), z = layout.at("z");
        CHECK(dist.at(x, y) == gamma - 1);
        CHECK(dist.at(y, z) == gamma - 1);
        CHECK(dist.at(x, z) == gamma - 1);
        CHECK(layout.params.at("gamma") == gamma);
        layout.validate(g.n());
    }
    CHECK_THROWS(triangle_gadget(4));  // even
    CHECK_THROWS(triangle_gadget(1));
}

TEST_CASE("triangle corners force the whole gadget as isometric hull") {
    for (int gamma : {3, 5}) {
        auto [g, layout] = triangle_gadget(gamma);
        auto dist = all_pairs_distances(g);
        VertexSet corners(g.n());
        corners.add(layout.at("x"));
        corners.add(layout.at("y"));
        corners.add(layout.at("z"));
        auto r = iso_hull_exact(g, dist, corners);
        REQUIRE(r.optimal);
        CHECK(r.size == g.n());
    }
}

TEST_CASE("hitting to isometric hull: worked 7-vertex example") {
    // U = {0,1,2}, family {{0,1},{2}} (already two disjoint sets).
    HittingSetInstance h;
    h.universe = 3;
    h.sets = {make_set(3, {0, 1}), make_set(3, {2})};
    h.bound = 2;
    auto red = hitting_to_isohull(h);
    CHECK(red.graph.n() == 7);
    CHECK(red.dummy_count == 0);
    CHECK(all_pairs_distances(red.graph).diameter() == 3);
    CHECK(bipartite(red.graph));
    CHECK(red.target == 2 + 2 + 2);  // k + m + 2
    auto dist = all_pairs_distances(red.graph);
    auto best = oracles::iso_hull_enumerate(red.graph, dist, red.terminals);
    auto hit = oracles::hitting_set_exact(h);
    REQUIRE(hit.has_value());
    CHECK(best.size == hit->size + int(h.sets.size()) + 2);
    // Certificate round trip.
    VertexSet hull = red.to_hull(hit->witness);
    CHECK(is_isometric(red.graph, dist, hull));
    CHECK(int(hull.size()) == red.target);
    CHECK(red.to_hitting(hull) == hit->witness);
}

TEST_CASE("hitting to isometric hull appends a dummy when no two sets are disjoint") {
    HittingSetInstance h;
    h.universe = 3;
    h.sets = {make_set(3, {0, 1}), make_set(3, {1, 2})};
    auto red = hitting_to_isohull(h);
    CHECK(red.dummy_count == 1);
    CHECK(all_pairs_distances(red.graph).diameter() == 3);
    auto dist = all_pairs_distances(red.graph);
    auto best = oracles::iso_hull_enumerate(red.graph, dist, red.terminals);
    auto hit = oracles::hitting_set_exact(h);
    REQUIRE(hit.has_value());
    long long m_eff = static_cast<long long>(h.sets.size()) + red.dummy_count;
    CHECK(best.size == hit->size + red.dummy_count + m_eff + 2);
}

TEST_CASE("auto gadget parameters satisfy every constraint") {
    for (int m = 1; m <= 6; ++m) {
        GadgetParams p = auto_gadget_params(m);
        CHECK(p.alpha % 2 == 0);
        CHECK(p.beta % 2 == 0);
        CHECK(p.gamma % 2 == 1);
        CHECK(m < 2 * p.alpha);
        CHECK(2 * p.alpha < 2 * p.beta);
        CHECK(2 * p.beta < p.gamma);
        CHECK(p.gamma < 2 * (p.alpha + p.beta));
        auto [tg, tl] = triangle_gadget(int(p.gamma));
        CHECK(tg.n() - 3 * p.gamma > m * p.gamma);
    }
}

TEST_CASE("3-SAT to isometric hull: structure and certificate accounting") {
    CnfFormula phi;
    phi.n_vars = 3;
    phi.clauses.push_back({Literal{0, true}, Literal{1, true}, Literal{2, false}});
    phi.clauses.push_back({Literal{0, false}, Literal{1, true}, Literal{2, true}});
    auto red = sat_to_isohull(phi);
    const auto& p = red.layout.params;
    long long alpha = p.at("alpha"), beta = p.at("beta"), gamma = p.at("gamma");
    CHECK(red.target_g0 == 3 * (alpha + 2 * beta) + 2 * gamma);
    CHECK(red.target_g == red.g.n() - 1);
    CHECK(red.g.n() == red.g0.n() + 1);
    CHECK(bipartite(red.g0));
    CHECK(red.terminals_g0.size() == 7);  // r plus d_i, g_i

    auto dist = all_pairs_distances(red.g0);
    int r = red.layout.at("r");
    for (int i = 1; i <= 3; ++i) {
        std::string s = std::to_string(i);
        int d_i = red.layout.at("d_" + s), g_i = red.layout.at("g_" + s);
        int n_i = red.layout.at("n_" + s), p_i = red.layout.at("p_" + s);
        // Observation 1: unique beta-paths from the root.
        CHECK(dist.at(r, d_i) == beta);
        CHECK(dist.at(r, g_i) == beta);
        CHECK(count_shortest_paths(red.g0, r, d_i) == 1);
        CHECK(count_shortest_paths(red.g0, r, g_i) == 1);
        // Cycle halves: d to g both ways.
        CHECK(dist.at(d_i, g_i) == 2 * alpha);
        CHECK(count_shortest_paths(red.g0, d_i, g_i) == 2);
        CHECK(dist.at(n_i, p_i) == 2 * alpha);
        // Observation 2: gadget-to-gadget routes pass through r.
        for (int j = 1; j < i; ++j) {
            CHECK(dist.at(d_i, red.layout.at("d_" + std::to_string(j))) == 2 * beta);
            CHECK(dist.at(d_i, red.layout.at("g_" + std::to_string(j))) == 2 * beta);
        }
    }
    // Observation 3: clause corners pairwise at distance gamma - 1.
    for (int j = 1; j <= 2; ++j) {
        std::vector<int> corners;
        for (int t = 0; t < 3; ++t) {
            const auto& alias =
                red.layout.aliases.at("C_" + std::to_string(j) + "_corner_" + std::to_string(t));
            corners.push_back(red.layout.at(alias));
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                CHECK(dist.at(corners[std::size_t(a)], corners[std::size_t(b)]) == gamma - 1);
    }
    // Non-co-clause literal vertices sit at distance 2(alpha+beta):
    // p_1 and p_2 share no clause (corners are n_1/n_2 and p_1/n_2 resp.).
    CHECK(dist.at(red.layout.at("p_1"), red.layout.at("p_2")) == 2 * (alpha + beta));

    // Certificate accounting: H is the union of the 2n root paths, one
    // cycle half per variable and at most one side per clause gadget, so
    // its true size is 1 + n(2a+2b-1) + (sides added)(c-2). The emitted
    // target n(a+2b)+mc only bounds this from above; see README.
    auto sat = oracles::sat_solve(phi);
    REQUIRE(sat.satisfiable);
    VertexSet hull = red.hull_from_assignment(sat.assignment);
    long long sides = 0;
    for (int j = 1; j <= 2; ++j)
        for (int t = 0; t < 3; ++t) {
            const auto& side =
                red.layout.role_lists.at("C_" + std::to_string(j) + "_side_" + std::to_string(t));
            if (hull.contains(side.front()) && hull.contains(side.back())) ++sides;
        }
    CHECK(static_cast<long long>(hull.size()) ==
          1 + 3 * (2 * alpha + 2 * beta - 1) + sides * (gamma - 2));
    CHECK(red.terminals_g0.subset_of(hull));
    CHECK(red.assignment_from_hull(hull) == sat.assignment);
}

TEST_CASE("wrap three terminals: unique paths and the additive constant") {
    // Terminals of the hitting-set instance are pairwise at even distance.
    HittingSetInstance h;
    h.universe = 3;
    h.sets = {make_set(3, {0, 1}), make_set(3, {2})};
    auto inner = hitting_to_isohull(h);
    auto wrapped = wrap_three_terminals(inner.graph, inner.terminals, 6);
    CHECK(wrapped.terminals.size() == 3);
    const auto& p = wrapped.layout.params;
    long long s = p.at("s"), np = p.at("n_prime");
    CHECK(wrapped.target == 6 + 2 * s * np + s + 1);
    CHECK(wrapped.new_vertex_count == wrapped.graph.n() - inner.graph.n());
    int x = wrapped.layout.at("x"), y = wrapped.layout.at("y"), z = wrapped.layout.at("z");
    CHECK(count_shortest_paths(wrapped.graph, x, y) == 1);
    auto wdist = all_pairs_distances(wrapped.graph);
    const auto& v_list = wrapped.layout.role_lists.at("v");
    for (long long i = 1; i <= s; ++i) {
        // v_i to z routes through u_i: n' in, n' out, and it is unique.
        int v_i = v_list[std::size_t(i)];
        CHECK(wdist.at(v_i, z) == 2 * np);
        CHECK(count_shortest_paths(wrapped.graph, v_i, z) == 1);
        const auto& pz = wrapped.layout.role_lists.at("P(z,u_" + std::to_string(i) + ")");
        CHECK(static_cast<long long>(pz.size()) == np + 1);
    }
    // Odd pairwise distances are rejected.
    Graph p2 = path_graph(2);
    CHECK_THROWS(wrap_three_terminals(p2, VertexSet::full(2), 1));
}

TEST_CASE("QSAT2 to hull set: structural contract") {
    QbfInstance q;
    q.n_x = 1;
    q.n_y = 1;
    q.clauses.push_back({Literal{0, true}, Literal{0, true}, Literal{1, true}});
    q.clauses.push_back({Literal{0, false}, Literal{1, false}, Literal{1, false}});
    auto red = qsat2_to_hullset(q);
    CHECK(red.target == 3 * 1 + 2 * 1 + 1);
    long long delta = red.layout.params.at("delta");
    CHECK(delta % 2 == 1);
    // Mandatory set is exactly the degree-one vertices.
    for (int v = 0; v < red.graph.n(); ++v)
        CHECK(red.mandatory.contains(v) == (red.graph.degree(v) == 1));
    // dd/gg pendants and r' are mandatory.
    for (const char* role : {"dd_x_1", "gg_x_1", "dd_y_1", "gg_y_1", "r_prime"})
        CHECK(red.mandatory.contains(red.layout.at(role)));
    CHECK(int(red.mandatory.size()) == 5);  // 2(n_x+n_y) pendants + r'
    // H path runs from p-side to n-side with the two middles adjacent.
    const auto& h1 = red.layout.role_lists.at("H_1");
    CHECK(h1.front() == red.layout.at("p_x_1"));
    CHECK(h1.back() == red.layout.at("n_x_1"));
    CHECK(static_cast<long long>(h1.size()) == delta + 1);
    CHECK(red.graph.has_edge(red.layout.at("h_p_1"), red.layout.at("h_n_1")));
    // Certificate maps invert on both X assignments.
    for (bool x_val : {false, true}) {
        VertexSet hs = red.hullset_from_assignment({x_val});
        CHECK(red.mandatory.subset_of(hs));
        CHECK(int(hs.size()) == int(red.mandatory.size()) + 1);
        auto back = red.assignment_from_hullset(hs);
        REQUIRE(back.size() == 1);
        CHECK(back[0] == x_val);
    }
    // Occurrence validation.
    QbfInstance bad = q;
    bad.clauses.pop_back();
    CHECK_THROWS(qsat2_to_hullset(bad));
}
