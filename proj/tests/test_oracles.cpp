#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullkit/graph_gen.hpp"
#include "hullkit/oracles.hpp"

using namespace hullkit;

namespace {

VertexSet make_set(int universe, std::initializer_list<int> elems) {
    VertexSet s(universe);
    for (int v : elems) s.add(v);
    return s;
}

}  // namespace

TEST_CASE("dominating_set_exact on a star digraph") {
    Digraph d;
    d.n = 6;
    for (int v = 1; v < 6; ++v) d.add_arc(0, v);
    auto r = oracles::dominating_set_exact(d);
    CHECK(r.size == 1);
    CHECK(r.witness == make_set(6, {0}));

    Digraph arcless;
    arcless.n = 3;
    CHECK(oracles::dominating_set_exact(arcless).size == 3);
}

TEST_CASE("hitting_set_exact basics") {
    HittingSetInstance h;
    h.universe = 4;
    h.sets = {make_set(4, {0, 1}), make_set(4, {1, 2}), make_set(4, {3})};
    auto r = oracles::hitting_set_exact(h);
    REQUIRE(r.has_value());
    CHECK(r->size == 2);
    CHECK(r->witness == make_set(4, {1, 3}));  // first in (size, lex) order

    HittingSetInstance impossible;
    impossible.universe = 2;
    impossible.sets = {VertexSet(2)};
    CHECK_FALSE(oracles::hitting_set_exact(impossible).has_value());
}

TEST_CASE("sat_solve on satisfiable and unsatisfiable formulas") {
    CnfFormula phi;
    phi.n_vars = 3;
    phi.clauses.push_back({Literal{0, true}, Literal{1, true}, Literal{2, true}});
    auto r = oracles::sat_solve(phi);
    REQUIRE(r.satisfiable);
    CHECK(phi.satisfied_by(r.assignment));

    // All eight sign patterns over three variables: unsatisfiable.
    CnfFormula unsat;
    unsat.n_vars = 3;
    for (int mask = 0; mask < 8; ++mask)
        unsat.clauses.push_back({Literal{0, (mask & 1) != 0}, Literal{1, (mask & 2) != 0},
                                 Literal{2, (mask & 4) != 0}});
    CHECK_FALSE(oracles::sat_solve(unsat).satisfiable);
}

TEST_CASE("qsat2_eval: exists-forall over a 3-DNF") {
    // exists x forall y: (x ∧ x ∧ y) ∨ (x ∧ x ∧ ¬y). True with x = 1.
    QbfInstance q;
    q.n_x = 1;
    q.n_y = 1;
    q.clauses.push_back({Literal{0, true}, Literal{0, true}, Literal{1, true}});
    q.clauses.push_back({Literal{0, true}, Literal{0, true}, Literal{1, false}});
    CHECK(oracles::qsat2_eval(q).value);

    // exists x forall y: (x ∧ x ∧ y) alone. False: y = 0 falsifies both x.
    QbfInstance f;
    f.n_x = 1;
    f.n_y = 1;
    f.clauses.push_back({Literal{0, true}, Literal{0, true}, Literal{1, true}});
    auto r = oracles::qsat2_eval(f);
    CHECK_FALSE(r.value);
    REQUIRE(r.falsifying_y.size() == 2);
    for (int xm = 0; xm < 2; ++xm) {
        std::vector<bool> assignment{xm == 1, r.falsifying_y[std::size_t(xm)][0]};
        CHECK_FALSE(f.formula_value(assignment));
    }
}

TEST_CASE("brute_force_min_gen labels generate their images") {
    Graph g = cycle_graph(5);
    auto cl = conv_oracle(g, all_pairs_distances(g));
    auto table = oracles::min_generator_exhaustive(cl);
    for (const auto& im : table.images) CHECK(cl.evaluate(table.label_of(im)) == im);
    CHECK(table.label_of(VertexSet::full(5)).size() == 3);
}

TEST_CASE("iso_hull_enumerate is the smallest isometric superset") {
    Graph g = cycle_graph(6);
    auto dist = all_pairs_distances(g);
    auto r = oracles::iso_hull_enumerate(g, dist, make_set(6, {0, 3}));
    CHECK(r.size == 4);  // one of the two halves
    CHECK(r.optimal);
    CHECK(is_isometric(g, dist, r.vertices));
}
