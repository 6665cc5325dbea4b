#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "hullkit/closure.hpp"
#include "hullkit/graph_gen.hpp"
#include "hullkit/hulls.hpp"

using namespace hullkit;

namespace {

// Random intersection-closed family containing the universe.
ClosedFamily random_closed_family(int universe, std::mt19937& rng, int generators = 5) {
    std::vector<VertexSet> sets{VertexSet::full(universe)};
    for (int g = 0; g < generators; ++g) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            if (rng() % 2) s.add(v);
        sets.push_back(s);
    }
    // Close under pairwise intersection to a fixpoint.
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            VertexSet meet = sets[i] & sets[j];
            if (std::find(sets.begin(), sets.end(), meet) == sets.end()) sets.push_back(meet);
        }
    return ClosedFamily(universe, std::move(sets));
}

}  // namespace

TEST_CASE("identity closure classifies as an atomistic closure") {
    auto cls = classify_exhaustive(identity_closure(4));
    CHECK(cls.extensive);
    CHECK(cls.increasing);
    CHECK(cls.idempotent);
    CHECK(cls.pseudo_closure_law);
    CHECK(cls.size_increasing);
    CHECK(cls.atomistic);
    CHECK(cls.is_closure());
    CHECK(cls.exhaustive);
}

TEST_CASE("geodesic convexity is an atomistic closure") {
    Graph g = cycle_graph(5);
    auto cls = classify_exhaustive(conv_oracle(g, all_pairs_distances(g)));
    CHECK(cls.is_closure());
    CHECK(cls.pseudo_closure_law);
    CHECK(cls.atomistic);
}

TEST_CASE("punctured operator: pseudo-closure but not extensive") {
    Graph g = cycle_graph(6);
    auto cl = conv_oracle(g, all_pairs_distances(g));
    VertexSet x_big(6);
    x_big.add(0);
    x_big.add(2);
    VertexSet x_small(6);
    x_small.add(0);
    auto f = punctured(cl, x_big, x_small);
    auto cls = classify_exhaustive(f);
    CHECK(cls.pseudo_closure_law);
    CHECK_FALSE(cls.extensive);
    CHECK(cls.increasing);
    CHECK(cls.idempotent);
    CHECK(cls.size_increasing);
    CHECK_FALSE(cls.is_closure());
}

TEST_CASE("punctured rejects bad arguments") {
    auto cl = identity_closure(4);
    VertexSet empty(4), one(4), two(4);
    one.add(0);
    two.add(1);
    CHECK_THROWS(punctured(cl, one, empty));  // X' empty
    CHECK_THROWS(punctured(cl, one, two));    // X' not inside X
}

TEST_CASE("extensive + pseudo-closure law implies the closure axioms, |A| <= 5") {
    std::mt19937 rng(0x5eed);
    int verified = 0;
    for (int universe = 1; universe <= 5; ++universe) {
        for (int t = 0; t < 40; ++t) {
            auto fam = random_closed_family(universe, rng);
            auto cls = classify_exhaustive(closure_from_family(fam));
            REQUIRE(cls.extensive);
            REQUIRE(cls.pseudo_closure_law);
            CHECK(cls.increasing);
            CHECK(cls.idempotent);
            CHECK(cls.size_increasing);
            ++verified;
        }
    }
    CHECK(verified == 200);
}

TEST_CASE("classify_sampled agrees with exhaustive on definite negatives") {
    Graph g = cycle_graph(6);
    auto cl = conv_oracle(g, all_pairs_distances(g));
    VertexSet x_big(6), x_small(6);
    x_big.add(1);
    x_small.add(1);
    auto f = punctured(cl, x_big, x_small);
    auto cls = classify_sampled(f, 7u, 2000);
    CHECK_FALSE(cls.extensive);
    CHECK(cls.pseudo_closure_law);
    CHECK_FALSE(cls.exhaustive);
    CHECK(cls.seed == 7u);
}

TEST_CASE("family parse/serialize round-trip is byte stable") {
    ClosedFamily fam = ClosedFamily(3, {VertexSet(3), VertexSet::full(3)});
    std::string once = fam.serialize();
    std::istringstream in(once);
    CHECK(ClosedFamily::parse(in).serialize() == once);
}

TEST_CASE("closure_from_family rejects non-intersection-closed input") {
    VertexSet a(3), b(3);
    a.add(0);
    a.add(1);
    b.add(1);
    b.add(2);
    // {0,1} ∩ {1,2} = {1} missing.
    ClosedFamily fam(3, {a, b, VertexSet::full(3)});
    CHECK(fam.intersection_closed_witness().has_value());
    CHECK_THROWS(closure_from_family(fam));
    CHECK_THROWS(closure_from_family(ClosedFamily(3, {a})));  // universe missing
}

TEST_CASE("image enumeration: lectic equals exhaustive on C4") {
    Graph g = cycle_graph(4);
    auto cl = conv_oracle(g, all_pairs_distances(g));
    auto lectic = enumerate_images(cl, ImageStrategy::Lectic);
    auto exhaustive = enumerate_images(cl, ImageStrategy::Exhaustive);
    CHECK(lectic.size() == 10);
    CHECK(lectic.sets() == exhaustive.sets());
    CHECK(lectic.has_universe_set());
    CHECK_FALSE(lectic.intersection_closed_witness().has_value());
}

TEST_CASE("image budget is enforced") {
    Graph g = cycle_graph(5);
    auto cl = conv_oracle(g, all_pairs_distances(g));
    CHECK_THROWS(enumerate_images(cl, ImageStrategy::Lectic, 3));
}

TEST_CASE("lectic order property") {
    VertexSet a(4), b(4);
    a.add(1);
    b.add(0);
    CHECK(lectic_less(a, b));  // smallest differing element 0 belongs to b
    CHECK_FALSE(lectic_less(b, a));
    CHECK_FALSE(lectic_less(a, a));
    // Every family's canonical enumeration revisits no image.
    Graph g = cycle_graph(6);
    auto cl = conv_oracle(g, all_pairs_distances(g));
    auto fam = enumerate_images(cl, ImageStrategy::Lectic);
    for (const auto& s : fam.sets()) CHECK(cl.evaluate(s) == s);
}
