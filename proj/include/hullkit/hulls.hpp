#pragma once

#include <cstddef>
#include <optional>

#include "hullkit/closure.hpp"
#include "hullkit/graph.hpp"
#include "hullkit/mingen.hpp"
#include "hullkit/vertex_set.hpp"

namespace hullkit {

/// The geodesic-convexity operator of g as a pseudo-closure oracle.
PseudoClosureOracle conv_oracle(const Graph& g, const DistanceMatrix& dist);

struct HullNumberResult {
    int size = 0;
    VertexSet witness;
    long long while_iterations = 0;
    long long label_updates = 0;
    std::size_t image_count = 0;
};

/// Minimum hull set: lectic image enumeration of conv followed by
/// min_gen. Throws a resource error past `image_budget` closed sets.
HullNumberResult hull_number(const Graph& g, std::size_t image_budget = kDefaultImageBudget);

struct HullResult {
    enum class Method { Exact, Greedy, Enumerate };
    VertexSet vertices;
    int size = 0;
    bool optimal = false;
    Method method = Method::Greedy;
    long long nodes_explored = 0;
    bool budget_exhausted = false;  // result is an upper bound only
};

inline constexpr long long kDefaultIsoHullBudget = 5'000'000;
inline constexpr long long kDefaultPathCap = 10'000;

/// Minimum isometric superset of s via branch-and-bound on violated
/// pairs, seeded with the greedy upper bound. On budget exhaustion the
/// result carries the best-known bound with budget_exhausted set.
HullResult iso_hull_exact(const Graph& g, const DistanceMatrix& dist, const VertexSet& s,
                          long long node_budget = kDefaultIsoHullBudget,
                          long long path_cap = kDefaultPathCap);

/// Repairs the worst violated pair with the shortest path introducing
/// fewest new vertices until isometric. Upper bound; never optimal.
HullResult iso_hull_greedy(const Graph& g, const DistanceMatrix& dist, const VertexSet& s);

/// Reference solver: plain (size, lex) enumeration of supersets of s.
/// Universe capped at 20.
HullResult iso_hull_enumerate(const Graph& g, const DistanceMatrix& dist, const VertexSet& s);

struct HullSetVerdict {
    enum class Kind { HullSet, NotHullSet, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<VertexSet> witness;  // a proper isometric superset
};

/// s is a hull set iff no proper isometric vertex subset of V contains
/// it. Exact for n <= 15; budgeted search (possibly Unknown) beyond.
HullSetVerdict is_hull_set(const Graph& g, const VertexSet& s,
                           long long node_budget = kDefaultIsoHullBudget);

struct IsoHullNumberResult {
    int size = 0;
    VertexSet witness;
};

/// Smallest hull set by brute force; n <= 15 only.
IsoHullNumberResult iso_hull_number(const Graph& g);

/// Partial-cube route: hull number through the coordinate-reversal
/// problem on the Djokovic-Winkler embedding. Throws when g is not a
/// partial cube.
HullNumberResult hull_number_via_coordinate_reversal(const Graph& g);

namespace oracles {
using hullkit::iso_hull_enumerate;
}

}  // namespace hullkit
