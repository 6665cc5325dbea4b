#pragma once

#include <optional>
#include <vector>

#include "hullkit/hulls.hpp"
#include "hullkit/mingen.hpp"
#include "hullkit/reductions.hpp"

namespace hullkit::oracles {

// Minimum set X such that every other vertex has an incoming arc from X
// (a vertex dominates itself). Requires n <= 20; witness is the first
// solution in canonical (size, lex) order.
SolveResult dominating_set_exact(const Digraph& d);

// Minimum hitting set by subset enumeration in (size, lex) order.
// Requires |U| <= 25; nullopt when the family contains an empty set.
std::optional<SolveResult> hitting_set_exact(const HittingSetInstance& h);

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;  // meaningful only when satisfiable
};

// Exhaustive assignment enumeration, n <= 20. The reported assignment is
// the numerically smallest satisfying one (variable 0 = lowest bit).
SatResult sat_solve(const CnfFormula& phi);

struct QsatResult {
    bool value = false;
    // When false: for every X assignment (indexed by bitmask, variable 0 =
    // lowest bit), a Y assignment falsifying the formula.
    std::vector<std::vector<bool>> falsifying_y;
};

// Exhaustive exists-forall evaluation of the DNF, n_x + n_y <= 16.
QsatResult qsat2_eval(const QbfInstance& q);

// brute_force_min_gen is re-exported from mingen.hpp (also under the alias
// min_generator_exhaustive) and iso_hull_enumerate from hulls.hpp, so that
// equivalence tests can name every oracle through this namespace.

}  // namespace hullkit::oracles
