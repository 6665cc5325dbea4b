#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullkit/closure.hpp"
#include "hullkit/graph.hpp"
#include "hullkit/vertex_set.hpp"

namespace hullkit {

// ---------------------------------------------------------------------------
// Instance types
// ---------------------------------------------------------------------------

struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // (tail, head), no self-loops

    void add_arc(int u, int v);
    // In-neighbors of v plus v itself.
    VertexSet closed_in_neighborhood(int v) const;

    // Format: "d <n> <m>" header, then one "u v" line per arc.
    static Digraph parse(std::istream& in);
    static Digraph parse_string(const std::string& text);
    static Digraph load(const std::string& path);
    std::string serialize() const;
};

struct HittingSetInstance {
    int universe = 0;
    std::vector<VertexSet> sets;
    int bound = -1;  // optional k; -1 when unspecified

    // Format: "universe <N> count <K>" header, then one line of
    // space-separated elements per set.
    static HittingSetInstance parse(std::istream& in);
    static HittingSetInstance parse_string(const std::string& text);
    static HittingSetInstance load(const std::string& path);
    std::string serialize() const;
};

struct CubeVectorSet {
    int d = 0;                      // hypercube dimension
    std::vector<VertexSet> vectors; // distinct 0/1 vectors, universe d
    int bound = -1;

    // Format: "dim <d> count <K>" header, then one 0/1 string per vector.
    static CubeVectorSet parse(std::istream& in);
    static CubeVectorSet parse_string(const std::string& text);
    static CubeVectorSet load(const std::string& path);
    std::string serialize() const;
};

struct Literal {
    int var = 0;          // 0-based variable index
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

struct CnfFormula {
    int n_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;  // 3 distinct variables each

    // DIMACS cnf; every clause must have exactly 3 literals.
    static CnfFormula parse_dimacs(std::istream& in);
    static CnfFormula parse_dimacs_string(const std::string& text);
    static CnfFormula load(const std::string& path);
    std::string serialize_dimacs() const;

    bool satisfied_by(const std::vector<bool>& assignment) const;
};

// Exists-forall instance; variables 0..n_x-1 are existential, the next n_y
// are universal. The formula is a disjunction of 3-literal conjunctive
// clauses (3-DNF).
struct QbfInstance {
    int n_x = 0;
    int n_y = 0;
    std::vector<std::array<Literal, 3>> clauses;

    // QDIMACS with one "e" line then one "a" line; clause lines are read
    // as conjunctive terms of the DNF.
    static QbfInstance parse_qdimacs(std::istream& in);
    static QbfInstance parse_qdimacs_string(const std::string& text);
    static QbfInstance load(const std::string& path);
    std::string serialize_qdimacs() const;

    bool formula_value(const std::vector<bool>& assignment) const;  // DNF value
};

// Named special vertices of a constructed gadget instance.
struct GadgetLayout {
    std::map<std::string, int> roles;                     // role name -> vertex id
    std::map<std::string, std::vector<int>> role_lists;   // e.g. whole paths
    std::map<std::string, std::string> aliases;           // identified-corner bookkeeping
    std::map<std::string, long long> params;              // alpha, beta, gamma, delta, n', s, ...

    int at(const std::string& role) const;
    // Throws if two roles resolve to the same vertex or any id is invalid.
    void validate(int n) const;
};

// ---------------------------------------------------------------------------
// Section 2.2 translations
// ---------------------------------------------------------------------------

// MGS <-> DOMINATING SET. The closure's ground set is the normalized
// vertex set (inclusion-free, pairwise-separated closed in-neighborhoods).
struct DominatingClosureResult {
    PseudoClosureOracle oracle;
    std::vector<int> survivors;            // normalized index -> original vertex
    std::vector<int> representative;       // original vertex -> surviving original vertex
    std::vector<VertexSet> normalized_sets;  // the antichain, over normalized indices

    // Dominating set (original vertex ids) -> equal-size generating set
    // (normalized indices).
    VertexSet to_generator(const VertexSet& dominating) const;
    // Generating set (normalized indices) -> dominating set (original ids).
    VertexSet to_dominating(const VertexSet& generator) const;
};

DominatingClosureResult dominating_to_closure(const Digraph& d);

// HITTING SET -> COORDINATE REVERSAL; min reversal = min hitting + 1.
struct HittingToCoordinateResult {
    CubeVectorSet cube;
    std::vector<int> element_of_vector;  // vector index -> original element, -1 for x
    std::vector<int> representative;     // original element -> surviving original element
    int x_index = -1;                    // index of the all-zero vector x

    // Hitting set (original elements) -> reversal of size |hitting|+1
    // (vector indices).
    VertexSet to_reversal(const VertexSet& hitting) const;
    // Reversal (vector indices) -> hitting set (original elements).
    VertexSet to_hitting(const VertexSet& reversal) const;
};

HittingToCoordinateResult hitting_to_coordinate(const HittingSetInstance& h);

// COORDINATE REVERSAL -> HITTING SET over the vector indices; family
// {X+_e, X-_e}. Infeasible when some coordinate is constant on X.
struct CoordinateToHittingResult {
    bool feasible = true;
    int constant_coordinate = -1;  // witness when infeasible
    HittingSetInstance instance;   // universe = |X|
};

CoordinateToHittingResult coordinate_to_hitting(const CubeVectorSet& c);

struct SolveResult {
    int size = 0;
    VertexSet witness;
};

// Exact minimum coordinate reversal (|X| <= 25); nullopt when infeasible.
std::optional<SolveResult> coordinate_reversal_solve(const CubeVectorSet& c);

// Rows of M_k: k vectors in dimension 2^k whose columns are all binary
// k-tuples. Requires k <= 5.
CubeVectorSet build_Mk_instance(int k);

// ---------------------------------------------------------------------------
// Section 3 gadgets
// ---------------------------------------------------------------------------

// gamma-triangle T_gamma (gamma odd, >= 3). Layout roles: x, y, z
// (corners), c (center); role_lists side_xy / side_yz / side_zx hold the
// outer boundary paths corner-to-corner.
std::pair<Graph, GadgetLayout> triangle_gadget(int gamma);

// HITTING SET -> minimum isometric hull on a diameter-3 bipartite
// incidence graph. Elements that lie in no family set are dropped (they can
// never be part of an optimal hitting set and would push the diameter to 4).
// A dummy element + singleton set is appended until two family sets are
// disjoint; target accounts for the shift.
struct HittingToIsohullResult {
    Graph graph;
    VertexSet terminals;  // S = {x} u set-vertices
    long long target = -1;  // bound + dummies + m_eff + 2, or -1 if no bound given
    GadgetLayout layout;

    // Indexed by original element id, then by dummy index; -1 marks an
    // element that lies in no set and has no vertex.
    std::vector<int> element_vertex;
    std::vector<int> set_vertex;      // effective set index -> vertex id
    int x_vertex = -1;
    int y_vertex = -1;
    int dummy_count = 0;  // dummy elements are the last `dummy_count` element indices

    // Hitting set (original elements) -> isometric hull vertex set.
    VertexSet to_hull(const VertexSet& hitting) const;
    // Isometric hull vertex set -> hitting set (original elements).
    VertexSet to_hitting(const VertexSet& hull) const;
};

HittingToIsohullResult hitting_to_isohull(const HittingSetInstance& h);

// Parameters for the 3-SAT and QSAT2 gadget builders; all must satisfy
// m < 2*alpha < 2*beta < gamma < 2*(alpha+beta), alpha/beta even, gamma odd.
struct GadgetParams {
    long long alpha = 0;
    long long beta = 0;
    long long gamma = 0;
};

// Smallest parameters satisfying the constraints plus the counting slack
// |T_gamma| - 3*gamma > m*gamma.
GadgetParams auto_gadget_params(int m);

// 3-CNF -> isometric hull instance. G = G0 plus
// a vertex q adjacent to the clause centers.
struct SatToIsohullResult {
    Graph g0;
    Graph g;  // same vertex ids as g0, plus q as the last vertex
    VertexSet terminals_g0;  // S = {r} u {d_i, g_i}
    VertexSet terminals_g;   // same set over g's universe
    long long target_g0 = 0;  // n*(alpha+2*beta) + m*gamma
    long long target_g = 0;   // |V(G)| - 1
    GadgetLayout layout;

    // Satisfying assignment -> the proof's subgraph H (vertex set in g0).
    VertexSet hull_from_assignment(const std::vector<bool>& assignment) const;
    // Isometric hull in g0 or g -> assignment (v_i true iff p_i in hull).
    std::vector<bool> assignment_from_hull(const VertexSet& hull) const;
};

SatToIsohullResult sat_to_isohull(const CnfFormula& phi,
                                  std::optional<GadgetParams> params = std::nullopt);

// Three-terminal wrapper: shrink the terminal set to three vertices
// {x, y, z}. Requires all pairwise distances within s to be even.
struct WrapThreeResult {
    Graph graph;
    VertexSet terminals;  // {x, y, z}
    long long target = 0;  // k + 2*s*n' + s + 1, from the layout parameters
    long long new_vertex_count = 0;  // |V(G')| - |V(G)| as actually built
    GadgetLayout layout;
};

WrapThreeResult wrap_three_terminals(const Graph& g, const VertexSet& s, long long k);

// QSAT2 (3-DNF, exists X forall Y) -> hull set
// instance with target 3*n_x + 2*n_y + 1.
struct Qsat2Result {
    Graph graph;
    long long target = 0;
    VertexSet mandatory;  // I: all degree-1 vertices (dd/gg pendants and r')
    GadgetLayout layout;

    // Assignment of X -> candidate hull set I u {s_1..s_nx}.
    VertexSet hullset_from_assignment(const std::vector<bool>& x_assignment) const;
    // Hull set -> X assignment (x_i true iff the chosen H^i vertex is on
    // the p side).
    std::vector<bool> assignment_from_hullset(const VertexSet& hullset) const;
};

Qsat2Result qsat2_to_hullset(const QbfInstance& q,
                             std::optional<GadgetParams> params = std::nullopt);

}  // namespace hullkit
