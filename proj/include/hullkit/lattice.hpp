#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullkit/closure.hpp"
#include "hullkit/graph.hpp"
#include "hullkit/vertex_set.hpp"

namespace hullkit {

// Inclusion lattice of an intersection-closed family containing the
// universe. Elements are stored in canonical (size, lex) order; the cover
// relation is the transitive reduction of inclusion, indexed into
// `elements`.
struct Lattice {
    int universe = 0;
    std::vector<VertexSet> elements;
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) indices
    std::size_t bottom = 0;
    std::size_t top = 0;

    std::size_t size() const { return elements.size(); }
    std::optional<std::size_t> index_of(const VertexSet& s) const;
    std::vector<std::size_t> lower_covers(std::size_t idx) const;
    std::vector<std::size_t> upper_covers(std::size_t idx) const;
    // Atoms: upper covers of the bottom.
    std::vector<std::size_t> atoms() const { return upper_covers(bottom); }
};

// Throws std::invalid_argument if the family is not intersection-closed or
// lacks the universe set.
Lattice build_lattice(const ClosedFamily& fam);

// Elements with exactly one lower cover, in canonical order.
std::vector<VertexSet> join_irreducibles(const Lattice& lat);

// True iff every element is the smallest element containing the union of
// the atoms below it.
bool is_atomistic(const Lattice& lat);

struct GradednessResult {
    bool graded = true;
    // On failure: two maximal bottom-to-top chains of different lengths,
    // as element indices from bottom to top.
    std::vector<std::size_t> short_chain;
    std::vector<std::size_t> long_chain;
};

GradednessResult is_graded(const Lattice& lat);

struct NongradedExample {
    Graph graph;
    GradednessResult witness;
};

// Graphs with a non-graded geodesic-convexity lattice: exhaustive over
// connected graphs up to 5 vertices, then seeded random sampling for
// 6..max_n. Requires max_n <= 9.
std::vector<NongradedExample> find_nongraded(int max_n, unsigned seed = 0x5eed,
                                             int samples_per_size = 200);

// Hasse diagram in Graphviz DOT format, edges pointing upward.
std::string lattice_to_dot(const Lattice& lat);

}  // namespace hullkit
