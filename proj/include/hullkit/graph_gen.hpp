#pragma once

#include <cstdint>
#include <vector>

#include "hullkit/graph.hpp"

namespace hullkit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph hypercube_graph(int d);
Graph star_graph(int leaves);

/// All connected graphs on n <= 7 vertices, one representative per
/// isomorphism class, built by incremental augmentation with canonical
///-form deduplication.
std::vector<Graph> connected_graphs_up_to_iso(int n);

/// All trees on n vertices up to isomorphism, via Pruefer sequences with
/// canonical-form deduplication.
std::vector<Graph> trees_up_to_iso(int n);

/// Seeded random connected graph: random spanning tree plus each
/// remaining pair independently with probability p (percent).
Graph random_connected_graph(int n, std::uint32_t seed, int edge_percent = 50);

}  // namespace hullkit
