#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hullkit/vertex_set.hpp"

namespace hullkit {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(std::size_t(n)) {}

    int n() const { return n_; }
    int edge_count() const;
    const std::vector<int>& neighbors(int v) const { return adj_[std::size_t(v)]; }
    int degree(int v) const { return int(adj_[std::size_t(v)].size()); }

    /// Inserts an undirected edge; loops are rejected, duplicates ignored.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;

    /// Appends a fresh vertex and returns its id.
    int add_vertex();

    /// Text format: header `n m`, then one `u v` line per edge.
    /// Blank lines and `#` comments are ignored.
    static Graph parse(std::istream& in);
    static Graph parse_string(const std::string& text);
    static Graph load(const std::string& path);
    std::string serialize() const;

private:
    void check(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// All-pairs distances with an explicit unreachable sentinel.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> data) : n_(n), d_(std::move(data)) {}

    int n() const { return n_; }
    int at(int u, int v) const { return d_[std::size_t(u) * std::size_t(n_) + std::size_t(v)]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

    /// Largest finite entry; -1 for the empty graph.
    int diameter() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

/// Isometric binary-vector embedding of a partial cube.
struct CubeEmbedding {
    int d = 0;
    /// coordinates[v] has bit e set iff vertex v takes value 1 on coordinate e.
    std::vector<VertexSet> coordinates;

    int hamming(int u, int v) const {
        return (coordinates[std::size_t(u)] - coordinates[std::size_t(v)]).size() +
               (coordinates[std::size_t(v)] - coordinates[std::size_t(u)]).size();
    }
};

DistanceMatrix all_pairs_distances(const Graph& g);
bool is_connected(const Graph& g);

/// Vertices on at least one shortest u-v path. Throws when u, v are in
/// different components.
VertexSet interval(const Graph& g, const DistanceMatrix& dist, int u, int v);

/// Convex hull of s: least fixpoint of adding intervals between members.
/// Requires a connected graph.
VertexSet conv(const Graph& g, const DistanceMatrix& dist, const VertexSet& s);
VertexSet conv(const Graph& g, const VertexSet& s);

bool is_convex(const Graph& g, const DistanceMatrix& dist, const VertexSet& s);

/// True iff the subgraph induced by s preserves all ambient distances
/// between members of s.
bool is_isometric(const Graph& g, const DistanceMatrix& dist, const VertexSet& s);

/// Number of distinct shortest u-v paths (BFS DAG counting).
std::uint64_t count_shortest_paths(const Graph& g, int u, int v);

/// Djokovic-Winkler embedding; empty when g is not a partial cube.
std::optional<CubeEmbedding> hypercube_embedding(const Graph& g);

}  // namespace hullkit
