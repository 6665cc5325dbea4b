#include "hullkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hullkit {

void Graph::check(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    if (has_edge(u, v)) return;
    auto& au = adj_[std::size_t(u)];
    auto& av = adj_[std::size_t(v)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    const auto& au = adj_[std::size_t(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

int Graph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& a : adj_) deg += a.size();
    return int(deg / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[std::size_t(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return n_++;
}

namespace {

// Strips comments and yields whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.push_back(t);
    }
    return toks;
}

int to_int(const std::string& t) {
    std::size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("Graph: bad integer '" + t + "'");
    return v;
}

}  // namespace

Graph Graph::parse(std::istream& in) {
    auto toks = tokenize(in);
    std::size_t at = 0;
    if (at < toks.size() && toks[at] == "d")
        throw std::invalid_argument("Graph: got a digraph header, expected an undirected graph");
    if (toks.size() < 2) throw std::invalid_argument("Graph: missing `n m` header");
    int n = to_int(toks[at++]);
    int m = to_int(toks[at++]);
    if (n < 0 || m < 0) throw std::invalid_argument("Graph: negative header values");
    if (toks.size() - at != std::size_t(2 * m))
        throw std::invalid_argument("Graph: expected " + std::to_string(2 * m) +
                                    " endpoint tokens, found " + std::to_string(toks.size() - at));
    Graph g(n);
    for (int e = 0; e < m; ++e) {
        int u = to_int(toks[at++]);
        int v = to_int(toks[at++]);
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

Graph Graph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse(in);
}

std::string Graph::serialize() const {
    std::ostringstream out;
    auto es = edges();
    out << n_ << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

int DistanceMatrix::diameter() const {
    int best = -1;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) best = std::max(best, at(u, v));
    return best;
}

namespace {

void bfs(const Graph& g, int src, std::vector<int>& dist) {
    dist.assign(std::size_t(g.n()), DistanceMatrix::kUnreachable);
    dist[std::size_t(src)] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[std::size_t(w)] == DistanceMatrix::kUnreachable) {
                dist[std::size_t(w)] = dist[std::size_t(u)] + 1;
                q.push_back(w);
            }
        }
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.n();
    std::vector<int> data(std::size_t(n) * std::size_t(n), DistanceMatrix::kUnreachable);
    std::vector<int> row;
    for (int s = 0; s < n; ++s) {
        bfs(g, s, row);
        std::copy(row.begin(), row.end(), data.begin() + std::size_t(s) * std::size_t(n));
    }
    return DistanceMatrix(n, std::move(data));
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<int> dist;
    bfs(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == DistanceMatrix::kUnreachable; });
}

VertexSet interval(const Graph& g, const DistanceMatrix& dist, int u, int v) {
    if (!dist.reachable(u, v))
        throw std::invalid_argument("interval: vertices in different components");
    VertexSet s(g.n());
    int duv = dist.at(u, v);
    for (int w = 0; w < g.n(); ++w)
        if (dist.reachable(u, w) && dist.reachable(w, v) &&
            dist.at(u, w) + dist.at(w, v) == duv)
            s.add(w);
    return s;
}

VertexSet conv(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
    if (!is_connected(g)) throw std::invalid_argument("conv: graph must be connected");
    VertexSet cur = s;
    for (;;) {
        VertexSet next = cur;
        auto elems = cur.elements();
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j)
                next |= interval(g, dist, elems[i], elems[j]);
        if (next == cur) return cur;
        cur = next;
    }
}

VertexSet conv(const Graph& g, const VertexSet& s) {
    return conv(g, all_pairs_distances(g), s);
}

bool is_convex(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
    auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (!dist.reachable(elems[i], elems[j])) continue;
            if (!interval(g, dist, elems[i], elems[j]).subset_of(s)) return false;
        }
    return true;
}

bool is_isometric(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
    auto elems = s.elements();
    if (elems.empty()) return true;
    // BFS inside the induced subgraph from each member.
    std::vector<int> inner(static_cast<std::size_t>(g.n()));
    for (int src : elems) {
        std::fill(inner.begin(), inner.end(), DistanceMatrix::kUnreachable);
        inner[std::size_t(src)] = 0;
        std::deque<int> q{src};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u)) {
                if (!s.contains(w)) continue;
                if (inner[std::size_t(w)] == DistanceMatrix::kUnreachable) {
                    inner[std::size_t(w)] = inner[std::size_t(u)] + 1;
                    q.push_back(w);
                }
            }
        }
        for (int v : elems)
            if (inner[std::size_t(v)] != dist.at(src, v)) return false;
    }
    return true;
}

std::uint64_t count_shortest_paths(const Graph& g, int u, int v) {
    std::vector<int> dist;
    bfs(g, u, dist);
    if (dist[std::size_t(v)] == DistanceMatrix::kUnreachable)
        throw std::invalid_argument("count_shortest_paths: vertices in different components");
    // Count over the BFS DAG in distance order.
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return dist[std::size_t(a)] < dist[std::size_t(b)];
    });
    std::vector<std::uint64_t> cnt(std::size_t(g.n()), 0);
    cnt[std::size_t(u)] = 1;
    for (int w : order) {
        if (dist[std::size_t(w)] == DistanceMatrix::kUnreachable || w == u) continue;
        for (int p : g.neighbors(w))
            if (dist[std::size_t(p)] == dist[std::size_t(w)] - 1) cnt[std::size_t(w)] += cnt[std::size_t(p)];
    }
    return cnt[std::size_t(v)];
}

std::optional<CubeEmbedding> hypercube_embedding(const Graph& g) {
    int n = g.n();
    if (n == 0) return CubeEmbedding{};
    if (!is_connected(g)) return std::nullopt;
    auto dist = all_pairs_distances(g);
    auto es = g.edges();
    int m = int(es.size());

    // Djokovic-Winkler relation, closed transitively by union-find.
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [u, v] = es[std::size_t(i)];
            auto [x, y] = es[std::size_t(j)];
            if (dist.at(u, x) + dist.at(v, y) != dist.at(u, y) + dist.at(v, x))
                parent[std::size_t(find(i))] = find(j);
        }

    std::vector<int> klass(static_cast<std::size_t>(m));
    std::vector<int> rep;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (r == i) {
            klass[std::size_t(i)] = int(rep.size());
            rep.push_back(i);
        }
    }
    for (int i = 0; i < m; ++i) klass[std::size_t(i)] = klass[std::size_t(find(i))];
    int d = int(rep.size());

    CubeEmbedding emb;
    emb.d = d;
    emb.coordinates.assign(std::size_t(n), VertexSet(d));
    for (int e = 0; e < d; ++e) {
        auto [a, b] = es[std::size_t(rep[std::size_t(e)])];
        if (dist.at(0, a) > dist.at(0, b)) std::swap(a, b);
        if (dist.at(0, a) == dist.at(0, b)) return std::nullopt;  // odd cycle
        for (int v = 0; v < n; ++v) {
            if (dist.at(v, a) == dist.at(v, b)) return std::nullopt;
            if (dist.at(v, b) < dist.at(v, a)) emb.coordinates[std::size_t(v)].add(e);
        }
    }

    // Certify: injective, edges flip one coordinate, Hamming = distance.
    for (auto [u, v] : es)
        if (emb.hamming(u, v) != 1) return std::nullopt;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (emb.hamming(u, v) != dist.at(u, v)) return std::nullopt;
    return emb;
}

}  // namespace hullkit
