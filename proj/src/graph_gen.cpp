#include "hullkit/graph_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <stdexcept>

namespace hullkit {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph hypercube_graph(int d) {
    Graph g(1 << d);
    for (int u = 0; u < (1 << d); ++u)
        for (int b = 0; b < d; ++b)
            if (!(u >> b & 1)) g.add_edge(u, u | (1 << b));
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

namespace {

using AdjMask = std::vector<std::uint16_t>;  // adjacency rows, n <= 8

// Minimum edge-set encoding over all vertex permutations.
std::uint64_t canonical_code(const AdjMask& a) {
    int n = int(a.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (a[std::size_t(perm[std::size_t(u)])] >> perm[std::size_t(v)] & 1)
                    code |= std::uint64_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool mask_connected(const AdjMask& a) {
    int n = int(a.size());
    if (n == 0) return true;
    std::uint16_t seen = 1;
    std::uint16_t frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= a[std::size_t(v)];
        frontier = std::uint16_t(next & ~seen);
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

Graph from_mask(const AdjMask& a) {
    int n = int(a.size());
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a[std::size_t(u)] >> v & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("connected_graphs_up_to_iso: need 1 <= n <= 7");
    // Grow all graphs (connected or not) by one vertex at a time; only
    // the final level is filtered for connectivity.
    std::vector<AdjMask> level{AdjMask{0}};
    for (int size = 2; size <= n; ++size) {
        std::set<std::uint64_t> seen;
        std::vector<AdjMask> next;
        for (const auto& base : level) {
            for (std::uint16_t nb = 0; nb < (1u << (size - 1)); ++nb) {
                AdjMask a = base;
                a.push_back(nb);
                for (int v = 0; v < size - 1; ++v)
                    if (nb >> v & 1) a[std::size_t(v)] |= std::uint16_t(1u << (size - 1));
                if (seen.insert(canonical_code(a)).second) next.push_back(a);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& a : level)
        if (mask_connected(a)) out.push_back(from_mask(a));
    return out;
}

namespace {

// AHU canonical string of a tree rooted at r.
std::string ahu(const Graph& g, int r, int parent) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(r))
        if (w != parent) kids.push_back(ahu(g, w, r));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

std::string tree_canonical(const Graph& g) {
    // Root at the (one or two) centers for a form independent of labels.
    int n = g.n();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> order;
    std::vector<bool> removed(std::size_t(n), false);
    for (int v = 0; v < n; ++v) deg[std::size_t(v)] = g.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[std::size_t(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[std::size_t(v)] = true;
            --remaining;
            for (int w : g.neighbors(v))
                if (!removed[std::size_t(w)] && --deg[std::size_t(w)] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<std::string> forms;
    for (int c : layer)
        if (!removed[std::size_t(c)]) forms.push_back(ahu(g, c, -1));
    std::sort(forms.begin(), forms.end());
    std::string out;
    for (const auto& f : forms) out += f;
    return out;
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> deg(std::size_t(n), 1);
    for (int v : seq) ++deg[std::size_t(v)];
    Graph g(n);
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[std::size_t(v)] == 1) leaves.insert(v);
    std::vector<int> rest = seq;
    for (int v : rest) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, v);
        if (--deg[std::size_t(v)] == 1) leaves.insert(v);
    }
    auto it = leaves.begin();
    int a = *it++;
    int b = *it;
    g.add_edge(a, b);
    return g;
}

}  // namespace

std::vector<Graph> trees_up_to_iso(int n) {
    if (n < 1) throw std::invalid_argument("trees_up_to_iso: need n >= 1");
    if (n == 1) return {Graph(1)};
    if (n == 2) return {path_graph(2)};
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<int> seq(std::size_t(n - 2), 0);
    for (;;) {
        Graph t = tree_from_pruefer(seq, n);
        if (seen.insert(tree_canonical(t)).second) out.push_back(t);
        int i = n - 3;
        while (i >= 0 && seq[std::size_t(i)] == n - 1) seq[std::size_t(i--)] = 0;
        if (i < 0) break;
        ++seq[std::size_t(i)];
    }
    return out;
}

Graph random_connected_graph(int n, std::uint32_t seed, int edge_percent) {
    std::mt19937 rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        int parent = int(rng() % std::uint32_t(v));
        g.add_edge(parent, v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && int(rng() % 100) < edge_percent) g.add_edge(u, v);
    return g;
}

}  // namespace hullkit
