#include "hullkit/hulls.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hullkit/reductions.hpp"
#include "hullkit/subsets.hpp"

namespace hullkit {

PseudoClosureOracle conv_oracle(const Graph& g, const DistanceMatrix& dist) {
    if (!is_connected(g)) throw std::invalid_argument("conv_oracle: graph must be connected");
    Graph gc = g;
    DistanceMatrix dc = dist;
    return PseudoClosureOracle(g.n(), [gc, dc](const VertexSet& s) { return conv(gc, dc, s); });
}

HullNumberResult hull_number(const Graph& g, std::size_t image_budget) {
    auto dist = all_pairs_distances(g);
    auto oracle = conv_oracle(g, dist);
    ClosedFamily images = enumerate_images(oracle, ImageStrategy::Lectic, image_budget);
    GeneratorTable table = min_gen(oracle, images);
    VertexSet all = VertexSet::full(g.n());
    HullNumberResult res;
    res.witness = table.label_of(all);
    res.size = res.witness.size();
    res.while_iterations = table.while_iterations;
    res.label_updates = table.label_updates;
    res.image_count = images.size();
    return res;
}

namespace {

// Distances within the subgraph induced by s, from src.
std::vector<int> induced_bfs(const Graph& g, const VertexSet& s, int src) {
    std::vector<int> d(std::size_t(g.n()), DistanceMatrix::kUnreachable);
    d[std::size_t(src)] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u)) {
            if (!s.contains(w) || d[std::size_t(w)] != DistanceMatrix::kUnreachable) continue;
            d[std::size_t(w)] = d[std::size_t(u)] + 1;
            q.push_back(w);
        }
    }
    return d;
}

struct ViolatedPair {
    int u = -1, v = -1;
    long violation = 0;  // induced (or infinite) minus true distance
};

constexpr long kInfiniteViolation = 1L << 30;

// Worst violated pair in s, ties broken lexicographically; u = -1 when
// s is isometric.
ViolatedPair find_violated_pair(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
    ViolatedPair best;
    auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        auto d = induced_bfs(g, s, elems[i]);
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            int inner = d[std::size_t(elems[j])];
            int outer = dist.at(elems[i], elems[j]);
            long viol = (inner == DistanceMatrix::kUnreachable) ? kInfiniteViolation - outer
                                                                : long(inner - outer);
            if (viol > best.violation) best = {elems[i], elems[j], viol};
        }
    }
    return best;
}

// All shortest u-v paths as vertex sets, in DFS order over the BFS DAG;
// stops and reports overflow past `cap`.
bool enumerate_shortest_paths(const Graph& g, const DistanceMatrix& dist, int u, int v,
                              long long cap, std::vector<VertexSet>& out) {
    out.clear();
    // Iterative DFS from u towards v along distance-increasing edges.
    struct Frame {
        int vertex;
        std::size_t next_idx = 0;
    };
    std::vector<Frame> frames{{u, 0}};
    std::vector<int> pathv{u};
    int target_len = dist.at(u, v);
    while (!frames.empty()) {
        Frame& f = frames.back();
        int depth = int(frames.size()) - 1;
        if (f.vertex == v && depth == target_len) {
            VertexSet p(g.n());
            for (int w : pathv) p.add(w);
            out.push_back(p);
            if (static_cast<long long>(out.size()) > cap) return false;
            frames.pop_back();
            pathv.pop_back();
            continue;
        }
        const auto& nbrs = g.neighbors(f.vertex);
        bool pushed = false;
        while (f.next_idx < nbrs.size()) {
            int w = nbrs[f.next_idx++];
            // Stay on shortest u-v paths only.
            if (dist.at(u, w) == depth + 1 && dist.at(u, w) + dist.at(w, v) == target_len) {
                frames.push_back({w, 0});
                pathv.push_back(w);
                pushed = true;
                break;
            }
        }
        if (!pushed && (frames.empty() || frames.back().vertex == f.vertex)) {
            frames.pop_back();
            pathv.pop_back();
        }
    }
    return true;
}

struct ExactSearch {
    const Graph& g;
    const DistanceMatrix& dist;
    long long node_budget;
    long long path_cap;
    long long nodes = 0;
    bool exhausted = false;
    VertexSet best;
    std::vector<VertexSet> scratch_paths;

    void explore(const VertexSet& current) {
        if (exhausted) return;
        if (++nodes > node_budget) {
            exhausted = true;
            return;
        }
        if (current.size() >= best.size()) return;
        ViolatedPair vp = find_violated_pair(g, dist, current);
        if (vp.u < 0) {
            best = current;
            return;
        }
        if (enumerate_shortest_paths(g, dist, vp.u, vp.v, path_cap, scratch_paths)) {
            auto paths = scratch_paths;  // recursion reuses the scratch buffer
            for (const auto& p : paths) explore(current | p);
        } else {
            // Too many paths: branch on single interval vertices instead.
            VertexSet candidates = interval(g, dist, vp.u, vp.v) - current;
            for (int w : candidates.elements()) explore(current.with(w));
        }
    }
};

}  // namespace

HullResult iso_hull_greedy(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
    if (!is_connected(g)) throw std::invalid_argument("iso_hull_greedy: graph must be connected");
    HullResult res;
    res.method = HullResult::Method::Greedy;
    VertexSet cur = s;
    std::vector<VertexSet> paths;
    for (;;) {
        ViolatedPair vp = find_violated_pair(g, dist, cur);
        if (vp.u < 0) break;
        VertexSet pick;
        if (enumerate_shortest_paths(g, dist, vp.u, vp.v, kDefaultPathCap, paths)) {
            int best_new = -1;
            for (const auto& p : paths) {
                int added = (p - cur).size();
                if (best_new < 0 || added < best_new) {
                    best_new = added;
                    pick = p;
                }
            }
        } else {
            pick = paths.front();  // cap hit: first path in DFS (lex) order
        }
        cur |= pick;
        ++res.nodes_explored;
    }
    res.vertices = cur;
    res.size = cur.size();
    res.optimal = false;
    return res;
}

HullResult iso_hull_exact(const Graph& g, const DistanceMatrix& dist, const VertexSet& s,
                          long long node_budget, long long path_cap) {
    if (!is_connected(g)) throw std::invalid_argument("iso_hull_exact: graph must be connected");
    HullResult upper = iso_hull_greedy(g, dist, s);
    ExactSearch search{g, dist, node_budget, path_cap, 0, false, upper.vertices, {}};
    search.explore(s);
    HullResult res;
    res.method = HullResult::Method::Exact;
    res.vertices = search.best;
    res.size = search.best.size();
    res.nodes_explored = search.nodes;
    res.budget_exhausted = search.exhausted;
    res.optimal = !search.exhausted;
    return res;
}

HullResult iso_hull_enumerate(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
    if (g.n() > 20) throw std::invalid_argument("iso_hull_enumerate: universe too large");
    if (!is_connected(g))
        throw std::invalid_argument("iso_hull_enumerate: graph must be connected");
    HullResult res;
    res.method = HullResult::Method::Enumerate;
    for_each_superset(s, [&](const VertexSet& cand) {
        ++res.nodes_explored;
        if (is_isometric(g, dist, cand)) {
            res.vertices = cand;
            return false;
        }
        return true;
    });
    res.size = res.vertices.size();
    res.optimal = true;
    return res;
}

HullSetVerdict is_hull_set(const Graph& g, const VertexSet& s, long long node_budget) {
    if (!is_connected(g)) throw std::invalid_argument("is_hull_set: graph must be connected");
    auto dist = all_pairs_distances(g);
    int n = g.n();
    if (n <= 15) {
        HullSetVerdict verdict{HullSetVerdict::Kind::HullSet, std::nullopt};
        for_each_superset(s, [&](const VertexSet& cand) {
            if (cand.size() == n) return true;
            if (is_isometric(g, dist, cand)) {
                verdict = {HullSetVerdict::Kind::NotHullSet, cand};
                return false;
            }
            return true;
        });
        return verdict;
    }
    HullResult r = iso_hull_exact(g, dist, s, node_budget);
    if (r.size < n) return {HullSetVerdict::Kind::NotHullSet, r.vertices};
    if (!r.budget_exhausted) return {HullSetVerdict::Kind::HullSet, std::nullopt};
    return {HullSetVerdict::Kind::Unknown, std::nullopt};
}

IsoHullNumberResult iso_hull_number(const Graph& g) {
    int n = g.n();
    if (n > 15) throw std::invalid_argument("iso_hull_number: n must be at most 15");
    if (!is_connected(g)) throw std::invalid_argument("iso_hull_number: graph must be connected");
    auto dist = all_pairs_distances(g);

    // Maximal proper isometric sets; a hull set is exactly a set meeting
    // every complement.
    std::vector<VertexSet> maximal;
    std::vector<VertexSet> isometric;
    for_each_subset(n, [&](const VertexSet& s) {
        if (s.size() < n && is_isometric(g, dist, s)) isometric.push_back(s);
        return true;
    });
    for (const auto& a : isometric) {
        bool is_max = true;
        for (const auto& b : isometric)
            if (a != b && a.subset_of(b)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(a);
    }

    IsoHullNumberResult res;
    for_each_subset(n, [&](const VertexSet& s) {
        for (const auto& m : maximal)
            if (s.subset_of(m)) return true;
        res = {s.size(), s};
        return false;
    });
    return res;
}

HullNumberResult hull_number_via_coordinate_reversal(const Graph& g) {
    auto emb = hypercube_embedding(g);
    if (!emb)
        throw std::invalid_argument("hull_number_via_coordinate_reversal: not a partial cube");
    CubeVectorSet cvs;
    cvs.d = emb->d;
    cvs.vectors = emb->coordinates;
    auto cr = coordinate_reversal_solve(cvs);
    if (!cr)
        throw std::logic_error(
            "hull_number_via_coordinate_reversal: infeasible reversal on a partial cube");
    HullNumberResult res;
    res.size = cr->size;
    res.witness = VertexSet(g.n());
    for (int idx : cr->witness.elements()) res.witness.add(idx);
    return res;
}

}  // namespace hullkit
