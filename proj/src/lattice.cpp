#include "hullkit/lattice.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hullkit/graph_gen.hpp"
#include "hullkit/hulls.hpp"

namespace hullkit {

std::optional<std::size_t> Lattice::index_of(const VertexSet& s) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), s, VertexSet::CanonicalLess{});
    if (it != elements.end() && *it == s) return std::size_t(it - elements.begin());
    return std::nullopt;
}

std::vector<std::size_t> Lattice::lower_covers(std::size_t idx) const {
    std::vector<std::size_t> out;
    for (const auto& [lo, hi] : covers)
        if (hi == idx) out.push_back(lo);
    return out;
}

std::vector<std::size_t> Lattice::upper_covers(std::size_t idx) const {
    std::vector<std::size_t> out;
    for (const auto& [lo, hi] : covers)
        if (lo == idx) out.push_back(hi);
    return out;
}

Lattice build_lattice(const ClosedFamily& fam) {
    if (!fam.has_universe_set())
        throw std::invalid_argument("build_lattice: family lacks the universe set");
    if (auto w = fam.intersection_closed_witness())
        throw std::invalid_argument("build_lattice: family not intersection-closed at " +
                                    w->first.to_string() + " and " + w->second.to_string());

    Lattice lat;
    lat.universe = fam.universe();
    lat.elements = fam.sets();  // already canonical (size, lex) order

    std::size_t k = lat.elements.size();
    // Canonical order is a linear extension: a ⊂ b implies a before b.
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (lat.elements[i].subset_of(lat.elements[j])) below[i][j] = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (std::size_t m = i + 1; m < j && cover; ++m)
                if (below[i][m] && below[m][j]) cover = false;
            if (cover) lat.covers.emplace_back(i, j);
        }
    lat.bottom = 0;
    lat.top = k - 1;
    return lat;
}

std::vector<VertexSet> join_irreducibles(const Lattice& lat) {
    std::vector<std::size_t> lower_count(lat.size(), 0);
    for (const auto& [lo, hi] : lat.covers) ++lower_count[hi];
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (lower_count[i] == 1) out.push_back(lat.elements[i]);
    return out;
}

namespace {

// Smallest element of the lattice containing s (the join of the elements
// below s, equivalently the family closure of s).
std::size_t smallest_containing(const Lattice& lat, const VertexSet& s) {
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (s.subset_of(lat.elements[i])) return i;  // canonical order: first hit is smallest
    throw std::logic_error("smallest_containing: no containing element (missing top?)");
}

}  // namespace

bool is_atomistic(const Lattice& lat) {
    auto atom_idx = lat.atoms();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (i == lat.bottom) continue;
        VertexSet unioned = lat.elements[lat.bottom];
        for (std::size_t a : atom_idx)
            if (lat.elements[a].subset_of(lat.elements[i])) unioned |= lat.elements[a];
        if (smallest_containing(lat, unioned) != i) return false;
    }
    return true;
}

GradednessResult is_graded(const Lattice& lat) {
    std::size_t k = lat.size();
    std::vector<std::vector<std::size_t>> ups(k);
    for (const auto& [lo, hi] : lat.covers) ups[lo].push_back(hi);

    // Longest and shortest bottom-to-top cover paths, with predecessor
    // links to reconstruct witness chains. Canonical element order is a
    // topological order.
    constexpr std::size_t kUnset = std::size_t(-1);
    std::vector<std::size_t> longest(k, 0), shortest(k, kUnset);
    std::vector<std::size_t> pred_long(k, kUnset), pred_short(k, kUnset);
    shortest[lat.bottom] = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (shortest[i] == kUnset) continue;  // unreachable from bottom (cannot happen)
        for (std::size_t j : ups[i]) {
            if (longest[i] + 1 > longest[j]) {
                longest[j] = longest[i] + 1;
                pred_long[j] = i;
            }
            if (shortest[i] + 1 < shortest[j]) {
                shortest[j] = shortest[i] + 1;
                pred_short[j] = i;
            }
        }
    }

    GradednessResult res;
    if (longest[lat.top] == shortest[lat.top] || k == 1) return res;
    res.graded = false;
    auto trace = [&](const std::vector<std::size_t>& pred) {
        std::vector<std::size_t> chain;
        for (std::size_t v = lat.top; v != kUnset; v = pred[v]) chain.push_back(v);
        std::reverse(chain.begin(), chain.end());
        return chain;
    };
    res.short_chain = trace(pred_short);
    res.long_chain = trace(pred_long);
    return res;
}

std::vector<NongradedExample> find_nongraded(int max_n, unsigned seed, int samples_per_size) {
    if (max_n > 9) throw std::invalid_argument("find_nongraded: max_n must be at most 9");
    std::vector<NongradedExample> out;
    auto check = [&](const Graph& g) {
        if (!is_connected(g)) return;
        auto dist = all_pairs_distances(g);
        auto oracle = conv_oracle(g, dist);
        ClosedFamily fam = enumerate_images(oracle, ImageStrategy::Lectic, kDefaultImageBudget);
        GradednessResult gr = is_graded(build_lattice(fam));
        if (!gr.graded) out.push_back({g, gr});
    };
    int exhaustive_cap = std::min(max_n, 5);
    for (int n = 1; n <= exhaustive_cap; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) check(g);
    std::mt19937 rng(seed);
    for (int n = 6; n <= max_n; ++n)
        for (int t = 0; t < samples_per_size; ++t) {
            int pct = int(rng() % 61) + 10;  // 10..70% extra edges
            check(random_connected_graph(n, rng(), pct));
        }
    return out;
}

std::string lattice_to_dot(const Lattice& lat) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto& e = lat.elements[i];
        os << "  n" << i << " [label=\"" << (e.size() == 0 ? std::string("{}") : e.to_string())
           << "\"];\n";
    }
    for (const auto& [lo, hi] : lat.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace hullkit
