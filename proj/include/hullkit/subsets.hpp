#pragma once

#include <vector>

#include "hullkit/vertex_set.hpp"

namespace hullkit {

/// Visits every k-subset of {0..n-1} in lexicographic order on sorted
/// element lists. The callback receives the subset as a VertexSet and
/// returns false to stop early. Returns false if stopped.
template <class F>
bool for_each_k_subset(int n, int k, F&& fn) {
    if (k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s(n);
        for (int v : idx) s.add(v);
        if (!fn(s)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Visits all subsets of {0..n-1} in canonical (size, lex) order.
template <class F>
bool for_each_subset(int n, F&& fn) {
    for (int k = 0; k <= n; ++k)
        if (!for_each_k_subset(n, k, fn)) return false;
    return true;
}

/// Visits all subsets of {0..n-1} containing `base`, in (size, lex) order.
template <class F>
bool for_each_superset(const VertexSet& base, F&& fn) {
    int n = base.universe();
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (!base.contains(v)) free.push_back(v);
    int fn_count = int(free.size());
    for (int k = 0; k <= fn_count; ++k) {
        bool go = for_each_k_subset(fn_count, k, [&](const VertexSet& pick) {
            VertexSet s = base;
            for (int i : pick.elements()) s.add(free[std::size_t(i)]);
            return fn(s);
        });
        if (!go) return false;
    }
    return true;
}

}  // namespace hullkit
