#include "hullkit/mingen.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hullkit/subsets.hpp"

namespace hullkit {

const VertexSet& GeneratorTable::label_of(const VertexSet& image) const {
    auto it = labels.find(image);
    if (it == labels.end())
        throw std::invalid_argument("GeneratorTable: set " + image.to_string() +
                                    " is not a recorded image");
    return it->second;
}

GeneratorTable min_gen(const PseudoClosureOracle& oracle, const ClosedFamily& images) {
    int n = oracle.universe;
    GeneratorTable table;
    table.universe = n;
    table.images = images.sets();

    VertexSet f_empty = oracle.evaluate(VertexSet(n));
    for (const auto& h : table.images) table.labels[h] = h;
    auto f0 = table.labels.find(f_empty);
    if (f0 == table.labels.end())
        throw std::runtime_error("min_gen: images incomplete, witness " + VertexSet(n).to_string());
    f0->second = VertexSet(n);

    // Images grouped by size; within a size class the canonical order of
    // `images` is already lexicographic.
    bool cont = true;
    while (cont) {
        cont = false;
        ++table.while_iterations;
        // i = 0 included: extensions of label(f(∅)) must be explored too.
        for (int i = 0; i <= n; ++i) {
            for (const auto& y : table.images) {
                if (y.size() != i) continue;
                for (int z = 0; z < n; ++z) {
                    const VertexSet& label_y = table.labels.at(y);
                    if (label_y.contains(z)) continue;
                    VertexSet r = label_y.with(z);
                    VertexSet fr = oracle.extend(y, z);
                    auto it = table.labels.find(fr);
                    if (it == table.labels.end())
                        throw std::runtime_error("min_gen: images incomplete, witness " +
                                                 r.to_string());
                    if (r.size() < it->second.size()) {
                        assert(r.size() < it->second.size());  // labels never grow
                        it->second = r;
                        ++table.label_updates;
                        cont = true;
                    }
                }
            }
        }
    }
    return table;
}

GeneratorTable brute_force_min_gen(const PseudoClosureOracle& oracle) {
    int n = oracle.universe;
    if (n > kMaxExhaustiveUniverse)
        throw std::invalid_argument("brute_force_min_gen: universe too large");
    GeneratorTable table;
    table.universe = n;
    for_each_subset(n, [&](const VertexSet& x) {
        VertexSet fx = oracle.evaluate(x);
        if (table.labels.emplace(fx, x).second) table.images.push_back(fx);
        return true;
    });
    std::sort(table.images.begin(), table.images.end(), VertexSet::canonical_less);
    return table;
}

MgsResult mgs_decision(const PseudoClosureOracle& oracle, const ClosedFamily& images, int k) {
    VertexSet all = VertexSet::full(oracle.universe);
    if (!images.contains(all)) return {MgsResult::Verdict::Unreachable, std::nullopt};
    GeneratorTable table = min_gen(oracle, images);
    const VertexSet& gen = table.label_of(all);
    if (gen.size() <= k) return {MgsResult::Verdict::Yes, gen};
    return {MgsResult::Verdict::No, std::nullopt};
}

}  // namespace hullkit
