#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "hullkit/closure.hpp"
#include "hullkit/vertex_set.hpp"

namespace hullkit {

/// Minimum-generator table: one label per image, plus instrumentation
/// counters. f(label(H)) = H is an invariant of construction.
struct GeneratorTable {
    int universe = 0;
    std::vector<VertexSet> images;  // canonical order
    std::unordered_map<VertexSet, VertexSet, VertexSet::Hash> labels;
    long long while_iterations = 0;
    long long label_updates = 0;

    const VertexSet& label_of(const VertexSet& image) const;
};

/// Dynamic-programming minimum-generator computation over the given
/// images. Precondition: `images` is exactly Im(oracle) and the oracle
/// satisfies the pseudo-closure law. Throws "images incomplete" with a
/// witness set when an evaluation escapes the table.
GeneratorTable min_gen(const PseudoClosureOracle& oracle, const ClosedFamily& images);

/// Independent reference: scans subsets in (size, lex) order and keeps
/// the first generator of each image. Universe at most 20.
GeneratorTable brute_force_min_gen(const PseudoClosureOracle& oracle);

struct MgsResult {
    enum class Verdict { Yes, No, Unreachable };
    Verdict verdict = Verdict::Unreachable;
    std::optional<VertexSet> witness;  // label of the full universe, for Yes
};

/// Is there X with |X| <= k and f(X) = A?
MgsResult mgs_decision(const PseudoClosureOracle& oracle, const ClosedFamily& images, int k);

namespace oracles {
/// Registered alias so equivalence tests name their oracle explicitly.
using hullkit::brute_force_min_gen;
inline GeneratorTable min_generator_exhaustive(const PseudoClosureOracle& oracle) {
    return brute_force_min_gen(oracle);
}
}  // namespace oracles

}  // namespace hullkit
