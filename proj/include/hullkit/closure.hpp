#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullkit/vertex_set.hpp"

namespace hullkit {

/// Evaluator for a set function f: 2^A -> 2^A with an incremental
/// single-element extension. `extend(f(X), w)` must equal f(X ∪ {w});
/// for pseudo-closures the default `evaluate(image ∪ {w})` is valid
/// because f(f(X) ∪ {w}) = f(f(X) ∪ f({w})) = f(X ∪ {w}).
struct PseudoClosureOracle {
    using Evaluate = std::function<VertexSet(const VertexSet&)>;
    using Extend = std::function<VertexSet(const VertexSet&, int)>;

    int universe = 0;
    Evaluate evaluate;
    Extend extend;

    PseudoClosureOracle() = default;
    PseudoClosureOracle(int universe_size, Evaluate eval, Extend ext = nullptr)
        : universe(universe_size), evaluate(std::move(eval)), extend(std::move(ext)) {
        if (!extend) {
            auto e = evaluate;
            extend = [e](const VertexSet& image, int w) { return e(image.with(w)); };
        }
    }
};

/// Identity operator; the simplest closure.
PseudoClosureOracle identity_closure(int universe);

struct OperatorClassification {
    bool extensive = false;
    bool increasing = false;
    bool idempotent = false;
    bool pseudo_closure_law = false;
    bool size_increasing = false;
    bool atomistic = false;

    bool exhaustive = false;  // sampled positives are only "not falsified"
    unsigned seed = 0;
    long trials = 0;

    bool is_closure() const { return extensive && increasing && idempotent; }
};

inline constexpr unsigned kDefaultClassifySeed = 0x5eed;
inline constexpr long kDefaultClassifyTrials = 10000;
inline constexpr int kMaxExhaustiveUniverse = 20;

/// Checks every axiom over all pairs X, Y. Universe must be at most 20.
OperatorClassification classify_exhaustive(const PseudoClosureOracle& oracle);

/// Checks axioms on uniformly sampled pairs; negatives are definitive.
OperatorClassification classify_sampled(const PseudoClosureOracle& oracle,
                                        unsigned seed = kDefaultClassifySeed,
                                        long trials = kDefaultClassifyTrials);

/// List of distinct subsets of a common universe, canonically sorted.
/// Whether it is intersection-closed and contains the universe is a
/// property of the source; `intersection_closed_witness` checks it.
class ClosedFamily {
public:
    ClosedFamily() = default;
    ClosedFamily(int universe, std::vector<VertexSet> sets);

    int universe() const { return universe_; }
    std::size_t size() const { return sets_.size(); }
    const std::vector<VertexSet>& sets() const { return sets_; }
    const VertexSet& at(std::size_t i) const { return sets_[i]; }
    bool contains(const VertexSet& s) const;

    bool has_universe_set() const;
    /// Returns a pair of members whose intersection is missing, if any.
    std::optional<std::pair<VertexSet, VertexSet>> intersection_closed_witness() const;

    /// Text format: header `universe N count K`, then K lines of sorted
    /// element indices (an empty line is the empty set).
    static ClosedFamily parse(std::istream& in);
    static ClosedFamily load(const std::string& path);
    std::string serialize() const;

private:
    int universe_ = 0;
    std::vector<VertexSet> sets_;
};

/// cl(X) = intersection of all members containing X. Throws (naming a
/// witness pair) unless the family is intersection-closed with universe.
PseudoClosureOracle closure_from_family(const ClosedFamily& fam);

/// Punctured operator Y -> cl(Y ∪ x_big) \ x_small. Requires
/// ∅ ≠ x_small ⊆ x_big; given a closure it is an increasing
/// pseudo-closure that is not extensive.
PseudoClosureOracle punctured(const PseudoClosureOracle& cl, const VertexSet& x_big,
                              const VertexSet& x_small);

enum class ImageStrategy {
    Lectic,      // NextClosure traversal; requires a closure
    Exhaustive,  // all 2^|A| evaluations; universe at most 20
};

inline constexpr std::size_t kDefaultImageBudget = 1'000'000;

/// All distinct images of the oracle, canonically sorted. Throws a
/// resource error when more than `budget` images are produced.
ClosedFamily enumerate_images(const PseudoClosureOracle& oracle, ImageStrategy strategy,
                              std::size_t budget = kDefaultImageBudget);

/// True iff a precedes b in lectic order (smallest differing element
/// belongs to b).
bool lectic_less(const VertexSet& a, const VertexSet& b);

}  // namespace hullkit
