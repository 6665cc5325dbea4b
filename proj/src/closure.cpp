#include "hullkit/closure.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hullkit/subsets.hpp"

namespace hullkit {

PseudoClosureOracle identity_closure(int universe) {
    return PseudoClosureOracle(
        universe, [](const VertexSet& x) { return x; },
        [](const VertexSet& image, int w) { return image.with(w); });
}

namespace {

VertexSet from_mask(int n, std::uint32_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.add(v);
    return s;
}

}  // namespace

OperatorClassification classify_exhaustive(const PseudoClosureOracle& oracle) {
    int n = oracle.universe;
    if (n > kMaxExhaustiveUniverse)
        throw std::invalid_argument("classify: universe too large for exhaustive mode");

    std::vector<std::uint32_t> value_mask(std::size_t(1) << n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet fx = oracle.evaluate(from_mask(n, mask));
        std::uint32_t fm = 0;
        for (int v : fx.elements()) fm |= 1u << v;
        value_mask[mask] = fm;
    }

    OperatorClassification c;
    c.exhaustive = true;
    c.extensive = c.increasing = c.idempotent = true;
    c.pseudo_closure_law = c.size_increasing = c.atomistic = true;

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::uint32_t fm = value_mask[mask];
        if ((mask & ~fm) != 0) c.extensive = false;
        if (value_mask[fm] != fm) c.idempotent = false;
        // Subsets X of mask: increasing and size-increasing checks.
        for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            std::uint32_t fs = value_mask[sub];
            if ((fs & ~fm) != 0) c.increasing = false;
            if (fs != fm && __builtin_popcount(fs) >= __builtin_popcount(fm))
                c.size_increasing = false;
            if (sub == 0) break;
        }
    }
    for (std::uint32_t x = 0; x < (1u << n) && c.pseudo_closure_law; ++x)
        for (std::uint32_t y = x; y < (1u << n); ++y)
            if (value_mask[x | y] != value_mask[value_mask[x] | value_mask[y]]) {
                c.pseudo_closure_law = false;
                break;
            }
    for (int v = 0; v < n; ++v)
        if (value_mask[1u << v] != (1u << v)) c.atomistic = false;
    return c;
}

OperatorClassification classify_sampled(const PseudoClosureOracle& oracle, unsigned seed,
                                        long trials) {
    int n = oracle.universe;
    std::mt19937 rng(seed);
    auto random_set = [&]() {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1u) s.add(v);
        return s;
    };

    OperatorClassification c;
    c.exhaustive = false;
    c.seed = seed;
    c.trials = trials;
    c.extensive = c.increasing = c.idempotent = true;
    c.pseudo_closure_law = c.size_increasing = c.atomistic = true;

    for (int v = 0; v < n; ++v) {
        VertexSet sing(n, {v});
        if (oracle.evaluate(sing) != sing) c.atomistic = false;
    }
    for (long t = 0; t < trials; ++t) {
        VertexSet x = random_set();
        VertexSet y = random_set();
        VertexSet fx = oracle.evaluate(x);
        VertexSet fy = oracle.evaluate(y);
        if (!x.subset_of(fx)) c.extensive = false;
        if (oracle.evaluate(fx) != fx) c.idempotent = false;
        VertexSet sub = x & y;  // sub ⊆ y
        VertexSet fsub = oracle.evaluate(sub);
        if (!fsub.subset_of(fy)) c.increasing = false;
        if (fsub != fy && fsub.size() >= fy.size()) c.size_increasing = false;
        if (oracle.evaluate(x | y) != oracle.evaluate(fx | fy)) c.pseudo_closure_law = false;
    }
    return c;
}

ClosedFamily::ClosedFamily(int universe, std::vector<VertexSet> sets)
    : universe_(universe), sets_(std::move(sets)) {
    for (const auto& s : sets_)
        if (s.universe() != universe_)
            throw std::invalid_argument("ClosedFamily: mismatched universes");
    std::sort(sets_.begin(), sets_.end(), VertexSet::canonical_less);
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ClosedFamily::contains(const VertexSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, VertexSet::canonical_less);
}

bool ClosedFamily::has_universe_set() const { return contains(VertexSet::full(universe_)); }

std::optional<std::pair<VertexSet, VertexSet>> ClosedFamily::intersection_closed_witness()
    const {
    for (std::size_t i = 0; i < sets_.size(); ++i)
        for (std::size_t j = i + 1; j < sets_.size(); ++j)
            if (!contains(sets_[i] & sets_[j])) return std::make_pair(sets_[i], sets_[j]);
    return std::nullopt;
}

ClosedFamily ClosedFamily::parse(std::istream& in) {
    std::string header;
    while (std::getline(in, header)) {
        auto hash = header.find('#');
        if (hash != std::string::npos) header.erase(hash);
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream hs(header);
    std::string kw_universe, kw_count;
    int n = -1, k = -1;
    if (!(hs >> kw_universe >> n >> kw_count >> k) || kw_universe != "universe" ||
        kw_count != "count" || n < 0 || k < 0)
        throw std::invalid_argument("ClosedFamily: bad header, expected `universe N count K`");
    std::vector<VertexSet> sets;
    std::string line;
    while (int(sets.size()) < k && std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        VertexSet s(n);
        std::istringstream ls(line);
        int v;
        while (ls >> v) s.add(v);
        sets.push_back(s);
    }
    if (int(sets.size()) != k)
        throw std::invalid_argument("ClosedFamily: expected " + std::to_string(k) + " set lines");
    return ClosedFamily(n, std::move(sets));
}

ClosedFamily ClosedFamily::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    return parse(in);
}

std::string ClosedFamily::serialize() const {
    std::ostringstream out;
    out << "universe " << universe_ << " count " << sets_.size() << '\n';
    for (const auto& s : sets_) {
        bool first = true;
        for (int v : s.elements()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

PseudoClosureOracle closure_from_family(const ClosedFamily& fam) {
    if (!fam.has_universe_set())
        throw std::invalid_argument("closure_from_family: family lacks the full universe");
    if (auto w = fam.intersection_closed_witness())
        throw std::invalid_argument("closure_from_family: not intersection-closed, witness " +
                                    w->first.to_string() + " and " + w->second.to_string());
    auto sets = std::make_shared<std::vector<VertexSet>>(fam.sets());
    int n = fam.universe();
    auto eval = [sets, n](const VertexSet& x) {
        VertexSet out = VertexSet::full(n);
        for (const auto& s : *sets)
            if (x.subset_of(s)) out &= s;
        return out;
    };
    return PseudoClosureOracle(n, eval);
}

PseudoClosureOracle punctured(const PseudoClosureOracle& cl, const VertexSet& x_big,
                              const VertexSet& x_small) {
    if (x_small.empty()) throw std::invalid_argument("punctured: x_small must be nonempty");
    if (!x_small.subset_of(x_big))
        throw std::invalid_argument("punctured: x_small must be a subset of x_big");
    auto eval = cl.evaluate;
    return PseudoClosureOracle(cl.universe, [eval, x_big, x_small](const VertexSet& y) {
        return eval(y | x_big) - x_small;
    });
}

bool lectic_less(const VertexSet& a, const VertexSet& b) {
    VertexSet diff = (a - b) | (b - a);
    int v = diff.min_element();
    return v >= 0 && b.contains(v);
}

namespace {

ClosedFamily enumerate_images_lectic(const PseudoClosureOracle& oracle, std::size_t budget) {
    int n = oracle.universe;
    std::vector<VertexSet> out;
    VertexSet cur = oracle.evaluate(VertexSet(n));
    VertexSet all = VertexSet::full(n);
    for (;;) {
        out.push_back(cur);
        if (out.size() > budget)
            throw std::runtime_error("enumerate_images: closed-set budget exceeded");
        if (cur == all) break;
        bool advanced = false;
        for (int i = n - 1; i >= 0; --i) {
            if (cur.contains(i)) continue;
            VertexSet prefix(n);
            for (int v = 0; v < i; ++v)
                if (cur.contains(v)) prefix.add(v);
            prefix.add(i);
            VertexSet next = oracle.evaluate(prefix);
            // Valid step iff next introduces nothing below i.
            bool ok = true;
            for (int v = 0; v < i && ok; ++v)
                if (next.contains(v) && !cur.contains(v)) ok = false;
            if (ok) {
                cur = next;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::runtime_error(
                "enumerate_images: lectic traversal stalled; operator is not a closure");
    }
    return ClosedFamily(n, std::move(out));
}

ClosedFamily enumerate_images_exhaustive(const PseudoClosureOracle& oracle,
                                         std::size_t budget) {
    int n = oracle.universe;
    if (n > kMaxExhaustiveUniverse)
        throw std::invalid_argument("enumerate_images: universe too large for exhaustive mode");
    std::unordered_set<VertexSet, VertexSet::Hash> seen;
    for_each_subset(n, [&](const VertexSet& x) {
        seen.insert(oracle.evaluate(x));
        if (seen.size() > budget)
            throw std::runtime_error("enumerate_images: closed-set budget exceeded");
        return true;
    });
    return ClosedFamily(n, std::vector<VertexSet>(seen.begin(), seen.end()));
}

}  // namespace

ClosedFamily enumerate_images(const PseudoClosureOracle& oracle, ImageStrategy strategy,
                              std::size_t budget) {
    switch (strategy) {
        case ImageStrategy::Lectic:
            return enumerate_images_lectic(oracle, budget);
        case ImageStrategy::Exhaustive:
            return enumerate_images_exhaustive(oracle, budget);
    }
    throw std::logic_error("enumerate_images: unknown strategy");
}

}  // namespace hullkit
