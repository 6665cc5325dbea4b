#include "hullkit/oracles.hpp"

#include <stdexcept>

#include "hullkit/subsets.hpp"

namespace hullkit::oracles {

SolveResult dominating_set_exact(const Digraph& d) {
    if (d.n > 20) throw std::invalid_argument("dominating_set_exact: n too large");
    std::vector<VertexSet> needs;
    for (int v = 0; v < d.n; ++v) needs.push_back(d.closed_in_neighborhood(v));
    SolveResult res;
    for_each_subset(d.n, [&](const VertexSet& x) {
        for (const auto& s : needs)
            if (!s.intersects(x)) return true;
        res = {x.size(), x};
        return false;
    });
    return res;
}

std::optional<SolveResult> hitting_set_exact(const HittingSetInstance& h) {
    if (h.universe > 25) throw std::invalid_argument("hitting_set_exact: universe too large");
    for (const auto& s : h.sets)
        if (s.empty()) return std::nullopt;
    std::optional<SolveResult> res;
    for_each_subset(h.universe, [&](const VertexSet& x) {
        for (const auto& s : h.sets)
            if (!s.intersects(x)) return true;
        res = SolveResult{x.size(), x};
        return false;
    });
    return res;
}

SatResult sat_solve(const CnfFormula& phi) {
    if (phi.n_vars > 20) throw std::invalid_argument("sat_solve: too many variables");
    SatResult res;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << phi.n_vars); ++mask) {
        std::vector<bool> assignment(static_cast<std::size_t>(phi.n_vars));
        for (int v = 0; v < phi.n_vars; ++v) assignment[std::size_t(v)] = (mask >> v) & 1;
        if (phi.satisfied_by(assignment)) {
            res.satisfiable = true;
            res.assignment = assignment;
            return res;
        }
    }
    return res;
}

QsatResult qsat2_eval(const QbfInstance& q) {
    if (q.n_x + q.n_y > 16) throw std::invalid_argument("qsat2_eval: too many variables");
    QsatResult res;
    std::uint32_t x_limit = std::uint32_t(1) << q.n_x;
    std::uint32_t y_limit = std::uint32_t(1) << q.n_y;
    res.falsifying_y.resize(x_limit);
    bool some_x_works = false;
    for (std::uint32_t xm = 0; xm < x_limit; ++xm) {
        bool all_y = true;
        for (std::uint32_t ym = 0; ym < y_limit; ++ym) {
            std::vector<bool> assignment(static_cast<std::size_t>(q.n_x + q.n_y));
            for (int v = 0; v < q.n_x; ++v) assignment[std::size_t(v)] = (xm >> v) & 1;
            for (int v = 0; v < q.n_y; ++v) assignment[std::size_t(q.n_x + v)] = (ym >> v) & 1;
            if (!q.formula_value(assignment)) {
                all_y = false;
                std::vector<bool> y(static_cast<std::size_t>(q.n_y));
                for (int v = 0; v < q.n_y; ++v) y[std::size_t(v)] = (ym >> v) & 1;
                res.falsifying_y[xm] = y;
                break;
            }
        }
        if (all_y) some_x_works = true;
    }
    res.value = some_x_works;
    if (res.value) res.falsifying_y.clear();
    return res;
}

}  // namespace hullkit::oracles
