#include "hullkit/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hullkit/oracles.hpp"
#include "hullkit/subsets.hpp"

namespace hullkit {

namespace {

// Gadget graphs can be much larger than the default VertexSet guard; the
// guard is a sanity limit, not a hard capacity, so raise it as needed.
void ensure_universe_capacity(int n) {
    if (VertexSet::max_universe() < n) VertexSet::set_max_universe(n);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool next_content_line(std::istream& in, std::istringstream& out) {
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::string probe;
        if (ls >> probe) {
            out = std::istringstream(strip_comment(line));
            return true;
        }
    }
    return false;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Digraph
// ---------------------------------------------------------------------------

void Digraph::add_arc(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("Digraph: arc endpoint");
    if (u == v) throw std::invalid_argument("Digraph: self-loop");
    if (std::find(arcs.begin(), arcs.end(), std::make_pair(u, v)) == arcs.end())
        arcs.emplace_back(u, v);
}

VertexSet Digraph::closed_in_neighborhood(int v) const {
    VertexSet s(n);
    s.add(v);
    for (const auto& [a, b] : arcs)
        if (b == v) s.add(a);
    return s;
}

Digraph Digraph::parse(std::istream& in) {
    std::istringstream ls;
    if (!next_content_line(in, ls)) throw std::runtime_error("Digraph: empty input");
    std::string tag;
    int n = -1, m = -1;
    if (!(ls >> tag >> n >> m) || tag != "d" || n < 0 || m < 0)
        throw std::runtime_error("Digraph: expected header 'd <n> <m>'");
    Digraph d;
    d.n = n;
    ensure_universe_capacity(n);
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(in, ls)) throw std::runtime_error("Digraph: missing arc line");
        int u, v;
        if (!(ls >> u >> v)) throw std::runtime_error("Digraph: bad arc line");
        d.add_arc(u, v);
    }
    return d;
}

Digraph Digraph::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

Digraph Digraph::load(const std::string& path) { return parse_string(read_file(path)); }

std::string Digraph::serialize() const {
    std::ostringstream os;
    os << "d " << n << " " << arcs.size() << "\n";
    for (const auto& [u, v] : arcs) os << u << " " << v << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// HittingSetInstance
// ---------------------------------------------------------------------------

HittingSetInstance HittingSetInstance::parse(std::istream& in) {
    std::istringstream ls;
    if (!next_content_line(in, ls)) throw std::runtime_error("HittingSetInstance: empty input");
    std::string kw1, kw2;
    int n = -1, k = -1;
    if (!(ls >> kw1 >> n >> kw2 >> k) || kw1 != "universe" || kw2 != "count" || n < 0 || k < 0)
        throw std::runtime_error("HittingSetInstance: expected 'universe <N> count <K>'");
    ensure_universe_capacity(n);
    HittingSetInstance h;
    h.universe = n;
    for (int i = 0; i < k; ++i) {
        if (!next_content_line(in, ls)) throw std::runtime_error("HittingSetInstance: missing set");
        VertexSet s(n);
        int v;
        while (ls >> v) s.add(v);
        h.sets.push_back(s);
    }
    return h;
}

HittingSetInstance HittingSetInstance::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

HittingSetInstance HittingSetInstance::load(const std::string& path) {
    return parse_string(read_file(path));
}

std::string HittingSetInstance::serialize() const {
    std::ostringstream os;
    os << "universe " << universe << " count " << sets.size() << "\n";
    for (const auto& s : sets) {
        bool first = true;
        for (int v : s.elements()) {
            if (!first) os << " ";
            os << v;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CubeVectorSet
// ---------------------------------------------------------------------------

CubeVectorSet CubeVectorSet::parse(std::istream& in) {
    std::istringstream ls;
    if (!next_content_line(in, ls)) throw std::runtime_error("CubeVectorSet: empty input");
    std::string kw1, kw2;
    int d = -1, k = -1;
    if (!(ls >> kw1 >> d >> kw2 >> k) || kw1 != "dim" || kw2 != "count" || d < 0 || k < 0)
        throw std::runtime_error("CubeVectorSet: expected 'dim <d> count <K>'");
    ensure_universe_capacity(d);
    CubeVectorSet c;
    c.d = d;
    for (int i = 0; i < k; ++i) {
        if (!next_content_line(in, ls)) throw std::runtime_error("CubeVectorSet: missing vector");
        std::string bits;
        ls >> bits;
        if (int(bits.size()) != d) throw std::runtime_error("CubeVectorSet: bad vector length");
        VertexSet v(d);
        for (int e = 0; e < d; ++e) {
            if (bits[std::size_t(e)] == '1')
                v.add(e);
            else if (bits[std::size_t(e)] != '0')
                throw std::runtime_error("CubeVectorSet: vectors must be 0/1 strings");
        }
        if (std::find(c.vectors.begin(), c.vectors.end(), v) != c.vectors.end())
            throw std::runtime_error("CubeVectorSet: duplicate vector");
        c.vectors.push_back(v);
    }
    return c;
}

CubeVectorSet CubeVectorSet::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

CubeVectorSet CubeVectorSet::load(const std::string& path) {
    return parse_string(read_file(path));
}

std::string CubeVectorSet::serialize() const {
    std::ostringstream os;
    os << "dim " << d << " count " << vectors.size() << "\n";
    for (const auto& v : vectors) {
        for (int e = 0; e < d; ++e) os << (v.contains(e) ? '1' : '0');
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CnfFormula / QbfInstance
// ---------------------------------------------------------------------------

namespace {

std::array<Literal, 3> clause_from_dimacs(const std::vector<int>& lits, int n_vars,
                                          bool allow_repeats) {
    if (lits.size() != 3) throw std::runtime_error("formula: clauses must have 3 literals");
    std::array<Literal, 3> cl;
    for (int i = 0; i < 3; ++i) {
        int raw = lits[std::size_t(i)];
        int var = std::abs(raw) - 1;
        if (var < 0 || var >= n_vars) throw std::runtime_error("formula: literal out of range");
        cl[std::size_t(i)] = {var, raw > 0};
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (cl[std::size_t(i)].var != cl[std::size_t(j)].var) continue;
            if (!allow_repeats)
                throw std::runtime_error("formula: variable repeated in a clause");
            if (cl[std::size_t(i)].positive != cl[std::size_t(j)].positive)
                throw std::runtime_error("formula: variable used both ways in a clause");
        }
    return cl;
}

}  // namespace

CnfFormula CnfFormula::parse_dimacs(std::istream& in) {
    std::string line;
    CnfFormula f;
    int expected_clauses = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> f.n_vars >> expected_clauses) || cnf != "cnf")
                throw std::runtime_error("CnfFormula: bad problem line");
            continue;
        }
        if (expected_clauses < 0) throw std::runtime_error("CnfFormula: missing problem line");
        std::vector<int> lits;
        int raw;
        while (ls >> raw && raw != 0) lits.push_back(raw);
        if (lits.empty()) continue;
        f.clauses.push_back(clause_from_dimacs(lits, f.n_vars, false));
    }
    if (expected_clauses >= 0 && int(f.clauses.size()) != expected_clauses)
        throw std::runtime_error("CnfFormula: clause count mismatch");
    return f;
}

CnfFormula CnfFormula::parse_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

CnfFormula CnfFormula::load(const std::string& path) {
    return parse_dimacs_string(read_file(path));
}

std::string CnfFormula::serialize_dimacs() const {
    std::ostringstream os;
    os << "p cnf " << n_vars << " " << clauses.size() << "\n";
    for (const auto& cl : clauses) {
        for (const auto& lit : cl) os << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << " ";
        os << "0\n";
    }
    return os.str();
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& cl : clauses) {
        bool sat = false;
        for (const auto& lit : cl)
            if (assignment[std::size_t(lit.var)] == lit.positive) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

QbfInstance QbfInstance::parse_qdimacs(std::istream& in) {
    std::string line;
    int n_vars = -1, expected_clauses = -1;
    std::vector<int> exist_vars, univ_vars;
    std::vector<std::vector<int>> raw_clauses;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> n_vars >> expected_clauses))
                throw std::runtime_error("QbfInstance: bad problem line");
            continue;
        }
        if (line[0] == 'e' || line[0] == 'a') {
            std::string tag;
            ls >> tag;
            int v;
            auto& bucket = (line[0] == 'e') ? exist_vars : univ_vars;
            while (ls >> v && v != 0) bucket.push_back(v);
            continue;
        }
        if (n_vars < 0) throw std::runtime_error("QbfInstance: missing problem line");
        std::vector<int> lits;
        int raw;
        while (ls >> raw && raw != 0) lits.push_back(raw);
        if (!lits.empty()) raw_clauses.push_back(lits);
    }
    if (n_vars < 0) throw std::runtime_error("QbfInstance: missing problem line");
    if (int(exist_vars.size() + univ_vars.size()) != n_vars)
        throw std::runtime_error("QbfInstance: quantifier lines must cover all variables");
    // Map DIMACS variable names to 0-based indices: existentials first.
    std::vector<int> remap(std::size_t(n_vars) + 1, -1);
    int next = 0;
    for (int v : exist_vars) remap[std::size_t(v)] = next++;
    for (int v : univ_vars) {
        if (remap[std::size_t(v)] != -1)
            throw std::runtime_error("QbfInstance: variable quantified twice");
        remap[std::size_t(v)] = next++;
    }
    QbfInstance q;
    q.n_x = int(exist_vars.size());
    q.n_y = int(univ_vars.size());
    for (auto& lits : raw_clauses) {
        for (int& raw : lits) {
            int mapped = remap[std::size_t(std::abs(raw))];
            if (mapped < 0) throw std::runtime_error("QbfInstance: unquantified variable");
            raw = raw > 0 ? mapped + 1 : -(mapped + 1);
        }
        q.clauses.push_back(clause_from_dimacs(lits, n_vars, true));
    }
    if (expected_clauses >= 0 && int(q.clauses.size()) != expected_clauses)
        throw std::runtime_error("QbfInstance: clause count mismatch");
    return q;
}

QbfInstance QbfInstance::parse_qdimacs_string(const std::string& text) {
    std::istringstream in(text);
    return parse_qdimacs(in);
}

QbfInstance QbfInstance::load(const std::string& path) {
    return parse_qdimacs_string(read_file(path));
}

std::string QbfInstance::serialize_qdimacs() const {
    std::ostringstream os;
    os << "p cnf " << (n_x + n_y) << " " << clauses.size() << "\n";
    os << "e";
    for (int i = 0; i < n_x; ++i) os << " " << i + 1;
    os << " 0\na";
    for (int i = 0; i < n_y; ++i) os << " " << n_x + i + 1;
    os << " 0\n";
    for (const auto& cl : clauses) {
        for (const auto& lit : cl) os << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << " ";
        os << "0\n";
    }
    return os.str();
}

bool QbfInstance::formula_value(const std::vector<bool>& assignment) const {
    for (const auto& cl : clauses) {
        bool term = true;
        for (const auto& lit : cl)
            if (assignment[std::size_t(lit.var)] != lit.positive) {
                term = false;
                break;
            }
        if (term) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// GadgetLayout
// ---------------------------------------------------------------------------

int GadgetLayout::at(const std::string& role) const {
    auto it = roles.find(role);
    if (it == roles.end()) throw std::out_of_range("GadgetLayout: unknown role " + role);
    return it->second;
}

void GadgetLayout::validate(int n) const {
    std::set<int> seen;
    for (const auto& [name, v] : roles) {
        if (v < 0 || v >= n)
            throw std::logic_error("GadgetLayout: role " + name + " out of range");
        if (!seen.insert(v).second)
            throw std::logic_error("GadgetLayout: role " + name + " duplicates a vertex");
    }
    for (const auto& [name, list] : role_lists)
        for (int v : list)
            if (v < 0 || v >= n)
                throw std::logic_error("GadgetLayout: list " + name + " out of range");
}

// ---------------------------------------------------------------------------
// MGS <-> DOMINATING SET
// ---------------------------------------------------------------------------

namespace {

// Normalization shared by dominating_to_closure and hitting_to_coordinate:
// remove an element whenever another element hits every set it hits, and
// (optionally) drop family sets that strictly contain another set. Returns
// the representative chain over original element ids.
struct Normalized {
    std::vector<bool> element_alive;
    std::vector<bool> set_alive;
    std::vector<int> representative;  // original element -> original element
};

Normalized normalize_family(int universe, const std::vector<VertexSet>& sets, bool drop_supersets) {
    Normalized norm;
    norm.element_alive.assign(std::size_t(universe), true);
    norm.set_alive.assign(sets.size(), true);
    norm.representative.resize(std::size_t(universe));
    for (int v = 0; v < universe; ++v) norm.representative[std::size_t(v)] = v;

    auto restricted = [&](std::size_t i) {
        VertexSet s(universe);
        for (int v : sets[i].elements())
            if (norm.element_alive[std::size_t(v)]) s.add(v);
        return s;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        if (drop_supersets) {
            for (std::size_t i = 0; i < sets.size(); ++i) {
                if (!norm.set_alive[i]) continue;
                VertexSet si = restricted(i);
                for (std::size_t j = 0; j < sets.size(); ++j) {
                    if (i == j || !norm.set_alive[j]) continue;
                    VertexSet sj = restricted(j);
                    // Drop strict supersets; among duplicates keep the first.
                    if (sj.subset_of(si) && (si != sj || j < i)) {
                        norm.set_alive[i] = false;
                        changed = true;
                        break;
                    }
                }
            }
        }
        // membership profile of each alive element over alive sets
        std::vector<std::vector<std::size_t>> member(static_cast<std::size_t>(universe));
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!norm.set_alive[i]) continue;
            for (int v : sets[i].elements())
                if (norm.element_alive[std::size_t(v)]) member[std::size_t(v)].push_back(i);
        }
        for (int u = 0; u < universe; ++u) {
            if (!norm.element_alive[std::size_t(u)]) continue;
            for (int v = 0; v < universe; ++v) {
                if (u == v || !norm.element_alive[std::size_t(v)]) continue;
                bool dominated = std::includes(member[std::size_t(v)].begin(),
                                               member[std::size_t(v)].end(),
                                               member[std::size_t(u)].begin(),
                                               member[std::size_t(u)].end());
                // Among equal profiles keep the smaller id.
                if (dominated && !(member[std::size_t(u)] == member[std::size_t(v)] && v > u)) {
                    norm.element_alive[std::size_t(u)] = false;
                    norm.representative[std::size_t(u)] = v;
                    changed = true;
                    break;
                }
            }
        }
    }
    // Flatten representative chains.
    for (int v = 0; v < universe; ++v) {
        int r = v;
        while (norm.representative[std::size_t(r)] != r) r = norm.representative[std::size_t(r)];
        norm.representative[std::size_t(v)] = r;
    }
    return norm;
}

}  // namespace

VertexSet DominatingClosureResult::to_generator(const VertexSet& dominating) const {
    int np = int(survivors.size());
    std::vector<int> index_of(representative.size(), -1);
    for (int i = 0; i < np; ++i) index_of[std::size_t(survivors[std::size_t(i)])] = i;
    VertexSet gen(np);
    for (int v : dominating.elements())
        gen.add(index_of[std::size_t(representative[std::size_t(v)])]);
    // Pad collisions so that sizes match (any superset still generates).
    int want = std::min(dominating.size(), np);
    for (int i = 0; i < np && gen.size() < want; ++i) gen.add(i);
    return gen;
}

VertexSet DominatingClosureResult::to_dominating(const VertexSet& generator) const {
    VertexSet dom(int(representative.size()));
    for (int i : generator.elements()) dom.add(survivors[std::size_t(i)]);
    return dom;
}

DominatingClosureResult dominating_to_closure(const Digraph& d) {
    ensure_universe_capacity(d.n);
    std::vector<VertexSet> sets;
    sets.reserve(std::size_t(d.n));
    for (int v = 0; v < d.n; ++v) sets.push_back(d.closed_in_neighborhood(v));
    Normalized norm = normalize_family(d.n, sets, true);

    DominatingClosureResult res;
    res.representative = norm.representative;
    std::vector<int> index_of(std::size_t(d.n), -1);
    for (int v = 0; v < d.n; ++v)
        if (norm.element_alive[std::size_t(v)]) {
            index_of[std::size_t(v)] = int(res.survivors.size());
            res.survivors.push_back(v);
        }
    int np = int(res.survivors.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!norm.set_alive[i]) continue;
        VertexSet s(np);
        for (int v : sets[i].elements())
            if (index_of[std::size_t(v)] >= 0) s.add(index_of[std::size_t(v)]);
        res.normalized_sets.push_back(s);
    }
    auto family = res.normalized_sets;
    res.oracle = PseudoClosureOracle(np, [np, family](const VertexSet& x) {
        VertexSet out = VertexSet::full(np);
        for (const auto& s : family)
            if (!s.intersects(x)) out -= s;
        return out;
    });
    return res;
}

// ---------------------------------------------------------------------------
// HITTING SET <-> COORDINATE REVERSAL
// ---------------------------------------------------------------------------

VertexSet HittingToCoordinateResult::to_reversal(const VertexSet& hitting) const {
    int count = int(cube.vectors.size());
    std::vector<int> index_of(representative.size(), -1);
    for (int i = 0; i < count; ++i)
        if (element_of_vector[std::size_t(i)] >= 0)
            index_of[std::size_t(element_of_vector[std::size_t(i)])] = i;
    VertexSet rev(count);
    rev.add(x_index);
    for (int v : hitting.elements())
        rev.add(index_of[std::size_t(representative[std::size_t(v)])]);
    int want = std::min(hitting.size() + 1, count);
    for (int i = 0; i < count && rev.size() < want; ++i) rev.add(i);
    return rev;
}

VertexSet HittingToCoordinateResult::to_hitting(const VertexSet& reversal) const {
    VertexSet hit(int(representative.size()));
    for (int i : reversal.elements())
        if (element_of_vector[std::size_t(i)] >= 0) hit.add(element_of_vector[std::size_t(i)]);
    return hit;
}

HittingToCoordinateResult hitting_to_coordinate(const HittingSetInstance& h) {
    ensure_universe_capacity(h.universe);
    std::vector<VertexSet> sets = h.sets;
    sets.push_back(VertexSet::full(h.universe));  // the appended S_k = V
    Normalized norm = normalize_family(h.universe, sets, false);

    HittingToCoordinateResult res;
    res.representative = norm.representative;
    int d = int(sets.size());  // one coordinate per set; |S'| = 2d classes
    ensure_universe_capacity(d);
    res.cube.d = d;
    res.cube.bound = h.bound >= 0 ? h.bound + 1 : -1;
    for (int v = 0; v < h.universe; ++v) {
        if (!norm.element_alive[std::size_t(v)]) continue;
        VertexSet vec(d);
        for (int e = 0; e < d; ++e)
            if (sets[std::size_t(e)].contains(v)) vec.add(e);
        res.element_of_vector.push_back(v);
        res.cube.vectors.push_back(vec);
    }
    res.x_index = int(res.cube.vectors.size());
    res.element_of_vector.push_back(-1);
    res.cube.vectors.push_back(VertexSet(d));  // x: the all-zero vector
    return res;
}

CoordinateToHittingResult coordinate_to_hitting(const CubeVectorSet& c) {
    int count = int(c.vectors.size());
    ensure_universe_capacity(count);
    CoordinateToHittingResult res;
    res.instance.universe = count;
    res.instance.bound = c.bound;
    for (int e = 0; e < c.d; ++e) {
        VertexSet pos(count), neg(count);
        for (int i = 0; i < count; ++i)
            (c.vectors[std::size_t(i)].contains(e) ? pos : neg).add(i);
        if (pos.empty() || neg.empty()) {
            res.feasible = false;
            res.constant_coordinate = e;
            res.instance = HittingSetInstance{};
            return res;
        }
        res.instance.sets.push_back(pos);
        res.instance.sets.push_back(neg);
    }
    return res;
}

std::optional<SolveResult> coordinate_reversal_solve(const CubeVectorSet& c) {
    if (c.vectors.size() > 25)
        throw std::invalid_argument("coordinate_reversal_solve: more than 25 vectors");
    CoordinateToHittingResult trans = coordinate_to_hitting(c);
    if (!trans.feasible) return std::nullopt;
    auto sol = oracles::hitting_set_exact(trans.instance);
    if (!sol) return std::nullopt;  // cannot happen: no class is empty
    return sol;
}

CubeVectorSet build_Mk_instance(int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("build_Mk_instance: k must be in 1..5");
    int d = 1 << k;
    ensure_universe_capacity(d);
    CubeVectorSet c;
    c.d = d;
    for (int i = 0; i < k; ++i) {
        VertexSet row(d);
        for (int j = 0; j < d; ++j)
            if ((j >> (k - 1 - i)) & 1) row.add(j);
        c.vectors.push_back(row);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Triangle gadget
// ---------------------------------------------------------------------------

std::pair<Graph, GadgetLayout> triangle_gadget(int gamma) {
    if (gamma < 3 || gamma % 2 == 0)
        throw std::invalid_argument("triangle_gadget: gamma must be odd and >= 3");
    Graph g(4);
    int cx = 0, cy = 1, cz = 2, center = 3;  // T_3 = K_{1,3}
    g.add_edge(cx, center);
    g.add_edge(cy, center);
    g.add_edge(cz, center);
    std::vector<int> side_xy{cx, center, cy}, side_yz{cy, center, cz}, side_zx{cz, center, cx};

    for (int gg = 5; gg <= gamma; gg += 2) {
        int len = 3 * (gg - 1);
        int half = (gg - 1) / 2;  // floor(gg/2): corner-to-midpoint distance
        // Cycle positions: corners at 0, gg-1, 2(gg-1); midpoints identified
        // with the previous level's corners.
        std::vector<int> pos_vertex(std::size_t(len), -1);
        pos_vertex[std::size_t(half)] = cx;
        pos_vertex[std::size_t(gg - 1 + half)] = cy;
        pos_vertex[std::size_t(2 * (gg - 1) + half)] = cz;
        for (int p = 0; p < len; ++p)
            if (pos_vertex[std::size_t(p)] < 0) pos_vertex[std::size_t(p)] = g.add_vertex();
        for (int p = 0; p < len; ++p)
            g.add_edge(pos_vertex[std::size_t(p)], pos_vertex[std::size_t((p + 1) % len)]);
        cx = pos_vertex[0];
        cy = pos_vertex[std::size_t(gg - 1)];
        cz = pos_vertex[std::size_t(2 * (gg - 1))];
        auto arc = [&](int from, int to) {
            std::vector<int> out;
            for (int p = from; p <= to; ++p) out.push_back(pos_vertex[std::size_t(p % len)]);
            return out;
        };
        side_xy = arc(0, gg - 1);
        side_yz = arc(gg - 1, 2 * (gg - 1));
        side_zx = arc(2 * (gg - 1), len);
    }

    ensure_universe_capacity(g.n());
    GadgetLayout layout;
    layout.roles = {{"x", cx}, {"y", cy}, {"z", cz}, {"c", center}};
    layout.role_lists = {{"side_xy", side_xy}, {"side_yz", side_yz}, {"side_zx", side_zx}};
    layout.params = {{"gamma", gamma}};
    layout.validate(g.n());
    return {g, layout};
}

// ---------------------------------------------------------------------------
// HITTING SET -> minimum isometric hull (diameter-3 incidence graph)
// ---------------------------------------------------------------------------

VertexSet HittingToIsohullResult::to_hull(const VertexSet& hitting) const {
    VertexSet hull = terminals;
    hull.add(y_vertex);
    for (int u : hitting.elements())
        if (element_vertex[std::size_t(u)] >= 0) hull.add(element_vertex[std::size_t(u)]);
    int total = int(element_vertex.size());
    for (int u = total - dummy_count; u < total; ++u) hull.add(element_vertex[std::size_t(u)]);
    return hull;
}

VertexSet HittingToIsohullResult::to_hitting(const VertexSet& hull) const {
    int original = int(element_vertex.size()) - dummy_count;
    VertexSet hit(original);
    for (int u = 0; u < original; ++u)
        if (element_vertex[std::size_t(u)] >= 0 &&
            hull.contains(element_vertex[std::size_t(u)]))
            hit.add(u);
    return hit;
}

HittingToIsohullResult hitting_to_isohull(const HittingSetInstance& h) {
    for (const auto& s : h.sets)
        if (s.empty()) throw std::invalid_argument("hitting_to_isohull: empty set in family");

    // Drop elements that lie in no set: they are never part of an optimal
    // hitting set and would sit at distance 4 from y in the incidence graph.
    std::vector<int> eff_of(std::size_t(h.universe), -1);
    int n_eff = 0;
    for (int u = 0; u < h.universe; ++u) {
        for (const auto& s : h.sets)
            if (s.contains(u)) {
                eff_of[std::size_t(u)] = n_eff++;
                break;
            }
    }
    std::vector<std::vector<int>> sets;
    for (const auto& s : h.sets) {
        std::vector<int> mapped;
        for (int u : s.elements()) mapped.push_back(eff_of[std::size_t(u)]);
        sets.push_back(std::move(mapped));
    }

    // Guarantee two disjoint family sets by appending dummy singleton
    // elements; two rounds suffice even when the family is empty.
    int dummies = 0;
    auto two_disjoint = [&] {
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                bool meet = false;
                for (int u : sets[i])
                    if (std::find(sets[j].begin(), sets[j].end(), u) != sets[j].end()) meet = true;
                if (!meet) return true;
            }
        return false;
    };
    while (!two_disjoint()) {
        sets.push_back({n_eff});
        ++n_eff;
        ++dummies;
    }
    int m_eff = int(sets.size());

    HittingToIsohullResult res;
    res.dummy_count = dummies;
    Graph g(n_eff + m_eff + 2);
    ensure_universe_capacity(g.n());
    for (int u = 0; u < h.universe; ++u) res.element_vertex.push_back(eff_of[std::size_t(u)]);
    for (int d = 0; d < dummies; ++d) res.element_vertex.push_back(n_eff - dummies + d);
    for (int j = 0; j < m_eff; ++j) res.set_vertex.push_back(n_eff + j);
    res.x_vertex = n_eff + m_eff;
    res.y_vertex = n_eff + m_eff + 1;
    for (int j = 0; j < m_eff; ++j)
        for (int u : sets[std::size_t(j)]) g.add_edge(u, res.set_vertex[std::size_t(j)]);
    for (int u = 0; u < n_eff; ++u) g.add_edge(u, res.x_vertex);
    for (int j = 0; j < m_eff; ++j) g.add_edge(res.set_vertex[std::size_t(j)], res.y_vertex);

    res.terminals = VertexSet(g.n());
    res.terminals.add(res.x_vertex);
    for (int v : res.set_vertex) res.terminals.add(v);
    res.target = h.bound >= 0 ? h.bound + dummies + m_eff + 2 : -1;
    res.layout.roles = {{"x", res.x_vertex}, {"y", res.y_vertex}};
    std::vector<int> element_ids(static_cast<std::size_t>(n_eff), 0);
    std::iota(element_ids.begin(), element_ids.end(), 0);
    res.layout.role_lists = {{"elements", element_ids}, {"sets", res.set_vertex}};
    res.layout.params = {{"dummies", dummies}, {"m_eff", m_eff}, {"n_eff", n_eff}};
    res.layout.validate(g.n());
    res.graph = std::move(g);
    return res;
}

// ---------------------------------------------------------------------------
// Parameter selection for the SAT / QSAT2 gadgets
// ---------------------------------------------------------------------------

namespace {

long long triangle_vertex_count(long long gamma) {
    long long count = 4;
    for (long long t = 5; t <= gamma; t += 2) count += 3 * (t - 2);
    return count;
}

void check_gadget_params(const GadgetParams& p, int m) {
    if (p.alpha % 2 != 0) throw std::invalid_argument("gadget params: alpha must be even");
    if (p.beta % 2 != 0) throw std::invalid_argument("gadget params: beta must be even");
    if (p.gamma % 2 == 0) throw std::invalid_argument("gadget params: gamma must be odd");
    if (!(m < 2 * p.alpha)) throw std::invalid_argument("gadget params: m < 2*alpha violated");
    if (!(2 * p.alpha < 2 * p.beta))
        throw std::invalid_argument("gadget params: 2*alpha < 2*beta violated");
    if (!(2 * p.beta < p.gamma))
        throw std::invalid_argument("gadget params: 2*beta < gamma violated");
    if (!(p.gamma < 2 * (p.alpha + p.beta)))
        throw std::invalid_argument("gadget params: gamma < 2*(alpha+beta) violated");
}

}  // namespace

GadgetParams auto_gadget_params(int m) {
    for (long long alpha = 2;; alpha += 2) {
        if (!(2 * alpha > m + 1)) continue;
        long long beta = alpha + 2;
        for (long long gamma = 2 * beta + 1; gamma < 2 * (alpha + beta); gamma += 2) {
            // Counting slack: the unsatisfiable side costs |T_gamma| extra
            // vertices beyond the three corners, which must exceed m*gamma.
            if (triangle_vertex_count(gamma) - 3 * gamma > (long long)m * gamma) {
                GadgetParams p{alpha, beta, gamma};
                check_gadget_params(p, m);
                return p;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Shared machinery for the SAT / QSAT2 variable-clause gadget graphs
// ---------------------------------------------------------------------------

namespace {

struct VariableGadget {
    std::vector<int> cycle;  // 4*alpha cycle vertices in order
    int d, n, p, g;
    std::vector<int> path_rd;  // r .. d, full sequence
    std::vector<int> path_rg;  // r .. g, full sequence
};

// Appends a 4*alpha cycle with the four marked vertices and the two beta
// paths to r.
VariableGadget add_variable_gadget(Graph& g, int r, long long alpha, long long beta) {
    VariableGadget vg;
    int len = int(4 * alpha);
    for (int i = 0; i < len; ++i) vg.cycle.push_back(g.add_vertex());
    for (int i = 0; i < len; ++i)
        g.add_edge(vg.cycle[std::size_t(i)], vg.cycle[std::size_t((i + 1) % len)]);
    vg.d = vg.cycle[0];
    vg.n = vg.cycle[std::size_t(alpha)];
    vg.g = vg.cycle[std::size_t(2 * alpha)];
    vg.p = vg.cycle[std::size_t(3 * alpha)];
    auto attach_path = [&](int endpoint) {
        std::vector<int> path{r};
        for (long long i = 1; i < beta; ++i) {
            int v = g.add_vertex();
            g.add_edge(path.back(), v);
            path.push_back(v);
        }
        g.add_edge(path.back(), endpoint);
        path.push_back(endpoint);
        return path;
    };
    vg.path_rd = attach_path(vg.d);
    vg.path_rg = attach_path(vg.g);
    return vg;
}

// The half of the cycle from d to g passing through `via` (p or n).
std::vector<int> cycle_half(const VariableGadget& vg, int via) {
    long long alpha = (long long)vg.cycle.size() / 4;
    std::vector<int> out;
    if (via == vg.n) {
        for (long long i = 0; i <= 2 * alpha; ++i) out.push_back(vg.cycle[std::size_t(i)]);
    } else {
        out.push_back(vg.d);
        for (long long i = 4 * alpha - 1; i >= 2 * alpha; --i)
            out.push_back(vg.cycle[std::size_t(i)]);
    }
    return out;
}

struct ClauseGadget {
    int center;
    std::array<int, 3> corners;              // graph ids after identification
    std::array<std::vector<int>, 3> sides;   // 0: corners 0-1, 1: corners 1-2, 2: corners 2-0
};

// Builds a gamma-triangle inside g, identifying corner t with
// corner_target[t] when that entry is >= 0 (fresh vertex otherwise).
ClauseGadget add_clause_gadget(Graph& g, long long gamma, const std::array<int, 3>& corner_target) {
    auto [tg, tl] = triangle_gadget(int(gamma));
    std::vector<int> map(std::size_t(tg.n()), -1);
    std::array<int, 3> corner_ids = {tl.at("x"), tl.at("y"), tl.at("z")};
    for (int t = 0; t < 3; ++t)
        if (corner_target[std::size_t(t)] >= 0)
            map[std::size_t(corner_ids[std::size_t(t)])] = corner_target[std::size_t(t)];
    for (int v = 0; v < tg.n(); ++v)
        if (map[std::size_t(v)] < 0) map[std::size_t(v)] = g.add_vertex();
    for (const auto& [a, b] : tg.edges()) g.add_edge(map[std::size_t(a)], map[std::size_t(b)]);

    ClauseGadget cg;
    cg.center = map[std::size_t(tl.at("c"))];
    for (int t = 0; t < 3; ++t) cg.corners[std::size_t(t)] = map[std::size_t(corner_ids[std::size_t(t)])];
    auto remap = [&](const std::vector<int>& side) {
        std::vector<int> out;
        for (int v : side) out.push_back(map[std::size_t(v)]);
        return out;
    };
    cg.sides[0] = remap(tl.role_lists.at("side_xy"));
    cg.sides[1] = remap(tl.role_lists.at("side_yz"));
    cg.sides[2] = remap(tl.role_lists.at("side_zx"));
    return cg;
}

}  // namespace

// ---------------------------------------------------------------------------
// 3-SAT -> minimum isometric hull
// ---------------------------------------------------------------------------

VertexSet SatToIsohullResult::hull_from_assignment(const std::vector<bool>& assignment) const {
    int n = int(assignment.size());
    VertexSet hull(g0.n());
    hull.add(layout.at("r"));
    auto add_list = [&](const std::string& name) {
        for (int v : layout.role_lists.at(name)) hull.add(v);
    };
    for (int i = 1; i <= n; ++i) {
        std::string suffix = "_" + std::to_string(i);
        add_list("P(r,d" + suffix + ")");
        add_list("P(r,g" + suffix + ")");
        add_list(assignment[std::size_t(i - 1)] ? "P" + suffix : "N" + suffix);
    }
    long long m = layout.params.at("m");
    for (long long j = 1; j <= m; ++j) {
        std::string cj = "C_" + std::to_string(j);
        for (int t = 0; t < 3; ++t) {
            const auto& side = layout.role_lists.at(cj + "_side_" + std::to_string(t));
            if (hull.contains(side.front()) && hull.contains(side.back()))
                for (int v : side) hull.add(v);
        }
    }
    return hull;
}

std::vector<bool> SatToIsohullResult::assignment_from_hull(const VertexSet& hull) const {
    long long n = layout.params.at("n");
    std::vector<bool> assignment;
    for (long long i = 1; i <= n; ++i)
        assignment.push_back(hull.contains(layout.at("p_" + std::to_string(i))));
    return assignment;
}

SatToIsohullResult sat_to_isohull(const CnfFormula& phi, std::optional<GadgetParams> params) {
    int n = phi.n_vars, m = int(phi.clauses.size());
    if (n < 1 || m < 1) throw std::invalid_argument("sat_to_isohull: empty formula");
    for (const auto& cl : phi.clauses)
        for (const auto& lit : cl)
            if (lit.var < 0 || lit.var >= n)
                throw std::invalid_argument("sat_to_isohull: literal out of range");
    GadgetParams p = params ? *params : auto_gadget_params(m);
    check_gadget_params(p, m);

    SatToIsohullResult res;
    Graph g(1);
    int r = 0;
    res.layout.roles["r"] = r;
    res.layout.params = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma},
                         {"n", n},           {"m", m}};

    std::vector<VariableGadget> vars;
    for (int i = 1; i <= n; ++i) {
        VariableGadget vg = add_variable_gadget(g, r, p.alpha, p.beta);
        std::string s = "_" + std::to_string(i);
        res.layout.roles["d" + s] = vg.d;
        res.layout.roles["n" + s] = vg.n;
        res.layout.roles["p" + s] = vg.p;
        res.layout.roles["g" + s] = vg.g;
        res.layout.role_lists["P(r,d" + s + ")"] = vg.path_rd;
        res.layout.role_lists["P(r,g" + s + ")"] = vg.path_rg;
        res.layout.role_lists["P" + s] = cycle_half(vg, vg.p);
        res.layout.role_lists["N" + s] = cycle_half(vg, vg.n);
        vars.push_back(std::move(vg));
    }
    std::vector<int> centers;
    for (int j = 1; j <= m; ++j) {
        const auto& cl = phi.clauses[std::size_t(j - 1)];
        std::array<int, 3> targets;
        for (int t = 0; t < 3; ++t) {
            const Literal& lit = cl[std::size_t(t)];
            const VariableGadget& vg = vars[std::size_t(lit.var)];
            // CNF rule: positive occurrence -> n_i, negative -> p_i.
            targets[std::size_t(t)] = lit.positive ? vg.n : vg.p;
            res.layout.aliases["C_" + std::to_string(j) + "_corner_" + std::to_string(t)] =
                (lit.positive ? "n_" : "p_") + std::to_string(lit.var + 1);
        }
        ClauseGadget cg = add_clause_gadget(g, p.gamma, targets);
        res.layout.roles["c_" + std::to_string(j)] = cg.center;
        for (int t = 0; t < 3; ++t)
            res.layout.role_lists["C_" + std::to_string(j) + "_side_" + std::to_string(t)] =
                cg.sides[std::size_t(t)];
        centers.push_back(cg.center);
    }
    ensure_universe_capacity(g.n() + 1);

    res.g0 = g;
    res.terminals_g0 = VertexSet(res.g0.n());
    res.terminals_g0.add(r);
    for (const auto& vg : vars) {
        res.terminals_g0.add(vg.d);
        res.terminals_g0.add(vg.g);
    }
    res.target_g0 = (long long)n * (p.alpha + 2 * p.beta) + (long long)m * p.gamma;

    int q = g.add_vertex();
    for (int c : centers) g.add_edge(q, c);
    res.layout.roles["q"] = q;
    res.g = std::move(g);
    res.terminals_g = VertexSet(res.g.n());
    for (int v : res.terminals_g0.elements()) res.terminals_g.add(v);
    res.target_g = res.g.n() - 1;
    res.layout.validate(res.g.n());
    return res;
}

// ---------------------------------------------------------------------------
// Three-terminal wrapper
// ---------------------------------------------------------------------------

WrapThreeResult wrap_three_terminals(const Graph& g, const VertexSet& s, long long k) {
    if (!is_connected(g)) throw std::invalid_argument("wrap_three_terminals: graph not connected");
    auto dist = all_pairs_distances(g);
    auto terms = s.elements();
    long long sc = (long long)terms.size();
    if (sc < 1) throw std::invalid_argument("wrap_three_terminals: empty terminal set");
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (dist.at(terms[i], terms[j]) % 2 != 0)
                throw std::invalid_argument(
                    "wrap_three_terminals: odd distance between terminals " +
                    std::to_string(terms[i]) + " and " + std::to_string(terms[j]));
    long long n = g.n();
    long long np = n % 2 == 0 ? n : n + 1;

    Graph gp = g;
    // Path P = (x = v_0, v_1, w_1, v_2, w_2, ..., w_{s-1}, v_s, v_{s+1} = y).
    std::vector<int> path_p, v_list, w_list;
    int x = gp.add_vertex();
    path_p.push_back(x);
    v_list.push_back(x);
    for (long long i = 1; i <= sc; ++i) {
        int vi = gp.add_vertex();
        gp.add_edge(path_p.back(), vi);
        path_p.push_back(vi);
        v_list.push_back(vi);
        if (i < sc) {
            int wi = gp.add_vertex();
            gp.add_edge(vi, wi);
            path_p.push_back(wi);
            w_list.push_back(wi);
        }
    }
    int y = gp.add_vertex();
    gp.add_edge(path_p.back(), y);
    path_p.push_back(y);
    v_list.push_back(y);
    int z = gp.add_vertex();

    WrapThreeResult res;
    auto add_path = [&](int from, int to, long long length) {
        std::vector<int> path{from};
        for (long long i = 1; i < length; ++i) {
            int v = gp.add_vertex();
            gp.add_edge(path.back(), v);
            path.push_back(v);
        }
        gp.add_edge(path.back(), to);
        path.push_back(to);
        return path;
    };
    for (long long i = 1; i <= sc; ++i) {
        int vi = v_list[std::size_t(i)];
        int ui = terms[std::size_t(i - 1)];
        res.layout.role_lists["P(v_" + std::to_string(i) + ",u_" + std::to_string(i) + ")"] =
            add_path(vi, ui, np);
        res.layout.role_lists["P(z,u_" + std::to_string(i) + ")"] = add_path(z, ui, np);
    }
    ensure_universe_capacity(gp.n());

    res.terminals = VertexSet(gp.n());
    res.terminals.add(x);
    res.terminals.add(y);
    res.terminals.add(z);
    res.target = k + 2 * sc * np + sc + 1;
    res.new_vertex_count = gp.n() - n;
    res.layout.roles = {{"x", x}, {"y", y}, {"z", z}};
    res.layout.role_lists["P"] = path_p;
    res.layout.role_lists["v"] = v_list;
    res.layout.role_lists["w"] = w_list;
    res.layout.params = {{"s", sc}, {"n_prime", np}, {"k", k}};
    res.layout.validate(gp.n());
    res.graph = std::move(gp);
    return res;
}

// ---------------------------------------------------------------------------
// QSAT2 -> hull set
// ---------------------------------------------------------------------------

VertexSet Qsat2Result::hullset_from_assignment(const std::vector<bool>& x_assignment) const {
    VertexSet hs = mandatory;
    for (std::size_t i = 0; i < x_assignment.size(); ++i) {
        std::string s = std::to_string(i + 1);
        hs.add(layout.at(x_assignment[i] ? "h_p_" + s : "h_n_" + s));
    }
    return hs;
}

std::vector<bool> Qsat2Result::assignment_from_hullset(const VertexSet& hullset) const {
    long long n_x = layout.params.at("n_x");
    long long delta = layout.params.at("delta");
    std::vector<bool> assignment;
    for (long long i = 1; i <= n_x; ++i) {
        const auto& path = layout.role_lists.at("H_" + std::to_string(i));  // p ... n
        bool p_side = false;
        // Internal positions 1..delta-1; the first half is closer to p.
        for (long long pos = 1; pos < delta; ++pos)
            if (hullset.contains(path[std::size_t(pos)]) && 2 * pos < delta) p_side = true;
        assignment.push_back(p_side);
    }
    return assignment;
}

Qsat2Result qsat2_to_hullset(const QbfInstance& q, std::optional<GadgetParams> params) {
    int nv = q.n_x + q.n_y, m = int(q.clauses.size());
    if (q.n_x < 1 || m < 1) throw std::invalid_argument("qsat2_to_hullset: empty instance");
    // Occurrence assumptions from the reduction's correctness argument.
    for (int v = 0; v < nv; ++v) {
        bool pos = false, neg = false;
        for (const auto& cl : q.clauses)
            for (const auto& lit : cl)
                if (lit.var == v) (lit.positive ? pos : neg) = true;
        if (!pos || !neg)
            throw std::invalid_argument("qsat2_to_hullset: variable " + std::to_string(v + 1) +
                                        " must occur both positively and negatively");
    }
    for (const auto& cl : q.clauses)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (cl[std::size_t(a)].var == cl[std::size_t(b)].var &&
                    cl[std::size_t(a)].positive != cl[std::size_t(b)].positive)
                    throw std::invalid_argument(
                        "qsat2_to_hullset: variable appears both ways in a clause");

    GadgetParams p = params ? *params : auto_gadget_params(m);
    check_gadget_params(p, m);

    Qsat2Result res;
    Graph g(1);
    int r = 0;
    res.layout.roles["r"] = r;
    res.layout.params = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma},
                         {"n_x", q.n_x},     {"n_y", q.n_y},   {"m", m}};

    // Variable gadgets: existential (x) variables first, then universal (y),
    // matching the instance's variable indexing.
    std::vector<VariableGadget> vars;
    for (int v = 0; v < nv; ++v) {
        VariableGadget vg = add_variable_gadget(g, r, p.alpha, p.beta);
        bool is_x = v < q.n_x;
        std::string s = std::string(is_x ? "x" : "y") + "_" +
                        std::to_string(is_x ? v + 1 : v - q.n_x + 1);
        res.layout.roles["d_" + s] = vg.d;
        res.layout.roles["n_" + s] = vg.n;
        res.layout.roles["p_" + s] = vg.p;
        res.layout.roles["g_" + s] = vg.g;
        res.layout.role_lists["P(r,d_" + s + ")"] = vg.path_rd;
        res.layout.role_lists["P(r,g_" + s + ")"] = vg.path_rg;
        res.layout.role_lists["P_" + s] = cycle_half(vg, vg.p);
        res.layout.role_lists["N_" + s] = cycle_half(vg, vg.n);
        int dd = g.add_vertex();
        g.add_edge(dd, vg.d);
        int gg = g.add_vertex();
        g.add_edge(gg, vg.g);
        res.layout.roles["dd_" + s] = dd;
        res.layout.roles["gg_" + s] = gg;
        vars.push_back(std::move(vg));
    }
    int r_prime = g.add_vertex();
    g.add_edge(r, r_prime);
    res.layout.roles["r_prime"] = r_prime;

    std::vector<int> centers;
    for (int j = 1; j <= m; ++j) {
        const auto& cl = q.clauses[std::size_t(j - 1)];
        std::array<int, 3> targets;
        std::vector<std::pair<int, bool>> seen;  // literals already identified in this clause
        for (int t = 0; t < 3; ++t) {
            const Literal& lit = cl[std::size_t(t)];
            std::string cj = "C_" + std::to_string(j) + "_corner_" + std::to_string(t);
            // A literal repeated within a clause gets one identified corner;
            // the extra corners stay fresh gadget vertices.
            if (std::find(seen.begin(), seen.end(), std::make_pair(lit.var, lit.positive)) !=
                seen.end()) {
                targets[std::size_t(t)] = -1;
                res.layout.aliases[cj] = "fresh";
                continue;
            }
            seen.emplace_back(lit.var, lit.positive);
            const VariableGadget& vg = vars[std::size_t(lit.var)];
            // DNF rule: positive occurrence -> p_i, negative -> n_i.
            targets[std::size_t(t)] = lit.positive ? vg.p : vg.n;
            bool is_x = lit.var < q.n_x;
            res.layout.aliases[cj] =
                std::string(lit.positive ? "p_" : "n_") + (is_x ? "x" : "y") + "_" +
                std::to_string(is_x ? lit.var + 1 : lit.var - q.n_x + 1);
        }
        ClauseGadget cg = add_clause_gadget(g, p.gamma, targets);
        res.layout.roles["c_" + std::to_string(j)] = cg.center;
        for (int t = 0; t < 3; ++t)
            res.layout.role_lists["C_" + std::to_string(j) + "_side_" + std::to_string(t)] =
                cg.sides[std::size_t(t)];
        centers.push_back(cg.center);
    }
    int qv = g.add_vertex();
    for (int c : centers) g.add_edge(qv, c);
    res.layout.roles["q"] = qv;

    // The last touch: odd delta strictly above the diameter so far, then
    // the H^i paths between p^x_i and n^x_i with their middle edges.
    ensure_universe_capacity(g.n());
    int diam = all_pairs_distances(g).diameter();
    long long delta = diam + 1;
    if (delta % 2 == 0) ++delta;
    res.layout.params["delta"] = delta;
    for (int i = 1; i <= q.n_x; ++i) {
        const VariableGadget& vg = vars[std::size_t(i - 1)];
        std::vector<int> path{vg.p};
        for (long long t = 1; t < delta; ++t) {
            int v = g.add_vertex();
            g.add_edge(path.back(), v);
            path.push_back(v);
        }
        g.add_edge(path.back(), vg.n);
        path.push_back(vg.n);
        res.layout.roles["h_p_" + std::to_string(i)] = path[std::size_t((delta - 1) / 2)];
        res.layout.roles["h_n_" + std::to_string(i)] = path[std::size_t((delta + 1) / 2)];
        res.layout.role_lists["H_" + std::to_string(i)] = path;
    }

    ensure_universe_capacity(g.n());
    res.mandatory = VertexSet(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).size() == 1) res.mandatory.add(v);
    res.target = 3LL * q.n_x + 2LL * q.n_y + 1;
    res.layout.validate(g.n());
    res.graph = std::move(g);
    return res;
}

}  // namespace hullkit
