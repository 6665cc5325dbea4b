// hullkit command-line interface: parsers, solvers, gadget builders and
// randomized verification suites behind one binary.
//
// Exit codes: 0 answered, 1 negative/infeasible result, 2 usage or format
// error, 3 resource budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullkit/closure.hpp"
#include "hullkit/graph.hpp"
#include "hullkit/graph_gen.hpp"
#include "hullkit/hulls.hpp"
#include "hullkit/lattice.hpp"
#include "hullkit/mingen.hpp"
#include "hullkit/oracles.hpp"
#include "hullkit/reductions.hpp"

using json = nlohmann::json;
using namespace hullkit;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr unsigned kDefaultSeed = 0x5eed;

enum ExitCode : int { kAnswered = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

std::string read_file_or_die(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// FNV-1a over file bytes; enough to tie a report to its inputs.
std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Report {
    json inputs = json::object();
    json result = json::object();
    std::optional<unsigned> seed;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void record_input(const std::string& path, const std::string& bytes) {
        inputs[path] = digest(bytes);
    }

    int emit(const std::string& command, int exit_code) const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        json out = {{"command", command}, {"inputs", inputs},      {"result", result},
                    {"timing_ms", ms},    {"version", kVersion},   {"exit_code", exit_code}};
        if (seed) out["seed"] = *seed;
        std::cout << out.dump(2) << "\n";
        return exit_code;
    }
};

Graph load_graph(Report& rep, const std::string& path) {
    std::string bytes = read_file_or_die(path);
    rep.record_input(path, bytes);
    return Graph::parse_string(bytes);
}

ClosedFamily load_family(Report& rep, const std::string& path) {
    std::string bytes = read_file_or_die(path);
    rep.record_input(path, bytes);
    std::istringstream in(bytes);
    return ClosedFamily::parse(in);
}

VertexSet parse_set(const std::vector<int>& elems, int universe) {
    VertexSet s(universe);
    for (int v : elems) s.add(v);
    return s;
}

json set_to_json(const VertexSet& s) { return json(s.elements()); }

json layout_to_json(const GadgetLayout& layout) {
    json j;
    j["roles"] = layout.roles;
    j["role_lists"] = layout.role_lists;
    j["aliases"] = layout.aliases;
    j["params"] = layout.params;
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError("cannot write " + path);
    out << content;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

struct SuiteRow {
    std::string check;
    bool pass;
    std::string detail;
};

Digraph random_digraph(std::mt19937& rng, int n) {
    Digraph d;
    d.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng() % 100 < 30) d.add_arc(u, v);
    return d;
}

HittingSetInstance random_hitting(std::mt19937& rng, int max_universe) {
    HittingSetInstance h;
    h.universe = 2 + int(rng() % unsigned(max_universe - 1));
    int m = 1 + int(rng() % 4);
    for (int j = 0; j < m; ++j) {
        VertexSet s(h.universe);
        while (s.empty())
            for (int v = 0; v < h.universe; ++v)
                if (rng() % 100 < 40) s.add(v);
        h.sets.push_back(s);
    }
    return h;
}

std::vector<SuiteRow> run_suite(const std::string& suite, unsigned seed, int trials) {
    std::mt19937 rng(seed);
    std::vector<SuiteRow> rows;
    auto push = [&](int t, bool pass, const std::string& detail) {
        rows.push_back({suite + "/" + std::to_string(t), pass, detail});
    };
    for (int t = 0; t < trials; ++t) {
        if (suite == "dom2mgs") {
            Digraph d = random_digraph(rng, 3 + int(rng() % 6));
            auto red = dominating_to_closure(d);
            auto dom = oracles::dominating_set_exact(d);
            auto images =
                enumerate_images(red.oracle, ImageStrategy::Exhaustive, kDefaultImageBudget);
            auto table = min_gen(red.oracle, images);
            int gen = table.label_of(VertexSet::full(red.oracle.universe)).size();
            VertexSet mapped = red.to_generator(dom.witness);
            bool ok = gen == dom.size && red.oracle.evaluate(mapped).size() == red.oracle.universe;
            VertexSet back = red.to_dominating(table.label_of(VertexSet::full(red.oracle.universe)));
            ok = ok && oracles::dominating_set_exact(d).size <= back.size();
            push(t, ok, "dom=" + std::to_string(dom.size) + " gen=" + std::to_string(gen));
        } else if (suite == "hs2cr") {
            HittingSetInstance h = random_hitting(rng, 7);
            auto hit = oracles::hitting_set_exact(h);
            auto red = hitting_to_coordinate(h);
            auto rev = coordinate_reversal_solve(red.cube);
            bool ok = hit && rev && rev->size == hit->size + 1;
            if (ok) {
                VertexSet fwd = red.to_reversal(hit->witness);
                auto check = coordinate_to_hitting(red.cube);
                bool covers = true;
                for (const auto& cls : check.instance.sets)
                    if (!cls.intersects(fwd)) covers = false;
                ok = covers && int(fwd.size()) == hit->size + 1;
            }
            push(t, ok, ok ? "opt+1 holds" : "relation violated");
        } else if (suite == "cr2hs") {
            // Random feasible cube instances: reversal OPT = hitting OPT.
            int d = 2 + int(rng() % 4), count = 3 + int(rng() % 5);
            CubeVectorSet c;
            c.d = d;
            while (int(c.vectors.size()) < count) {
                VertexSet v(d);
                for (int e = 0; e < d; ++e)
                    if (rng() % 2) v.add(e);
                if (std::find(c.vectors.begin(), c.vectors.end(), v) == c.vectors.end())
                    c.vectors.push_back(v);
            }
            auto trans = coordinate_to_hitting(c);
            auto rev = coordinate_reversal_solve(c);
            if (!trans.feasible) {
                push(t, !rev.has_value(), "infeasible both ways");
            } else {
                auto hit = oracles::hitting_set_exact(trans.instance);
                push(t, rev && hit && rev->size == hit->size, "opt equality");
            }
        } else if (suite == "mingen") {
            int n = 3 + int(rng() % 4);
            Graph g = random_connected_graph(n, rng(), 40);
            auto oracle = conv_oracle(g, all_pairs_distances(g));
            auto images = enumerate_images(oracle, ImageStrategy::Lectic, kDefaultImageBudget);
            auto fast = min_gen(oracle, images);
            auto slow = oracles::min_generator_exhaustive(oracle);
            bool ok = true;
            for (const auto& im : images.sets())
                ok = ok && fast.label_of(im).size() == slow.label_of(im).size();
            push(t, ok, "labels=" + std::to_string(images.size()));
        } else if (suite == "isohull") {
            int n = 4 + int(rng() % 5);
            Graph g = random_connected_graph(n, rng(), 35);
            auto dist = all_pairs_distances(g);
            VertexSet s(n);
            while (s.size() < 2)
                for (int v = 0; v < n; ++v)
                    if (rng() % 100 < 35) s.add(v);
            auto exact = iso_hull_exact(g, dist, s);
            auto reference = oracles::iso_hull_enumerate(g, dist, s);
            push(t, exact.optimal && exact.size == reference.size,
                 "exact=" + std::to_string(exact.size));
        } else {
            throw CLI::ValidationError("unknown suite " + suite);
        }
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hullkit: graph convexity, closure generators and gadget reductions"};
    app.require_subcommand(1);

    Report rep;
    std::string graph_path, family_path, input_path, out_prefix = "out";
    std::vector<int> set_elems;
    long long budget = kDefaultIsoHullBudget;
    std::size_t image_budget = kDefaultImageBudget;
    bool use_greedy = false;
    int gamma = 5, mk_k = 2;
    long long wrap_k = 0;
    unsigned seed = kDefaultSeed;
    int trials = 100;
    std::string dot_path, suite;
    std::vector<int> punct_big, punct_small;

    auto* c_mingen = app.add_subcommand("mingen", "Minimum generators of a closed-set family");
    c_mingen->add_option("family", family_path, "set-family file")->required();

    auto* c_hull = app.add_subcommand("hull-number", "Geodesic hull number of a graph");
    c_hull->add_option("graph", graph_path, "graph file")->required();
    c_hull->add_option("--image-budget", image_budget, "max closed sets to enumerate");

    auto* c_conv = app.add_subcommand("conv", "Geodesic convex hull of a vertex set");
    c_conv->add_option("graph", graph_path)->required();
    c_conv->add_option("--set", set_elems, "vertices")->required();

    auto* c_iso = app.add_subcommand("iso-hull", "Minimum isometric hull of a vertex set");
    c_iso->add_option("graph", graph_path)->required();
    c_iso->add_option("--set", set_elems)->required();
    c_iso->add_flag("--greedy", use_greedy, "greedy upper bound instead of exact search");
    c_iso->add_option("--budget", budget, "node budget for the exact search");

    auto* c_ihn = app.add_subcommand("iso-hull-number", "Isometric hull number (n <= 15)");
    c_ihn->add_option("graph", graph_path)->required();

    auto* c_hsc = app.add_subcommand("hull-set-check", "Is the given set a hull set?");
    c_hsc->add_option("graph", graph_path)->required();
    c_hsc->add_option("--set", set_elems)->required();
    c_hsc->add_option("--budget", budget);

    auto* c_lat = app.add_subcommand("lattice", "Inclusion lattice of a closed-set family");
    c_lat->add_option("family", family_path)->required();
    c_lat->add_option("--dot", dot_path, "write the Hasse diagram as DOT");

    auto* c_cls = app.add_subcommand("classify-operator", "Closure-axiom classification");
    c_cls->add_option("family", family_path)->required();
    c_cls->add_option("--punctured-big", punct_big, "X for the punctured operator");
    c_cls->add_option("--punctured-small", punct_small, "X' for the punctured operator");
    c_cls->add_option("--seed", seed);
    c_cls->add_option("--trials", trials);

    auto* c_ver = app.add_subcommand("verify", "Randomized round-trip equivalence suites");
    c_ver->add_option("suite", suite, "dom2mgs|hs2cr|cr2hs|mingen|isohull")->required();
    c_ver->add_option("--seed", seed);
    c_ver->add_option("--trials", trials);

    auto* c_gad = app.add_subcommand("gadget", "Standalone gadget builders");
    auto* c_tri = c_gad->add_subcommand("triangle", "gamma-triangle gadget");
    c_tri->add_option("--gamma", gamma)->required();
    c_tri->add_option("-o,--output", out_prefix);

    auto* c_red = app.add_subcommand("reduce", "Instance translations");
    std::string red_name;
    c_red->add_option("name", red_name, "dom2mgs|hs2cr|cr2hs|hs2hull|sat2hull|wrap3|qsat2hull|triangle|mk")
        ->required();
    c_red->add_option("input", input_path, "instance file (where applicable)");
    c_red->add_option("-o,--output", out_prefix, "output file prefix");
    c_red->add_option("--set", set_elems, "terminal set (wrap3)");
    c_red->add_option("--k", wrap_k, "target bound (wrap3)");
    c_red->add_option("--gamma", gamma, "gamma (triangle)");
    c_red->add_option("--mk", mk_k, "k (mk)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_mingen) {
            ClosedFamily fam = load_family(rep, family_path);
            auto oracle = closure_from_family(fam);
            auto table = min_gen(oracle, fam);
            json labels = json::object();
            for (const auto& im : fam.sets())
                labels[im.to_string()] = set_to_json(table.label_of(im));
            rep.result = {{"labels", labels},
                          {"while_iterations", table.while_iterations},
                          {"label_updates", table.label_updates}};
            return rep.emit("mingen", kAnswered);
        }
        if (*c_hull) {
            Graph g = load_graph(rep, graph_path);
            auto r = hull_number(g, image_budget);
            rep.result = {{"size", r.size},
                          {"witness", set_to_json(r.witness)},
                          {"image_count", r.image_count},
                          {"while_iterations", r.while_iterations}};
            return rep.emit("hull-number", kAnswered);
        }
        if (*c_conv) {
            Graph g = load_graph(rep, graph_path);
            auto dist = all_pairs_distances(g);
            VertexSet hull = conv(g, dist, parse_set(set_elems, g.n()));
            rep.result = {{"vertices", set_to_json(hull)}, {"size", hull.size()}};
            return rep.emit("conv", kAnswered);
        }
        if (*c_iso) {
            Graph g = load_graph(rep, graph_path);
            auto dist = all_pairs_distances(g);
            VertexSet s = parse_set(set_elems, g.n());
            HullResult r = use_greedy ? iso_hull_greedy(g, dist, s)
                                      : iso_hull_exact(g, dist, s, budget);
            rep.result = {{"size", r.size},
                          {"vertices", set_to_json(r.vertices)},
                          {"optimal", r.optimal},
                          {"nodes_explored", r.nodes_explored},
                          {"budget_exhausted", r.budget_exhausted}};
            return rep.emit("iso-hull", r.budget_exhausted ? kBudget : kAnswered);
        }
        if (*c_ihn) {
            Graph g = load_graph(rep, graph_path);
            auto r = iso_hull_number(g);
            rep.result = {{"size", r.size}, {"witness", set_to_json(r.witness)}};
            return rep.emit("iso-hull-number", kAnswered);
        }
        if (*c_hsc) {
            Graph g = load_graph(rep, graph_path);
            auto verdict = is_hull_set(g, parse_set(set_elems, g.n()), budget);
            std::string kind = verdict.kind == HullSetVerdict::Kind::HullSet ? "hull_set"
                               : verdict.kind == HullSetVerdict::Kind::NotHullSet ? "not_hull_set"
                                                                                   : "unknown";
            rep.result = {{"verdict", kind}};
            if (verdict.witness) rep.result["witness"] = set_to_json(*verdict.witness);
            int code = verdict.kind == HullSetVerdict::Kind::HullSet      ? kAnswered
                       : verdict.kind == HullSetVerdict::Kind::NotHullSet ? kNegative
                                                                          : kBudget;
            return rep.emit("hull-set-check", code);
        }
        if (*c_lat) {
            ClosedFamily fam = load_family(rep, family_path);
            Lattice lat = build_lattice(fam);
            auto graded = is_graded(lat);
            rep.result = {{"elements", lat.size()},
                          {"covers", lat.covers.size()},
                          {"graded", graded.graded},
                          {"atomistic", is_atomistic(lat)},
                          {"join_irreducibles", join_irreducibles(lat).size()}};
            if (!graded.graded) {
                rep.result["short_chain_length"] = graded.short_chain.size() - 1;
                rep.result["long_chain_length"] = graded.long_chain.size() - 1;
            }
            if (!dot_path.empty()) write_file(dot_path, lattice_to_dot(lat));
            return rep.emit("lattice", kAnswered);
        }
        if (*c_cls) {
            ClosedFamily fam = load_family(rep, family_path);
            auto oracle = closure_from_family(fam);
            if (!punct_big.empty() || !punct_small.empty())
                oracle = punctured(oracle, parse_set(punct_big, fam.universe()),
                                   parse_set(punct_small, fam.universe()));
            OperatorClassification cls;
            if (fam.universe() <= kMaxExhaustiveUniverse && fam.universe() <= 12) {
                cls = classify_exhaustive(oracle);
            } else {
                cls = classify_sampled(oracle, seed, trials);
                rep.seed = seed;
            }
            rep.result = {{"extensive", cls.extensive},
                          {"increasing", cls.increasing},
                          {"idempotent", cls.idempotent},
                          {"pseudo_closure_law", cls.pseudo_closure_law},
                          {"size_increasing", cls.size_increasing},
                          {"atomistic", cls.atomistic},
                          {"exhaustive", cls.exhaustive},
                          {"is_closure", cls.is_closure()}};
            return rep.emit("classify-operator", kAnswered);
        }
        if (*c_ver) {
            rep.seed = seed;
            auto rows = run_suite(suite, seed, trials);
            bool all = true;
            json table = json::array();
            for (const auto& row : rows) {
                all = all && row.pass;
                table.push_back(
                    {{"check", row.check}, {"pass", row.pass}, {"detail", row.detail}});
                std::cerr << (row.pass ? "PASS " : "FAIL ") << row.check << "  " << row.detail
                          << "\n";
            }
            rep.result = {{"suite", suite}, {"trials", trials}, {"all_pass", all},
                          {"table", table}};
            return rep.emit("verify", all ? kAnswered : kNegative);
        }
        if (*c_tri || (*c_red && red_name == "triangle")) {
            auto [g, layout] = triangle_gadget(gamma);
            write_file(out_prefix + ".graph", g.serialize());
            write_file(out_prefix + ".layout.json", layout_to_json(layout).dump(2) + "\n");
            rep.result = {{"vertices", g.n()},
                          {"edges", g.edges().size()},
                          {"layout", layout_to_json(layout)},
                          {"graph_file", out_prefix + ".graph"}};
            return rep.emit("gadget triangle", kAnswered);
        }
        if (*c_red) {
            if (red_name == "mk") {
                CubeVectorSet c = build_Mk_instance(mk_k);
                write_file(out_prefix + ".cube", c.serialize());
                rep.result = {{"dim", c.d},
                              {"count", c.vectors.size()},
                              {"cube_file", out_prefix + ".cube"}};
                return rep.emit("reduce mk", kAnswered);
            }
            std::string bytes = read_file_or_die(input_path);
            rep.record_input(input_path, bytes);
            if (red_name == "dom2mgs") {
                Digraph d = Digraph::parse_string(bytes);
                auto red = dominating_to_closure(d);
                HittingSetInstance antichain;
                antichain.universe = int(red.survivors.size());
                antichain.sets = red.normalized_sets;
                write_file(out_prefix + ".family", antichain.serialize());
                rep.result = {{"normalized_universe", red.survivors.size()},
                              {"survivors", red.survivors},
                              {"antichain_file", out_prefix + ".family"}};
                return rep.emit("reduce dom2mgs", kAnswered);
            }
            if (red_name == "hs2cr") {
                auto h = HittingSetInstance::parse_string(bytes);
                auto red = hitting_to_coordinate(h);
                write_file(out_prefix + ".cube", red.cube.serialize());
                rep.result = {{"dim", red.cube.d},
                              {"count", red.cube.vectors.size()},
                              {"x_index", red.x_index},
                              {"cube_file", out_prefix + ".cube"}};
                return rep.emit("reduce hs2cr", kAnswered);
            }
            if (red_name == "cr2hs") {
                auto c = CubeVectorSet::parse_string(bytes);
                auto trans = coordinate_to_hitting(c);
                if (!trans.feasible) {
                    rep.result = {{"feasible", false},
                                  {"constant_coordinate", trans.constant_coordinate}};
                    return rep.emit("reduce cr2hs", kNegative);
                }
                write_file(out_prefix + ".hitting", trans.instance.serialize());
                rep.result = {{"feasible", true},
                              {"sets", trans.instance.sets.size()},
                              {"hitting_file", out_prefix + ".hitting"}};
                return rep.emit("reduce cr2hs", kAnswered);
            }
            if (red_name == "hs2hull") {
                auto h = HittingSetInstance::parse_string(bytes);
                auto red = hitting_to_isohull(h);
                write_file(out_prefix + ".graph", red.graph.serialize());
                write_file(out_prefix + ".layout.json",
                           layout_to_json(red.layout).dump(2) + "\n");
                rep.result = {{"vertices", red.graph.n()},
                              {"terminals", set_to_json(red.terminals)},
                              {"target", red.target},
                              {"graph_file", out_prefix + ".graph"}};
                return rep.emit("reduce hs2hull", kAnswered);
            }
            if (red_name == "sat2hull") {
                auto phi = CnfFormula::parse_dimacs_string(bytes);
                auto red = sat_to_isohull(phi);
                write_file(out_prefix + ".g0.graph", red.g0.serialize());
                write_file(out_prefix + ".g.graph", red.g.serialize());
                write_file(out_prefix + ".layout.json",
                           layout_to_json(red.layout).dump(2) + "\n");
                rep.result = {{"g0_vertices", red.g0.n()},
                              {"g_vertices", red.g.n()},
                              {"terminals", set_to_json(red.terminals_g0)},
                              {"target_g0", red.target_g0},
                              {"target_g", red.target_g}};
                return rep.emit("reduce sat2hull", kAnswered);
            }
            if (red_name == "wrap3") {
                Graph g = Graph::parse_string(bytes);
                auto red = wrap_three_terminals(g, parse_set(set_elems, g.n()), wrap_k);
                write_file(out_prefix + ".graph", red.graph.serialize());
                write_file(out_prefix + ".layout.json",
                           layout_to_json(red.layout).dump(2) + "\n");
                rep.result = {{"vertices", red.graph.n()},
                              {"terminals", set_to_json(red.terminals)},
                              {"target", red.target},
                              {"new_vertices", red.new_vertex_count}};
                return rep.emit("reduce wrap3", kAnswered);
            }
            if (red_name == "qsat2hull") {
                auto q = QbfInstance::parse_qdimacs_string(bytes);
                auto red = qsat2_to_hullset(q);
                write_file(out_prefix + ".graph", red.graph.serialize());
                write_file(out_prefix + ".layout.json",
                           layout_to_json(red.layout).dump(2) + "\n");
                rep.result = {{"vertices", red.graph.n()},
                              {"target", red.target},
                              {"mandatory", set_to_json(red.mandatory)}};
                return rep.emit("reduce qsat2hull", kAnswered);
            }
            throw CLI::ValidationError("unknown reduction " + red_name);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
