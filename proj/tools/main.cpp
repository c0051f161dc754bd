// Command-line front end: verify / solve / bound / gen / reduce / chain.
//
// Exit codes: 0 success, 1 negative domain answer (invalid labeling, failed
// chain, no exact cover), 2 malformed input or usage, 3 size-guard refusal.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trdom/bounds.hpp"
#include "trdom/errors.hpp"
#include "trdom/exact.hpp"
#include "trdom/families.hpp"
#include "trdom/graph.hpp"
#include "trdom/labeling.hpp"
#include "trdom/reduction.hpp"
#include "trdom/tree_dp.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace trdom;

constexpr std::uint64_t kDefaultSeed = 1729;

// ------------------------------------------------------------------ plumbing

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_of(const std::string& s) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
    return std::string("fnv1a64:") + buf;
}

// "-" reads stdin so generators pipe straight into the other commands.
std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
    if (!out_path) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + *out_path);
    out << text;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string chomp(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

std::string rat_text(const Rat& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

json rat_json(const Rat& r) {
    if (r.den == 1) return r.num;
    return json{{"num", r.num}, {"den", r.den}};
}

json per_component_json(const SolveResult& res) {
    json arr = json::array();
    for (const auto& c : res.per_component)
        arr.push_back(json{{"vertices", c.vertices},
                           {"weight", c.weight},
                           {"method", method_name(c.method)},
                           {"nodes", c.nodes}});
    return arr;
}

// ------------------------------------------------------- closed-form solving

// Orders the vertices of a path (an endpoint first) or a cycle (starting at
// vertex 0) by walking the unique continuation.
std::vector<int> walk_order(const Graph& g, bool is_cycle) {
    const int p = g.order();
    if (p == 1) return {0};
    int start = 0;
    if (!is_cycle)
        for (int v = 0; v < p; ++v)
            if (g.degree(v) == 1) {
                start = v;
                break;
            }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < p) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) {
                next = w;
                break;
            }
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Recognizes the two families with closed forms and maps their certificate
// onto the input's vertex numbering. Empty when the shape does not match.
std::optional<SolveResult> closed_form_solve(const Graph& g) {
    StructReport sr = struct_report(g);
    if (!sr.is_connected) return std::nullopt;
    const int p = g.order();
    const bool is_path = sr.is_tree && sr.Delta <= 2;
    const bool is_cycle = sr.regular_degree == 2 && !sr.is_tree;
    if (!is_path && !is_cycle) return std::nullopt;

    FamilyValue fv = is_path ? gamma_path(p) : gamma_cycle(p);
    std::vector<int> order = walk_order(g, is_cycle);
    SolveResult res;
    res.method = Method::closedform;
    res.weight = fv.weight;
    res.witness.k = 3;
    res.witness.values.assign(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < p; ++i) res.witness.values[order[i]] = fv.certificate.values[i];
    if (!verify_3rdf(g, res.witness).valid() || weight(res.witness) != fv.weight)
        throw std::logic_error("closed form: mapped certificate failed verification");
    std::vector<int> all(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) all[i] = i;
    res.per_component.push_back({std::move(all), fv.weight, Method::closedform, 0});
    return res;
}

SolveResult solve_connected_auto(const Graph& g) {
    if (auto cf = closed_form_solve(g)) return *cf;
    if (struct_report(g).is_tree) return gamma_3r_tree(g);
    return gamma_3r_bnb(g);
}

SolveResult auto_solve(const Graph& g) {
    auto comps = components(g);
    if (comps.size() == 1) return solve_connected_auto(g);
    SolveResult res;
    res.witness.k = 3;
    res.witness.values.assign(static_cast<std::size_t>(g.order()), 0);
    for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        SolveResult r = solve_connected_auto(sub);
        res.weight += r.weight;
        res.nodes_explored += r.nodes_explored;
        for (std::size_t i = 0; i < comp.size(); ++i)
            res.witness.values[comp[i]] = r.witness.values[i];
        res.per_component.push_back({comp, r.weight, r.method, r.nodes_explored});
    }
    res.method = res.per_component.front().method;
    if (!verify_3rdf(g, res.witness).valid() || weight(res.witness) != res.weight)
        throw std::logic_error("auto solve: merged witness failed verification");
    return res;
}

std::string method_summary(const SolveResult& res) {
    std::string first = method_name(res.per_component.empty()
                                        ? res.method
                                        : res.per_component.front().method);
    for (const auto& c : res.per_component)
        if (method_name(c.method) != first) return "mixed";
    return first;
}

// ------------------------------------------------------------------ commands

struct VerifyOpts {
    std::string graph_path, labeling_path;
    int k = 3;
    bool json_out = false;
};

int run_verify(const VerifyOpts& o) {
    Timer timer;
    const std::string gtext = read_input(o.graph_path);
    const std::string ltext = read_input(o.labeling_path);
    Graph g = from_edge_list(gtext);
    Labeling l = labeling_from_text(ltext, o.k);
    VerifyResult vr = o.k == 3 ? verify_3rdf(g, l) : verify_krdf(g, l, o.k);

    if (o.json_out) {
        json out;
        out["command"] = "verify";
        out["k"] = o.k;
        out["order"] = g.order();
        out["weight"] = weight(l);
        out["valid"] = vr.valid();
        out["violations"] = json::array();
        for (const auto& v : vr.violations)
            out["violations"].push_back(
                json{{"vertex", v.vertex}, {"required", v.required}, {"achieved", v.achieved}});
        out["digest_graph"] = digest_of(gtext);
        out["digest_labeling"] = digest_of(ltext);
        out["timing_ms"] = timer.ms();
        std::cout << out.dump(2) << "\n";
    } else if (vr.valid()) {
        std::cout << "valid weight=" << weight(l) << "\n";
    } else {
        std::cout << "invalid (" << vr.violations.size() << " violations)\n";
        for (const auto& v : vr.violations)
            std::cout << "vertex " << v.vertex << ": requires " << v.required << ", has "
                      << v.achieved << "\n";
    }
    return vr.valid() ? 0 : 1;
}

struct SolveOpts {
    std::string graph_path;
    std::string method = "auto";
    int k = 3;
    bool no_ones = false;
    bool json_out = false;
    int threads = 1;
    std::optional<std::string> out_path;
};

int run_solve(const SolveOpts& o) {
    Timer timer;
    const std::string gtext = read_input(o.graph_path);
    Graph g = from_edge_list(gtext);
    if (o.k < 1) throw std::invalid_argument("k must be at least 1");
    if (o.method != "bruteforce") {
        if (o.no_ones)
            throw std::invalid_argument("--no-ones only applies to --method bruteforce");
        if (o.k != 3 && o.method != "auto")
            throw std::invalid_argument("only bruteforce handles k != 3");
    }

    SolveResult res;
    if (o.method == "bruteforce" || (o.method == "auto" && o.k != 3)) {
        res = gamma_kr_bruteforce(g, o.k, o.no_ones);
    } else if (o.method == "bnb") {
        res = gamma_3r_bnb(g);
    } else if (o.method == "treedp") {
        res = gamma_3r_tree(g);
    } else if (o.method == "closedform") {
        auto cf = closed_form_solve(g);
        if (!cf) throw std::invalid_argument("closed form needs a connected path or cycle");
        res = *cf;
    } else if (o.method == "auto") {
        res = auto_solve(g);
    } else {
        throw std::invalid_argument("unknown method: " + o.method);
    }

    const std::string witness_text = chomp(labeling_to_text(res.witness));
    if (o.out_path) emit(o.out_path, witness_text + "\n");
    if (o.json_out) {
        json out;
        out["command"] = "solve";
        out["k"] = o.k;
        out["order"] = g.order();
        out["method_requested"] = o.method;
        out["method"] = method_summary(res);
        out["weight"] = res.weight;
        out["nodes"] = res.nodes_explored;
        out["witness"] = witness_text;
        out["per_component"] = per_component_json(res);
        out["digest_graph"] = digest_of(gtext);
        out["timing_ms"] = timer.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "weight " << res.weight << "\n"
                  << "method " << method_summary(res) << "\n"
                  << "nodes " << res.nodes_explored << "\n"
                  << "labeling " << witness_text << "\n";
    }
    return 0;
}

struct BoundOpts {
    std::string graph_path;
    bool json_out = false;
};

int run_bound(const BoundOpts& o) {
    Timer timer;
    const std::string gtext = read_input(o.graph_path);
    Graph g = from_edge_list(gtext);
    BoundReport rep = best_bounds(g);
    std::optional<int> exact;
    try {
        exact = auto_solve(g).weight;
    } catch (const GuardError&) {
        // graph too large for the exact engines; bounds stand alone
    }

    if (o.json_out) {
        json out;
        out["command"] = "bound";
        out["order"] = g.order();
        out["size"] = g.size();
        out["exact"] = exact ? json(*exact) : json(nullptr);
        json jb = json::parse(bound_report_json(rep));
        for (auto& je : jb["entries"]) {
            bool tight = false;
            if (exact && je["applicable"].get<bool>()) {
                const std::string name = je["name"].get<std::string>();
                for (const auto& e : rep.entries)
                    if (e.name == name && e.applicable)
                        tight = e.value.num == static_cast<long long>(*exact) * e.value.den;
            }
            je["tight"] = tight;
        }
        out["entries"] = jb["entries"];
        out["best_upper"] = jb["best_upper"];
        out["best_lower"] = jb["best_lower"];
        out["digest_graph"] = digest_of(gtext);
        out["timing_ms"] = timer.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : rep.entries) {
            std::cout << (e.kind == BoundKind::upper ? "upper " : "lower ") << e.name << ": ";
            if (!e.applicable) {
                std::cout << "n/a (" << e.reason << ")\n";
                continue;
            }
            std::cout << rat_text(e.value);
            if (exact && e.value.num == static_cast<long long>(*exact) * e.value.den)
                std::cout << " (tight)";
            if (!e.reason.empty()) std::cout << " [" << e.reason << "]";
            std::cout << "\n";
        }
        if (rep.best_upper) std::cout << "best upper " << rat_text(*rep.best_upper) << "\n";
        if (rep.best_lower) std::cout << "best lower " << rat_text(*rep.best_lower) << "\n";
        if (exact) std::cout << "exact " << *exact << "\n";
    }
    return 0;
}

struct GenOpts {
    std::string family;
    int order = 0, r = 1, s = 1, m = 1, n = 1, blocks = 1;
    double prob = 0.5;
    std::vector<int> legs;
    std::uint64_t seed = kDefaultSeed;
    bool seed_given = false, hubs_given = false, list = false;
    std::string hubs_path;
    bool json_out = false;
    std::optional<std::string> out_path;
};

void print_gen_list() {
    std::cout << "path --order N\n"
                 "cycle --order N          (N >= 3)\n"
                 "star --order N           (N >= 2, center 0)\n"
                 "double_star --r R --s S  (leaf counts per stem)\n"
                 "complete_bipartite --m M --n N\n"
                 "spider --legs L1,L2,...  (center 0)\n"
                 "gnp --order N --prob P [--seed S]\n"
                 "random_tree --order N [--seed S]\n"
                 "family_f --blocks K [--seed S]   (tree of 4-vertex blocks)\n"
                 "family_h --blocks K [--seed S | --hubs FILE]\n";
}

int run_gen(const GenOpts& o) {
    Timer timer;
    if (o.list) {
        print_gen_list();
        return 0;
    }
    if (o.family.empty())
        throw std::invalid_argument("gen: family name required (try --list)");

    std::optional<Graph> g;
    std::optional<int> known;
    if (o.family == "path") {
        g = gen::path(o.order);
        known = gamma_path(o.order).weight;
    } else if (o.family == "cycle") {
        g = gen::cycle(o.order);
        known = gamma_cycle(o.order).weight;
    } else if (o.family == "star") {
        g = gen::star(o.order);
        known = gamma_star(o.order).weight;
    } else if (o.family == "double_star") {
        g = gen::double_star(o.r, o.s);
        known = gamma_double_star(o.r, o.s).weight;
    } else if (o.family == "complete_bipartite") {
        g = gen::complete_bipartite(o.m, o.n);
    } else if (o.family == "spider") {
        g = gen::spider(o.legs);
    } else if (o.family == "gnp") {
        g = gen::gnp(o.order, o.prob, o.seed);
    } else if (o.family == "random_tree") {
        g = gen::random_tree(o.order, o.seed);
    } else if (o.family == "family_f") {
        g = o.seed_given ? family_f(o.blocks, o.seed) : family_f(o.blocks);
        known = family_value(o.blocks).weight;
    } else if (o.family == "family_h") {
        if (o.hubs_given)
            g = family_h(o.blocks, from_edge_list(read_input(o.hubs_path)));
        else
            g = family_h(o.blocks, o.seed);
        known = family_value(o.blocks).weight;
    } else {
        throw std::invalid_argument("unknown family: " + o.family + " (try --list)");
    }

    const std::string text = to_edge_list(*g);
    if (o.json_out) {
        json out;
        out["command"] = "gen";
        out["family"] = o.family;
        out["order"] = g->order();
        out["size"] = g->size();
        out["seed"] = o.seed;
        out["known_value"] = known ? json(*known) : json(nullptr);
        out["edge_list"] = text;
        out["timing_ms"] = timer.ms();
        std::cout << out.dump(2) << "\n";
        if (o.out_path) emit(o.out_path, text);
    } else {
        emit(o.out_path, text);
    }
    return 0;
}

struct ReduceOpts {
    std::string x3c_path;
    std::string variant = "bipartite";
    std::optional<std::string> cover_path, extract_path, out_path, roles_path;
    bool solve = false;
    bool json_out = false;
};

int run_reduce(const ReduceOpts& o) {
    Timer timer;
    const std::string xtext = read_input(o.x3c_path);
    X3CInstance inst = x3c_from_text(xtext);
    GadgetVariant variant;
    if (o.variant == "bipartite")
        variant = GadgetVariant::bipartite;
    else if (o.variant == "chordal")
        variant = GadgetVariant::chordal;
    else
        throw std::invalid_argument("variant must be bipartite or chordal");
    GadgetMap m = build_gadget(inst, variant);

    json out;
    out["command"] = "reduce";
    out["variant"] = o.variant;
    out["q"] = inst.q;
    out["t"] = static_cast<int>(inst.triples.size());
    out["order"] = m.graph.order();
    out["threshold"] = m.threshold;
    out["digest_x3c"] = digest_of(xtext);

    int rc = 0;
    std::string human;
    if (o.extract_path) {
        Labeling l = labeling_from_text(read_input(*o.extract_path));
        try {
            std::vector<int> cover = labeling_to_cover(m, l);
            std::ostringstream line;
            for (std::size_t i = 0; i < cover.size(); ++i)
                line << (i ? " " : "") << cover[i];
            human = line.str() + "\n";
            out["cover"] = cover;
        } catch (const std::invalid_argument& e) {
            std::cerr << "extract: " << e.what() << "\n";
            return 1;
        }
    } else if (o.cover_path) {
        std::istringstream in(read_input(*o.cover_path));
        std::vector<int> cover;
        for (int x; in >> x;) cover.push_back(x);
        try {
            Labeling l = cover_to_labeling(m, cover);
            human = labeling_to_text(l);
            out["labeling"] = chomp(labeling_to_text(l));
            out["weight"] = weight(l);
        } catch (const std::invalid_argument& e) {
            std::cerr << "cover: " << e.what() << "\n";
            return 1;
        }
    } else if (o.solve) {
        auto cover = x3c_bruteforce(inst);
        if (cover) {
            std::ostringstream line;
            for (std::size_t i = 0; i < cover->size(); ++i)
                line << (i ? " " : "") << (*cover)[i];
            human = line.str() + "\n";
            out["cover"] = *cover;
        } else {
            human = "no exact cover\n";
            out["cover"] = nullptr;
            rc = 1;
        }
    } else {
        human = to_edge_list(m.graph);
        out["edge_list"] = human;
    }

    out["roles"] = json::parse(gadget_roles_json(m));
    out["timing_ms"] = timer.ms();
    // Role map rides along as a sidecar whenever the gadget goes to a file;
    // --roles overrides the sidecar location.
    std::optional<std::string> roles_path = o.roles_path;
    if (!roles_path && o.out_path && !o.cover_path && !o.extract_path && !o.solve)
        roles_path = *o.out_path + ".roles.json";
    if (roles_path) emit(roles_path, gadget_roles_json(m) + "\n");
    if (o.out_path) emit(o.out_path, human);
    if (o.json_out)
        std::cout << out.dump(2) << "\n";
    else if (!o.out_path)
        emit(std::nullopt, human);
    return rc;
}

struct ChainOpts {
    std::string graph_path;
    bool json_out = false;
};

int run_chain(const ChainOpts& o) {
    Timer timer;
    const std::string gtext = read_input(o.graph_path);
    Graph g = from_edge_list(gtext);
    ChainReport cr = inequality_chain_report(g);
    if (o.json_out) {
        json out;
        out["command"] = "chain";
        out["order"] = g.order();
        out["gamma"] = cr.gamma;
        out["roman"] = cr.roman;
        out["double_roman"] = cr.double_roman;
        out["triple_roman"] = cr.triple_roman;
        out["relations"] = json{{"gamma_le_roman", cr.gamma_le_roman},
                                {"roman_le_two_gamma", cr.roman_le_two_gamma},
                                {"two_gamma_le_double", cr.two_gamma_le_double},
                                {"double_lt_triple", cr.double_lt_triple},
                                {"two_triple_le_three_double", cr.two_triple_le_three_double},
                                {"triple_le_four_gamma", cr.triple_le_four_gamma}};
        out["holds"] = cr.chain_holds();
        out["digest_graph"] = digest_of(gtext);
        out["timing_ms"] = timer.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "gamma " << cr.gamma << "\n"
                  << "roman " << cr.roman << "\n"
                  << "double_roman " << cr.double_roman << "\n"
                  << "triple_roman " << cr.triple_roman << "\n"
                  << "chain " << (cr.chain_holds() ? "holds" : "violated") << "\n";
    }
    return cr.chain_holds() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple Roman domination toolkit"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify_cmd = app.add_subcommand("verify", "check a labeling against a graph");
    verify_cmd->add_option("graph", vo.graph_path, "edge-list file ('-' for stdin)")->required();
    verify_cmd->add_option("labeling", vo.labeling_path, "labeling file")->required();
    verify_cmd->add_option("--k", vo.k, "domination strength (default 3)");
    verify_cmd->add_flag("--json", vo.json_out, "JSON report on stdout");

    SolveOpts so;
    auto* solve_cmd = app.add_subcommand("solve", "compute an optimal labeling");
    solve_cmd->add_option("graph", so.graph_path, "edge-list file ('-' for stdin)")->required();
    solve_cmd->add_option("--method", so.method,
                          "auto|bruteforce|bnb|treedp|closedform (default auto)");
    solve_cmd->add_option("--k", so.k, "domination strength (default 3)");
    solve_cmd->add_flag("--no-ones", so.no_ones, "restrict bruteforce to labels {0,2,3,4}");
    solve_cmd->add_option("--threads", so.threads,
                          "accepted for compatibility; the engine is sequential");
    solve_cmd->add_option("--out", so.out_path, "write the witness labeling to a file");
    solve_cmd->add_flag("--json", so.json_out, "JSON report on stdout");

    BoundOpts bo;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate bound formulas");
    bound_cmd->add_option("graph", bo.graph_path, "edge-list file ('-' for stdin)")->required();
    bound_cmd->add_flag("--json", bo.json_out, "JSON report on stdout");

    GenOpts go;
    auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen_cmd->add_option("family", go.family, "family name (see --list)");
    gen_cmd->add_flag("--list", go.list, "list families and parameters");
    gen_cmd->add_option("--order", go.order, "vertex count");
    gen_cmd->add_option("--r", go.r, "leaves on stem 0 (double_star)");
    gen_cmd->add_option("--s", go.s, "leaves on stem 1 (double_star)");
    gen_cmd->add_option("--m", go.m, "left side size (complete_bipartite)");
    gen_cmd->add_option("--n", go.n, "right side size (complete_bipartite)");
    gen_cmd->add_option("--legs", go.legs, "spider leg lengths")->delimiter(',');
    gen_cmd->add_option("--prob", go.prob, "edge probability (gnp)");
    gen_cmd->add_option("--blocks", go.blocks, "block count (family_f, family_h)");
    auto* seed_opt = gen_cmd->add_option("--seed", go.seed, "RNG seed (default 1729)");
    gen_cmd->add_option("--hubs", go.hubs_path, "hub edge-list file (family_h)");
    gen_cmd->add_option("--out", go.out_path, "write the edge list to a file");
    gen_cmd->add_flag("--json", go.json_out, "JSON report on stdout");

    ReduceOpts ro;
    auto* reduce_cmd = app.add_subcommand("reduce", "exact-cover gadget construction");
    reduce_cmd->add_option("x3c", ro.x3c_path, "instance file ('-' for stdin)")->required();
    reduce_cmd->add_option("--variant", ro.variant, "bipartite|chordal (default bipartite)");
    reduce_cmd->add_option("--cover", ro.cover_path, "triple indices -> emit labeling");
    reduce_cmd->add_option("--extract", ro.extract_path, "labeling file -> emit cover");
    reduce_cmd->add_flag("--solve", ro.solve, "search the instance for an exact cover");
    reduce_cmd->add_option("--out", ro.out_path,
                           "write the main output to a file (gadget builds also write a "
                           "FILE.roles.json sidecar)");
    reduce_cmd->add_option("--roles", ro.roles_path,
                           "write the vertex-role JSON to a file (overrides the sidecar path)");
    reduce_cmd->add_flag("--json", ro.json_out, "JSON report on stdout");

    ChainOpts co;
    auto* chain_cmd = app.add_subcommand("chain", "compare the four domination numbers");
    chain_cmd->add_option("graph", co.graph_path, "edge-list file ('-' for stdin)")->required();
    chain_cmd->add_flag("--json", co.json_out, "JSON report on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    go.seed_given = seed_opt->count() > 0;
    go.hubs_given = gen_cmd->count("--hubs") > 0;

    try {
        if (verify_cmd->parsed()) return run_verify(vo);
        if (solve_cmd->parsed()) return run_solve(so);
        if (bound_cmd->parsed()) return run_bound(bo);
        if (gen_cmd->parsed()) return run_gen(go);
        if (reduce_cmd->parsed()) return run_reduce(ro);
        if (chain_cmd->parsed()) return run_chain(co);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
