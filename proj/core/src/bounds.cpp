#include "trdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "trdom/exact.hpp"
#include "trdom/rng.hpp"

namespace trdom {

Rat Rat::of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rat{n, d};
}

long long Rat::floored() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

BoundEntry not_applicable(std::string name, BoundKind kind, std::string reason) {
    BoundEntry e;
    e.name = std::move(name);
    e.kind = kind;
    e.applicable = false;
    e.reason = std::move(reason);
    return e;
}

// Constructive entries carry a labeling whose weight equals the bound; both
// facts are re-checked here so a bad construction can never leave the module.
BoundEntry with_certificate(const Graph& g, std::string name, Rat value, Labeling cert,
                            std::string reason = "") {
    if (!verify_3rdf(g, cert).valid()) throw std::logic_error(name + ": invalid certificate");
    if (value.den != 1 || weight(cert) != value.num)
        throw std::logic_error(name + ": certificate weight does not match bound");
    BoundEntry e;
    e.name = std::move(name);
    e.kind = BoundKind::upper;
    e.value = value;
    e.applicable = true;
    e.reason = std::move(reason);
    e.certificate = std::move(cert);
    return e;
}

BoundEntry formula_only(std::string name, BoundKind kind, Rat value, std::string reason = "") {
    BoundEntry e;
    e.name = std::move(name);
    e.kind = kind;
    e.value = value;
    e.applicable = true;
    e.reason = std::move(reason);
    return e;
}

int first_max_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

}  // namespace

BoundEntry ub_trivial(const Graph& g) {
    StructReport sr = struct_report(g);
    if (sr.delta < 1) return not_applicable("trivial", BoundKind::upper, "isolated vertex");
    Labeling cert{3, std::vector<int>(static_cast<std::size_t>(g.order()), 2)};
    return with_certificate(g, "trivial", Rat::of(2LL * g.order()), std::move(cert));
}

BoundEntry ub_max_degree(const Graph& g) {
    // One heavy vertex blanks out its whole neighborhood: a max-degree vertex
    // takes 4, its neighbors 0, everyone else 3. Summed per component when
    // the graph is disconnected.
    auto comps = components(g);
    for (const auto& c : comps)
        if (c.size() < 2) return not_applicable("max_degree", BoundKind::upper, "isolated vertex");
    Labeling cert{3, std::vector<int>(static_cast<std::size_t>(g.order()), 3)};
    long long total = 0;
    for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        int local = first_max_degree_vertex(sub);
        total += 3LL * sub.order() - 3LL * sub.degree(local) + 1;
        cert.values[comp[static_cast<std::size_t>(local)]] = 4;
        for (int w : sub.neighbors(local)) cert.values[comp[static_cast<std::size_t>(w)]] = 0;
    }
    std::string reason = comps.size() > 1 ? "disconnected: summed per component" : "";
    return with_certificate(g, "max_degree", Rat::of(total), std::move(cert), std::move(reason));
}

BoundEntry ub_max_degree_girth4(const Graph& g) {
    const char* name = "max_degree_girth4";
    StructReport sr = struct_report(g);
    if (!sr.is_connected) return not_applicable(name, BoundKind::upper, "not connected");
    if (sr.delta < 2) return not_applicable(name, BoundKind::upper, "minimum degree below 2");
    if (sr.Delta > g.order() - 2)
        return not_applicable(name, BoundKind::upper, "maximum degree above order minus 2");
    if (!sr.girth || *sr.girth < 4) return not_applicable(name, BoundKind::upper, "girth below 4");
    // Triangle-freeness gives every neighbor of the hub a second 3-labeled
    // helper outside the neighborhood, so the hub itself only needs a 3.
    int hub = first_max_degree_vertex(g);
    Labeling cert{3, std::vector<int>(static_cast<std::size_t>(g.order()), 3)};
    for (int w : g.neighbors(hub)) cert.values[w] = 0;
    cert.values[hub] = 3;
    return with_certificate(g, name, Rat::of(3LL * g.order() - 3LL * sr.Delta), std::move(cert));
}

BoundEntry ub_girth5(const Graph& g) {
    const char* name = "girth5";
    StructReport sr = struct_report(g);
    if (sr.delta < 2) return not_applicable(name, BoundKind::upper, "minimum degree below 2");
    if (!sr.girth || *sr.girth < 5) return not_applicable(name, BoundKind::upper, "girth below 5");
    // No 4-cycles: outside the hub's neighborhood every vertex keeps a
    // same-tier neighbor, so the bulk drops from 3 to 2.
    int hub = first_max_degree_vertex(g);
    Labeling cert{3, std::vector<int>(static_cast<std::size_t>(g.order()), 2)};
    for (int w : g.neighbors(hub)) cert.values[w] = 0;
    cert.values[hub] = 3;
    return with_certificate(g, name, Rat::of(2LL * g.order() - 2LL * sr.Delta + 1),
                            std::move(cert));
}

BoundEntry ub_regular_girth7(const Graph& g) {
    const char* name = "regular_girth7";
    StructReport sr = struct_report(g);
    if (!sr.is_connected) return not_applicable(name, BoundKind::upper, "not connected");
    if (!sr.regular_degree) return not_applicable(name, BoundKind::upper, "not regular");
    if (!sr.girth || *sr.girth < 7) return not_applicable(name, BoundKind::upper, "girth below 7");
    const int r = *sr.regular_degree;
    // BFS tiers from an arbitrary root: the r first-tier vertices take 3 and
    // cover root and second tier (0), everything deeper coasts on 2s.
    const int p = g.order();
    std::vector<int> dist(static_cast<std::size_t>(p), -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    Labeling cert{3, std::vector<int>(static_cast<std::size_t>(p), 2)};
    for (int v = 0; v < p; ++v) {
        if (dist[v] == 1)
            cert.values[v] = 3;
        else if (dist[v] == 0 || dist[v] == 2)
            cert.values[v] = 0;
    }
    long long value = 2LL * p - 2LL * r * r + 3LL * r - 2;
    return with_certificate(g, name, Rat::of(value), std::move(cert));
}

BoundEntry ub_probabilistic(const Graph& g) {
    StructReport sr = struct_report(g);
    if (sr.delta < 1) return not_applicable("probabilistic", BoundKind::upper, "isolated vertex");
    const long double d1 = sr.delta + 1;
    const long double bound =
        (4.0L * g.order() / d1) * (std::log(3.0L * d1 / 4.0L) + 1.0L);
    return formula_only("probabilistic", BoundKind::upper,
                        Rat::of(static_cast<long long>(std::floor(bound))));
}

BoundEntry ub_tree(const Graph& g) {
    StructReport sr = struct_report(g);
    if (!sr.is_tree) return not_applicable("tree", BoundKind::upper, "not a tree");
    if (g.order() < 3) return not_applicable("tree", BoundKind::upper, "order below 3");
    return formula_only("tree", BoundKind::upper, Rat::of(7LL * g.order(), 4));
}

BoundEntry ub_diameter(const Graph& g) {
    StructReport sr = struct_report(g);
    if (!sr.diameter) return not_applicable("diameter", BoundKind::upper, "not connected");
    return formula_only("diameter", BoundKind::upper,
                        Rat::of(9LL * g.order() - 5LL * *sr.diameter + 7, 3));
}

BoundEntry ub_girth_bound(const Graph& g) {
    StructReport sr = struct_report(g);
    if (!sr.girth) return not_applicable("girth", BoundKind::upper, "acyclic");
    return formula_only("girth", BoundKind::upper,
                        Rat::of(9LL * g.order() + 6 - 5LL * *sr.girth, 3));
}

BoundEntry lb_degree_domination(const Graph& g, std::optional<int> gamma) {
    const char* name = "degree_domination";
    StructReport sr = struct_report(g);
    if (!sr.is_connected) return not_applicable(name, BoundKind::lower, "not connected");
    if (sr.Delta < 1) return not_applicable(name, BoundKind::lower, "no edges");
    const long long p = g.order();
    long long dom;
    std::string reason;
    if (gamma) {
        dom = *gamma;
    } else if (p <= kOracleMaxComponent) {
        dom = domination_number(g);
    } else {
        dom = ceil_div(p, sr.Delta + 1);
        reason = "domination number replaced by its degree lower bound; weakened";
    }
    long long value = ceil_div(2 * p + (sr.Delta - 1) * dom, sr.Delta);
    return formula_only(name, BoundKind::lower, Rat::of(value), std::move(reason));
}

BoundEntry lb_chain(const Graph& g) {
    for (const auto& comp : components(g))
        if (static_cast<int>(comp.size()) > kOracleMaxComponent)
            return not_applicable("chain", BoundKind::lower,
                                  "component too large for the double Roman oracle");
    return formula_only("chain", BoundKind::lower,
                        Rat::of(static_cast<long long>(double_roman_number(g)) + 1));
}

BoundReport best_bounds(const Graph& g) {
    BoundReport r;
    r.entries.push_back(ub_trivial(g));
    r.entries.push_back(ub_max_degree(g));
    r.entries.push_back(ub_max_degree_girth4(g));
    r.entries.push_back(ub_girth5(g));
    r.entries.push_back(ub_regular_girth7(g));
    r.entries.push_back(ub_probabilistic(g));
    r.entries.push_back(ub_tree(g));
    r.entries.push_back(ub_diameter(g));
    r.entries.push_back(ub_girth_bound(g));
    r.entries.push_back(lb_degree_domination(g));
    r.entries.push_back(lb_chain(g));
    for (const auto& e : r.entries) {
        if (!e.applicable) continue;
        if (e.kind == BoundKind::upper) {
            if (!r.best_upper || e.value < *r.best_upper) r.best_upper = e.value;
        } else {
            if (!r.best_lower || *r.best_lower < e.value) r.best_lower = e.value;
        }
    }
    if (r.best_upper && r.best_lower && !(*r.best_lower <= *r.best_upper))
        throw std::logic_error("bound report: lower bound exceeds upper bound");
    return r;
}

Labeling randomized_3rdf(const Graph& g, std::uint64_t seed, int trials) {
    StructReport sr = struct_report(g);
    if (sr.delta < 1) throw std::invalid_argument("randomized construction needs min degree 1");
    if (trials < 1) throw std::invalid_argument("randomized construction needs trials >= 1");
    const int p = g.order();
    const long double d1 = sr.delta + 1;
    const long double theta =
        std::min(1.0L, std::max(0.0L, std::log(3.0L * d1 / 4.0L) / d1));
    Labeling best;
    std::uint64_t state = seed;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 gen(rng::splitmix64(state));
        std::vector<char> in_a(static_cast<std::size_t>(p), 0);
        for (int v = 0; v < p; ++v) in_a[v] = rng::unit(gen) < theta;
        // A -> 4, N(A)\A -> 0, untouched vertices -> 3: valid however A falls.
        Labeling l{3, std::vector<int>(static_cast<std::size_t>(p), 3)};
        for (int v = 0; v < p; ++v)
            if (in_a[v]) {
                l.values[v] = 4;
                for (int w : g.neighbors(v))
                    if (!in_a[w]) l.values[w] = 0;
            }
        if (!verify_3rdf(g, l).valid())
            throw std::logic_error("randomized construction produced an invalid labeling");
        if (best.values.empty() || weight(l) < weight(best)) best = std::move(l);
    }
    return best;
}

std::vector<Labeling> construction_candidates(const Graph& g) {
    std::vector<Labeling> out;
    for (BoundEntry e : {ub_trivial(g), ub_max_degree(g), ub_max_degree_girth4(g), ub_girth5(g),
                         ub_regular_girth7(g)})
        if (e.applicable && e.certificate) out.push_back(std::move(*e.certificate));
    out.push_back(Labeling{3, std::vector<int>(static_cast<std::size_t>(g.order()), 3)});
    return out;
}

std::string bound_report_json(const BoundReport& r) {
    using json = nlohmann::ordered_json;
    auto rat_to_json = [](const Rat& v) -> json {
        if (v.den == 1) return v.num;
        return json{{"num", v.num}, {"den", v.den}};
    };
    json out;
    out["entries"] = json::array();
    for (const auto& e : r.entries) {
        json je;
        je["name"] = e.name;
        je["kind"] = e.kind == BoundKind::upper ? "upper" : "lower";
        je["applicable"] = e.applicable;
        je["value"] = e.applicable ? rat_to_json(e.value) : json(nullptr);
        je["reason"] = e.reason;
        je["certificate"] =
            e.certificate ? json(labeling_to_text(*e.certificate)) : json(nullptr);
        out["entries"].push_back(std::move(je));
    }
    out["best_upper"] = r.best_upper ? rat_to_json(*r.best_upper) : json(nullptr);
    out["best_lower"] = r.best_lower ? rat_to_json(*r.best_lower) : json(nullptr);
    return out.dump(2);
}

}  // namespace trdom
