#include "trdom/exact.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trdom/bounds.hpp"
#include "trdom/errors.hpp"

namespace trdom {

const char* method_name(Method m) {
    switch (m) {
        case Method::bruteforce: return "bruteforce";
        case Method::bnb: return "bnb";
        case Method::treedp: return "treedp";
        case Method::closedform: return "closedform";
    }
    return "?";
}

namespace {

std::vector<int> bfs_order(const Graph& g, int start) {
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return order;
}

// ------------------------------------------------------------- brute force

struct BruteSearch {
    const Graph& g;
    int k;
    std::vector<int> alphabet;
    std::vector<int> order;                // position -> vertex
    std::vector<std::vector<int>> final_at;  // position -> vertices whose closed nbhd completes
    std::vector<int> label;
    std::vector<int> best_label;
    int best = INT_MAX;
    std::uint64_t nodes = 0;

    BruteSearch(const Graph& graph, int kk, bool no_ones) : g(graph), k(kk) {
        if (no_ones) {
            alphabet = {0, 2, 3, 4};
        } else {
            for (int c = 0; c <= k + 1; ++c) alphabet.push_back(c);
        }
        order = bfs_order(g, 0);
        std::vector<int> pos(order.size());
        for (std::size_t j = 0; j < order.size(); ++j) pos[order[j]] = static_cast<int>(j);
        final_at.resize(order.size());
        for (int u = 0; u < g.order(); ++u) {
            int last = pos[u];
            for (int w : g.neighbors(u)) last = std::max(last, pos[w]);
            final_at[last].push_back(u);
        }
        label.assign(order.size(), -1);
    }

    bool satisfied(int u) const {
        if (label[u] >= k) return true;
        int active = 0, total = label[u];
        for (int w : g.neighbors(u)) {
            if (label[w] >= 1) {
                ++active;
                total += label[w];
            }
        }
        return total >= active + k;
    }

    void dfs(std::size_t depth, int wsum) {
        if (depth == order.size()) {
            best = wsum;  // wsum < best guaranteed by the weight prune
            best_label = label;
            return;
        }
        int v = order[depth];
        for (int c : alphabet) {
            if (wsum + c >= best) continue;
            ++nodes;
            label[v] = c;
            bool ok = true;
            for (int u : final_at[depth])
                if (!satisfied(u)) {
                    ok = false;
                    break;
                }
            if (ok) dfs(depth + 1, wsum + c);
        }
        label[v] = -1;
    }
};

// ------------------------------------------------------- branch and bound

// Exhaustive search over labels {0,2,3,4} (an optimal 3RDF without 1s always
// exists), vertices in descending-degree order. Pruning:
//
//  (a) per-vertex satisfiability: a labeled short vertex must still be
//      reachable by 3 surplus per unlabeled neighbor;
//  (b) twin symmetry: vertices with equal open (or closed) neighborhoods are
//      interchangeable, so labels may be forced non-increasing along each
//      twin chain without losing any optimum;
//  (c) a completion bound. Outstanding demand counts every labeled vertex's
//      missing surplus plus max(0, 3 - have) per unlabeled vertex. Assigning
//      c to an unlabeled vertex u settles at most min(c,3) of u's own demand
//      and sends c-1 surplus to each of deg(u) neighbors, so it supplies at
//      most min(c,3) + (c-1)deg(u) demand units at cost c. Relaxing label
//      choices to fractional, independent takes makes the cheapest cover a
//      fractional knapsack: scan (cost, supply) offers by decreasing
//      supply/cost and charge the last take pro rata. Any completion pays at
//      least that, and an uncoverable remainder proves infeasibility.
struct BnbSearch {
    struct Offer {
        long long supply;
        int cost;
        int vertex;
    };

    const Graph& g;
    int n;
    std::vector<int> order;
    std::vector<int> prev_twin;   // earlier twin whose label caps ours, or -1
    std::vector<Offer> offers;    // all (vertex, label) supply offers, best rate first
    std::vector<int> label;       // -1 while unlabeled
    std::vector<int> have;        // surplus from labeled neighbors
    std::vector<int> unl;         // unlabeled neighbor count
    long long dunl = 0;           // total demand of unlabeled vertices
    long long smiss = 0;          // total missing surplus of labeled vertices
    int best;
    std::vector<int> best_label;
    std::uint64_t nodes = 0;

    static constexpr int kValues[4] = {0, 4, 3, 2};

    BnbSearch(const Graph& graph, int incumbent, std::vector<int> incumbent_labels)
        : g(graph), n(graph.order()), best(incumbent), best_label(std::move(incumbent_labels)) {
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        label.assign(static_cast<std::size_t>(n), -1);
        have.assign(static_cast<std::size_t>(n), 0);
        unl.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) unl[v] = g.degree(v);
        dunl = 3LL * n;

        // Twin chains. Equal open neighborhoods force non-adjacency, equal
        // closed ones force adjacency; either way swapping the two labels
        // preserves validity, so chained caps keep one sorted representative
        // per orbit. Twins share a degree, hence the earlier one is labeled
        // first under the stable order above.
        prev_twin.assign(static_cast<std::size_t>(n), -1);
        std::map<std::vector<int>, int> open_seen, closed_seen;
        for (int v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            std::vector<int> open(nb.begin(), nb.end());
            std::vector<int> closed = open;
            closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
            auto [oit, ofresh] = open_seen.try_emplace(std::move(open), v);
            auto [cit, cfresh] = closed_seen.try_emplace(std::move(closed), v);
            if (!ofresh) {
                prev_twin[v] = oit->second;
                oit->second = v;
            }
            if (!cfresh) {
                if (prev_twin[v] < 0) prev_twin[v] = cit->second;
                cit->second = v;
            }
        }

        offers.reserve(static_cast<std::size_t>(3 * n));
        for (int v = 0; v < n; ++v) {
            long long d = g.degree(v);
            offers.push_back({3 + 3 * d, 4, v});
            offers.push_back({3 + 2 * d, 3, v});
            offers.push_back({2 + d, 2, v});
        }
        std::stable_sort(offers.begin(), offers.end(), [](const Offer& a, const Offer& b) {
            return a.supply * b.cost > b.supply * a.cost;
        });
    }

    static int need_of(int lab) { return lab >= 3 ? 0 : 3 - lab; }

    bool reachable(int v) const {  // labeled v can still be satisfied
        return have[v] + 3 * unl[v] >= need_of(label[v]);
    }

    long long completion_bound() const {
        long long t = dunl + smiss;
        long long lb = 0;
        for (const Offer& o : offers) {
            if (t <= 0) return lb;
            if (label[o.vertex] >= 0) continue;
            if (o.supply >= t) return lb + (t * o.cost + o.supply - 1) / o.supply;
            t -= o.supply;
            lb += o.cost;
        }
        return t <= 0 ? lb : LLONG_MAX / 2;  // leftover demand: dead end
    }

    // Applies label c to v, updating all incremental state; returns false if
    // some labeled vertex becomes unsatisfiable (state still applied).
    bool apply(int v, int c) {
        label[v] = c;
        dunl -= std::max(0, 3 - have[v]);
        smiss += std::max(0, need_of(c) - have[v]);
        bool ok = reachable(v);
        const int gain = c > 0 ? c - 1 : 0;
        for (int w : g.neighbors(v)) {
            --unl[w];
            if (label[w] >= 0) {
                int before = std::max(0, need_of(label[w]) - have[w]);
                have[w] += gain;
                smiss += std::max(0, need_of(label[w]) - have[w]) - before;
                ok = ok && reachable(w);
            } else {
                int before = std::max(0, 3 - have[w]);
                have[w] += gain;
                dunl += std::max(0, 3 - have[w]) - before;
            }
        }
        return ok;
    }

    void undo(int v, int c) {
        const int gain = c > 0 ? c - 1 : 0;
        for (int w : g.neighbors(v)) {
            ++unl[w];
            if (label[w] >= 0) {
                int before = std::max(0, need_of(label[w]) - have[w]);
                have[w] -= gain;
                smiss += std::max(0, need_of(label[w]) - have[w]) - before;
            } else {
                int before = std::max(0, 3 - have[w]);
                have[w] -= gain;
                dunl += std::max(0, 3 - have[w]) - before;
            }
        }
        smiss -= std::max(0, need_of(c) - have[v]);
        dunl += std::max(0, 3 - have[v]);
        label[v] = -1;
    }

    void dfs(std::size_t depth, int wsum) {
        if (depth == order.size()) {
            best = wsum;
            best_label = label;
            return;
        }
        int v = order[depth];
        const int cap = prev_twin[v] >= 0 ? label[prev_twin[v]] : 4;
        for (int c : kValues) {
            if (c > cap || wsum + c >= best) continue;
            ++nodes;
            bool ok = apply(v, c);
            if (ok && wsum + c + completion_bound() < best) dfs(depth + 1, wsum + c);
            undo(v, c);
        }
    }
};

// Greedy descent for incumbents: repeatedly lower labels wherever the
// constraints of the vertex and its neighbors still hold. Lowering v can only
// break conditions inside N[v], so the check is local. Assumes no 1-labels.
void peel(const Graph& g, std::vector<int>& vals) {
    auto ok_at = [&](int u) {
        if (vals[u] >= 3) return true;
        int active = 0, total = vals[u];
        for (int w : g.neighbors(u))
            if (vals[w] >= 1) {
                ++active;
                total += vals[w];
            }
        return total >= active + 3;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            const int keep = vals[v];
            if (keep == 0) continue;
            for (int c : {0, 2, 3}) {
                if (c >= keep) break;
                vals[v] = c;
                bool ok = ok_at(v);
                for (int w : g.neighbors(v))
                    if (!(ok = ok && ok_at(w))) break;
                if (ok) {
                    changed = true;
                    break;
                }
                vals[v] = keep;
            }
        }
    }
}

// ------------------------------------------------- component-wise drivers

struct LocalSolve {
    std::vector<int> witness_values;
    int weight = 0;
    Method method = Method::bruteforce;
    std::uint64_t nodes = 0;
};

template <typename Solve>
SolveResult per_component(const Graph& g, Method method, Solve solve_one) {
    SolveResult res;
    res.method = method;
    res.witness.k = 3;
    res.witness.values.assign(static_cast<std::size_t>(g.order()), -1);
    for (const auto& members : components(g)) {
        Graph sub = induced_subgraph(g, members);
        LocalSolve ls = solve_one(sub);
        res.weight += ls.weight;
        res.nodes_explored += ls.nodes;
        for (std::size_t i = 0; i < members.size(); ++i)
            res.witness.values[members[i]] = ls.witness_values[i];
        res.per_component.push_back({members, ls.weight, ls.method, ls.nodes});
    }
    return res;
}

}  // namespace

SolveResult gamma_kr_bruteforce(const Graph& g, int k, bool restrict_no_ones) {
    if (k < 1) throw std::invalid_argument("bruteforce: k >= 1 required");
    if (restrict_no_ones && k != 3)
        throw std::invalid_argument("bruteforce: restrict_no_ones is only justified for k=3");
    auto res = per_component(g, Method::bruteforce, [&](const Graph& sub) {
        if (sub.order() > kBruteforceMaxComponent)
            throw GuardError("bruteforce: component of " + std::to_string(sub.order()) +
                             " vertices exceeds the limit of " +
                             std::to_string(kBruteforceMaxComponent));
        BruteSearch search(sub, k, restrict_no_ones);
        search.dfs(0, 0);
        LocalSolve out;
        out.witness_values = search.best_label;
        out.weight = search.best;
        out.nodes = search.nodes;
        return out;
    });
    res.witness.k = k;
    if (!verify_krdf(g, res.witness, k).valid())
        throw std::logic_error("bruteforce: witness failed verification");
    return res;
}

SolveResult gamma_3r_bnb(const Graph& g) {
    auto res = per_component(g, Method::bnb, [&](const Graph& sub) {
        LocalSolve out;
        out.method = Method::bnb;
        if (sub.order() > kBnbMaxComponent)
            throw GuardError("bnb: component of " + std::to_string(sub.order()) +
                             " vertices exceeds the limit of " + std::to_string(kBnbMaxComponent));
        if (sub.order() == 1) {
            out.witness_values = {3};
            out.weight = 3;
            return out;
        }
        // Incumbent: every constructive certificate, improved by greedy
        // peeling (the all-2 certificate exists here, so the candidate list
        // is never empty on a connected component).
        int inc_weight = INT_MAX;
        std::vector<int> inc_labels;
        for (const Labeling& cand : construction_candidates(sub)) {
            std::vector<int> vals = cand.values;
            peel(sub, vals);
            int w = std::accumulate(vals.begin(), vals.end(), 0);
            if (w < inc_weight) {
                inc_weight = w;
                inc_labels = std::move(vals);
            }
        }
        BnbSearch search(sub, inc_weight, std::move(inc_labels));
        search.dfs(0, 0);
        out.witness_values = search.best_label;
        out.weight = search.best;
        out.nodes = search.nodes;
        return out;
    });
    if (!verify_3rdf(g, res.witness).valid())
        throw std::logic_error("bnb: witness failed verification");
    return res;
}

// ----------------------------------------------------------- small oracles

namespace {

void oracle_guard(const Graph& sub, const char* who) {
    if (sub.order() > kOracleMaxComponent)
        throw GuardError(std::string(who) + ": component of " + std::to_string(sub.order()) +
                         " vertices exceeds the limit of " + std::to_string(kOracleMaxComponent));
}

int domination_component(const Graph& c) {
    const int n = c.order();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 1u << v;
        for (int w : c.neighbors(v)) m |= 1u << w;
        closed[v] = m;
    }
    int best = n;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) >= best) continue;
        std::uint32_t covered = 0;
        for (std::uint32_t m = mask; m; m &= m - 1)
            covered |= closed[std::countr_zero(m)];
        if (covered == full) best = std::popcount(mask);
    }
    return best;
}

int roman_component(const Graph& c) {
    // Choosing V2 fixes the optimum: undominated leftovers take label 1.
    const int n = c.order();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> open(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 0;
        for (int w : c.neighbors(v)) m |= 1u << w;
        open[v] = m;
    }
    int best = n;  // all-1 labeling
    for (std::uint32_t v2 = 0; v2 <= full; ++v2) {
        int w = 2 * std::popcount(v2);
        if (w >= best) continue;
        std::uint32_t dominated = 0;
        for (std::uint32_t m = v2; m; m &= m - 1)
            dominated |= open[std::countr_zero(m)];
        w += std::popcount(full & ~v2 & ~dominated);
        best = std::min(best, w);
    }
    return best;
}

int double_roman_component(const Graph& c) {
    // For fixed (V3, V2) the rest is forced: 0 where a 3-neighbor or two
    // 2-neighbors exist, otherwise 1 where a positive neighbor exists,
    // otherwise the pair is infeasible.
    const int n = c.order();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> open(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 0;
        for (int w : c.neighbors(v)) m |= 1u << w;
        open[v] = m;
    }
    int best = 3 * n;
    for (std::uint32_t v3 = 0; v3 <= full; ++v3) {
        int base = 3 * std::popcount(v3);
        if (base >= best) continue;
        std::uint32_t rest = full & ~v3;
        std::uint32_t v2 = rest;
        while (true) {
            int w = base + 2 * std::popcount(v2);
            if (w < best) {
                bool feasible = true;
                for (std::uint32_t m = full & ~v3 & ~v2; m; m &= m - 1) {
                    int u = std::countr_zero(m);
                    if (open[u] & v3) continue;
                    int twos = std::popcount(open[u] & v2);
                    if (twos >= 2) continue;
                    if (twos == 1) {
                        ++w;
                        if (w >= best) {
                            feasible = false;
                            break;
                        }
                        continue;
                    }
                    feasible = false;
                    break;
                }
                if (feasible) best = std::min(best, w);
            }
            if (v2 == 0) break;
            v2 = (v2 - 1) & rest;
        }
    }
    return best;
}

int sum_over_components(const Graph& g, const char* who, int (*solve)(const Graph&)) {
    int total = 0;
    for (const auto& members : components(g)) {
        Graph sub = induced_subgraph(g, members);
        oracle_guard(sub, who);
        total += solve(sub);
    }
    return total;
}

}  // namespace

int domination_number(const Graph& g) {
    return sum_over_components(g, "domination_number", domination_component);
}

int roman_number(const Graph& g) {
    return sum_over_components(g, "roman_number", roman_component);
}

int double_roman_number(const Graph& g) {
    return sum_over_components(g, "double_roman_number", double_roman_component);
}

ChainReport inequality_chain_report(const Graph& g) {
    for (const auto& members : components(g))
        if (static_cast<int>(members.size()) > kChainMaxComponent)
            throw GuardError("inequality_chain_report: component of " +
                             std::to_string(members.size()) + " vertices exceeds the limit of " +
                             std::to_string(kChainMaxComponent));
    ChainReport r;
    r.gamma = domination_number(g);
    r.roman = roman_number(g);
    r.double_roman = double_roman_number(g);
    r.triple_roman = gamma_kr_bruteforce(g, 3).weight;
    r.gamma_le_roman = r.gamma <= r.roman;
    r.roman_le_two_gamma = r.roman <= 2 * r.gamma;
    r.two_gamma_le_double = 2 * r.gamma <= r.double_roman;
    r.double_lt_triple = r.double_roman < r.triple_roman;
    r.two_triple_le_three_double = 2 * r.triple_roman <= 3 * r.double_roman;
    r.triple_le_four_gamma = r.triple_roman <= 4 * r.gamma;
    return r;
}

}  // namespace trdom
