#include "trdom/tree_dp.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

namespace trdom {

namespace {

constexpr int kInf = 1 << 28;
constexpr std::array<int, 4> kLbl = {0, 2, 3, 4};

int need_of(int lbl) { return std::max(0, 3 - lbl); }
int help_of(int lbl) { return std::max(0, lbl - 1); }

using Table = std::array<std::array<int, 4>, 4>;  // [label index][surplus] -> cost

Table init_table(int li) {
    Table t;
    for (auto& row : t) row.fill(kInf);
    (void)li;
    return t;
}

}  // namespace

SolveResult gamma_3r_tree(const Graph& g) {
    StructReport sr = struct_report(g);
    if (!sr.is_tree) throw std::invalid_argument("tree solver: input graph is not a tree");

    const int p = g.order();
    SolveResult res;
    res.method = Method::treedp;
    res.witness.k = 3;

    if (p == 1) {
        res.weight = 3;
        res.witness.values = {3};
        res.per_component.push_back({{0}, 3, Method::treedp, 0});
        return res;
    }

    // Root at 0; children in adjacency order.
    std::vector<int> parent(static_cast<std::size_t>(p), -1);
    std::vector<int> order;
    {
        std::vector<char> seen(static_cast<std::size_t>(p), 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
        }
    }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(p));
    for (int v : order)
        if (parent[v] >= 0) children[parent[v]].push_back(v);

    // stages[v][i] is the table after folding the first i children of v;
    // stages[v].back() is v's finished table. Kept for reconstruction.
    std::vector<std::vector<Table>> stages(static_cast<std::size_t>(p));

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        Table cur = init_table(0);
        for (int li = 0; li < 4; ++li) cur[li][0] = kLbl[li];
        stages[v].push_back(cur);
        for (int c : children[v]) {
            const Table& child = stages[c].back();
            Table next = init_table(0);
            for (int li = 0; li < 4; ++li) {
                const int parent_help = help_of(kLbl[li]);
                for (int s = 0; s < 4; ++s) {
                    if (cur[li][s] >= kInf) continue;
                    for (int cli = 0; cli < 4; ++cli) {
                        const int lift = help_of(kLbl[cli]);
                        const int need_c = need_of(kLbl[cli]);
                        for (int sc = 0; sc < 4; ++sc) {
                            if (child[cli][sc] >= kInf) continue;
                            if (sc + parent_help < need_c) continue;
                            int s2 = std::min(3, s + lift);
                            int cost = cur[li][s] + child[cli][sc];
                            next[li][s2] = std::min(next[li][s2], cost);
                        }
                    }
                }
            }
            cur = next;
            stages[v].push_back(cur);
        }
    }

    // Root optimum: its surplus must cover its own need.
    const Table& root = stages[0].back();
    int best = kInf, best_li = -1, best_s = -1;
    for (int li = 0; li < 4; ++li)
        for (int s = need_of(kLbl[li]); s < 4; ++s)
            if (root[li][s] < best) {
                best = root[li][s];
                best_li = li;
                best_s = s;
            }
    if (best >= kInf) throw std::logic_error("tree solver: no feasible root state");

    // Walk back down, peeling children off each vertex's fold in reverse.
    res.witness.values.assign(static_cast<std::size_t>(p), -1);
    std::deque<std::array<int, 3>> todo{{0, best_li, best_s}};  // vertex, label idx, surplus
    while (!todo.empty()) {
        auto [v, li, s] = todo.front();
        todo.pop_front();
        res.witness.values[v] = kLbl[li];
        const int parent_help = help_of(kLbl[li]);
        int cur_s = s;
        for (int i = static_cast<int>(children[v].size()); i >= 1; --i) {
            int c = children[v][static_cast<std::size_t>(i - 1)];
            const Table& before = stages[v][static_cast<std::size_t>(i - 1)];
            const Table& child = stages[c].back();
            const int target = stages[v][static_cast<std::size_t>(i)][li][cur_s];
            bool found = false;
            for (int sp = 0; sp < 4 && !found; ++sp) {
                if (before[li][sp] >= kInf) continue;
                for (int cli = 0; cli < 4 && !found; ++cli) {
                    if (std::min(3, sp + help_of(kLbl[cli])) != cur_s) continue;
                    const int need_c = need_of(kLbl[cli]);
                    for (int sc = 0; sc < 4 && !found; ++sc) {
                        if (child[cli][sc] >= kInf) continue;
                        if (sc + parent_help < need_c) continue;
                        if (before[li][sp] + child[cli][sc] != target) continue;
                        todo.push_back({c, cli, sc});
                        cur_s = sp;
                        found = true;
                    }
                }
            }
            if (!found) throw std::logic_error("tree solver: reconstruction failed");
        }
    }

    res.weight = best;
    res.per_component.push_back({[&] {
                                     std::vector<int> all(static_cast<std::size_t>(p));
                                     for (int i = 0; i < p; ++i) all[i] = i;
                                     return all;
                                 }(),
                                 best, Method::treedp, 0});
    if (!verify_3rdf(g, res.witness).valid() || weight(res.witness) != best)
        throw std::logic_error("tree solver: witness failed verification");
    return res;
}

}  // namespace trdom
