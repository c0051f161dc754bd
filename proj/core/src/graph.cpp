#include "trdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "trdom/errors.hpp"
#include "trdom/rng.hpp"

namespace trdom {

Graph::Graph(int p) {
    if (p < 1) throw std::invalid_argument("graph order must be at least 1");
    adj_.resize(static_cast<std::size_t>(p));
}

int Graph::checked(int v) const {
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex index out of range");
    return v;
}

void Graph::add_edge(int u, int v) {
    checked(u);
    checked(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
    checked(v);
    const auto& au = adj_[checked(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

std::span<const int> Graph::neighbors(int v) const {
    return adj_[checked(v)];
}

int Graph::degree(int v) const {
    return static_cast<int>(adj_[checked(v)].size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int p = g.order();
    std::vector<int> comp(p, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < p; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> members;
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            members.push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph sub(static_cast<int>(vertices.size()));
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) local[vertices[i]] = i;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (local[w] > i) sub.add_edge(i, local[w]);
    return sub;
}

namespace {

// Single-source BFS; fills dist (-1 for unreached) and parent.
void bfs(const Graph& g, int s, std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(static_cast<std::size_t>(g.order()), -1);
    parent.assign(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

StructReport struct_report(const Graph& g) {
    const int p = g.order();
    StructReport r;
    r.delta = g.degree(0);
    r.Delta = g.degree(0);
    for (int v = 1; v < p; ++v) {
        r.delta = std::min(r.delta, g.degree(v));
        r.Delta = std::max(r.Delta, g.degree(v));
    }
    if (r.delta == r.Delta) r.regular_degree = r.delta;

    r.is_connected = components(g).size() == 1;
    r.is_tree = r.is_connected && g.size() == p - 1;

    // Eccentricities and girth from per-source BFS. For the girth, any
    // non-tree edge (u,w) seen from source s closes a walk of length
    // dist[u]+dist[w]+1 that contains a cycle no longer than itself, and a
    // shortest cycle is closed exactly from any of its own vertices, so the
    // minimum over all sources is the girth.
    std::vector<int> dist, parent;
    int ecc_max = 0;
    int girth = -1;
    for (int s = 0; s < p; ++s) {
        bfs(g, s, dist, parent);
        for (int u = 0; u < p; ++u) {
            if (dist[u] < 0) continue;
            ecc_max = std::max(ecc_max, dist[u]);
            for (int w : g.neighbors(u)) {
                if (w == parent[u] || u == parent[w]) continue;
                if (dist[w] < 0) continue;
                int cycle = dist[u] + dist[w] + 1;
                if (girth < 0 || cycle < girth) girth = cycle;
            }
        }
    }
    if (r.is_connected) r.diameter = ecc_max;
    if (girth > 0) r.girth = girth;
    return r;
}

// ---------------------------------------------------------------- text I/O

namespace {

bool parse_int(std::string_view tok, long long& out) {
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto res = std::from_chars(b, e, out);
    return res.ec == std::errc{} && res.ptr == e;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long declared_p = -1;
    bool saw_tokens = false;
    long long max_index = -1;
    std::vector<std::pair<int, int>> edge_acc;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!saw_tokens && toks[0] == "p") {
            saw_tokens = true;
            long long n;
            if (toks.size() != 2 || !parse_int(toks[1], n) || n < 1)
                throw ParseError("line " + std::to_string(lineno) + ": malformed header, expected 'p <n>' with n >= 1");
            declared_p = n;
            continue;
        }
        saw_tokens = true;
        long long u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex index");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop " + std::to_string(u) + " " + std::to_string(v));
        max_index = std::max({max_index, u, v});
        edge_acc.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    if (declared_p < 0 && max_index < 0)
        throw ParseError("empty edge-list text: no header and no edges");
    long long p = declared_p >= 0 ? declared_p : max_index + 1;
    if (max_index >= p)
        throw ParseError("vertex index " + std::to_string(max_index) + " exceeds declared order " + std::to_string(p));

    Graph g(static_cast<int>(p));
    for (auto [u, v] : edge_acc) g.add_edge(u, v);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

// -------------------------------------------------------------- generators

namespace gen {

Graph path(int p) {
    if (p < 1) throw std::invalid_argument("path: p >= 1 required");
    Graph g(p);
    for (int i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int p) {
    if (p < 3) throw std::invalid_argument("cycle: p >= 3 required");
    Graph g = path(p);
    g.add_edge(p - 1, 0);
    return g;
}

Graph star(int p) {
    if (p < 2) throw std::invalid_argument("star: p >= 2 required");
    Graph g(p);
    for (int i = 1; i < p; ++i) g.add_edge(0, i);
    return g;
}

Graph double_star(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("double_star: r, s >= 1 required");
    Graph g(r + s + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < r; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < s; ++i) g.add_edge(1, 2 + r + i);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: m, n >= 1 required");
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph spider(const std::vector<int>& legs) {
    int p = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("spider: leg lengths must be >= 1");
        p += len;
    }
    Graph g(p);
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph gnp(int p, double prob, std::uint64_t seed) {
    if (p < 1) throw std::invalid_argument("gnp: p >= 1 required");
    if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("gnp: prob must lie in [0,1]");
    Graph g(p);
    std::mt19937_64 r(seed);
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v)
            if (rng::unit(r) < prob) g.add_edge(u, v);
    return g;
}

Graph random_tree(int p, std::uint64_t seed) {
    if (p < 1) throw std::invalid_argument("random_tree: p >= 1 required");
    Graph g(p);
    if (p == 1) return g;
    if (p == 2) {
        g.add_edge(0, 1);
        return g;
    }
    // Uniform labeled tree via a random Pruefer sequence.
    std::mt19937_64 r(seed);
    std::vector<int> seq(static_cast<std::size_t>(p - 2));
    std::vector<int> deg(static_cast<std::size_t>(p), 1);
    for (auto& x : seq) {
        x = rng::uniform_int(r, 0, p - 1);
        ++deg[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < p; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--deg[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    g.add_edge(a, leaves.top());
    return g;
}

}  // namespace gen

}  // namespace trdom
