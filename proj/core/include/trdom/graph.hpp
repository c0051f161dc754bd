#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trdom {

// Simple undirected graph on vertices 0..p-1. Adjacency lists stay sorted
// and duplicate-free; self-loops are rejected at insertion.
class Graph {
public:
    explicit Graph(int p);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    // Idempotent: inserting an existing edge is a no-op.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;

    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

private:
    int checked(int v) const;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

struct StructReport {
    int delta = 0;                      // min degree
    int Delta = 0;                      // max degree
    std::optional<int> diameter;        // empty: disconnected
    std::optional<int> girth;           // empty: acyclic
    bool is_connected = false;
    bool is_tree = false;
    std::optional<int> regular_degree;  // empty: not regular
};

StructReport struct_report(const Graph& g);

// Vertex sets of the connected components, each sorted ascending, ordered by
// smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Induced subgraph on `vertices` (must be sorted ascending, duplicate-free);
// result vertex i corresponds to vertices[i] in g.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Edge-list text: '#' comment lines, optional leading "p <n>" header, then
// one "u v" pair per line. The emitter always writes the header and sorted
// edges, so emit/parse round-trips exactly.
Graph from_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

namespace gen {

Graph path(int p);                       // 0-1-...-(p-1)
Graph cycle(int p);                      // path plus edge (p-1,0); p >= 3
Graph star(int p);                       // K_{1,p-1}: center 0, leaves 1..p-1
Graph double_star(int r, int s);         // stems 0,1; leaves of 0, then of 1
Graph complete_bipartite(int m, int n);  // sides 0..m-1 and m..m+n-1
Graph spider(const std::vector<int>& legs);  // center 0, legs consecutive
Graph gnp(int p, double prob, std::uint64_t seed);
Graph random_tree(int p, std::uint64_t seed);

}  // namespace gen

}  // namespace trdom
