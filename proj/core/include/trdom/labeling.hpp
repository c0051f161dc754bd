#pragma once

#include <string>
#include <vector>

#include "trdom/graph.hpp"

namespace trdom {

// Vertex labeling h: V -> {0,...,k+1}. A labeling is a valid [k]-Roman
// dominating function when every vertex v with h(v) < k satisfies
// h(AN[v]) >= |AN(v)| + k, where AN(v) is the set of neighbors with a
// positive label. Equivalently, the active-neighbor surplus
// sum_{w in AN(v)} (h(w)-1) must reach k - h(v).
struct Labeling {
    int k = 3;
    std::vector<int> values;
};

int weight(const Labeling& l);

struct Violation {
    int vertex;
    int required;  // |AN(v)| + k
    int achieved;  // h(AN[v])
};

struct VerifyResult {
    std::vector<Violation> violations;  // every failing vertex, ascending
    bool valid() const { return violations.empty(); }
};

// Rejects (std::invalid_argument) a size or k mismatch, labels outside
// [0,k+1], or k < 1 before checking anything.
VerifyResult verify_krdf(const Graph& g, const Labeling& l, int k);

// k=3 specialization: verify_krdf plus a redundant case-table cross-check,
// with any disagreement raised as std::logic_error.
VerifyResult verify_3rdf(const Graph& g, const Labeling& l);

// Case-table form of the k=3 condition for one vertex. Exposed so tests can
// compare it against the inequality independently of verify_3rdf.
bool satisfies_3rdf_cases(const Graph& g, const Labeling& l, int v);

// Rewrites a valid labeling with k=3 into one using no label 1, never
// increasing the weight. Every intermediate labeling stays valid.
Labeling eliminate_ones(const Graph& g, const Labeling& l);

// One line of whitespace-separated integers in [0,k+1], vertex order
// 0..p-1. Anything else raises ParseError.
Labeling labeling_from_text(const std::string& text, int k = 3);
std::string labeling_to_text(const Labeling& l);

}  // namespace trdom
