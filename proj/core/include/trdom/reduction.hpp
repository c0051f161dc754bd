#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trdom/graph.hpp"
#include "trdom/labeling.hpp"

namespace trdom {

// Exact cover by 3-sets: 3q elements 0..3q-1, t candidate triples, and the
// question whether q pairwise disjoint triples cover everything. Triples are
// stored sorted; duplicate triples are allowed and keep distinct indices.
struct X3CInstance {
    int q = 0;
    std::vector<std::array<int, 3>> triples;
};

// Text form: '#' comments, a "q t" header line, then t lines of three
// element ids. Parse errors carry 1-based line numbers.
X3CInstance x3c_from_text(const std::string& text);
std::string x3c_to_text(const X3CInstance& inst);

inline constexpr int kX3cMaxTriples = 20;

// Exhaustive exact-cover search, branching on the lowest uncovered element.
// Returns the first cover in ascending index order, or nothing. Guarded at
// kX3cMaxTriples triples.
std::optional<std::vector<int>> x3c_bruteforce(const X3CInstance& inst);

// The decision gadget comes in two shapes that differ only in whether the
// per-triple connectors form an independent set or a clique.
enum class GadgetVariant { bipartite, chordal };

// Graph encoding of an instance. Element i gets a pendant pair x_i - y_i;
// triple j gets a 5-vertex star: center w_j, connector c_j, three leaves.
// c_j is wired to the x_i of its triple's elements. Order is 6q + 5t and
// the instance has an exact cover exactly when the graph admits weight
// threshold = 4t + 11q (never less).
struct GadgetMap {
    GadgetVariant variant = GadgetVariant::bipartite;
    int threshold = 0;
    std::vector<int> element_vertex;              // x_i
    std::vector<int> element_anchor;              // y_i
    std::vector<int> star_center;                 // w_j
    std::vector<int> star_connector;              // c_j
    std::vector<std::array<int, 3>> star_leaves;  // per star
    X3CInstance instance;
    Graph graph{1};
};

GadgetMap build_gadget(const X3CInstance& inst, GadgetVariant variant);

// Exact cover (triple indices) to a labeling of weight exactly threshold:
// centers 4, anchors 3, chosen connectors 2, everything else 0. Rejects
// anything that is not an exact cover.
Labeling cover_to_labeling(const GadgetMap& m, const std::vector<int>& cover);

// Valid labeling of weight <= threshold back to an exact cover. A labeling
// in the canonical shape above is read off directly (so the two directions
// round-trip); any other witness falls back to re-solving the instance,
// which the weight guarantee proves solvable.
std::vector<int> labeling_to_cover(const GadgetMap& m, const Labeling& l);

std::string gadget_roles_json(const GadgetMap& m);

}  // namespace trdom
