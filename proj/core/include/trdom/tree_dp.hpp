#pragma once

#include "trdom/exact.hpp"
#include "trdom/graph.hpp"

namespace trdom {

// Exact triple Roman domination number of a tree in O(p * 16^2) time.
//
// Rooted at vertex 0, each vertex carries states (label, s) with label in
// {0,2,3,4} and s in {0..3}: s is the surplus already supplied by children,
// capped at 3 since need(label) = max(0, 3-label) never exceeds 3. A child
// state (c, s_c) is compatible under a parent labeled L iff
// s_c + max(0, L-1) >= need(c); merging adds the child's cost and lifts the
// parent surplus to min(3, s + max(0, c-1)). The root must satisfy
// s >= need(label) on its own.
//
// Non-tree input raises std::invalid_argument.
SolveResult gamma_3r_tree(const Graph& g);

}  // namespace trdom
