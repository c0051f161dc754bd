#pragma once

#include <cstdint>

#include "trdom/graph.hpp"
#include "trdom/labeling.hpp"

namespace trdom {

// Closed-form optimum together with a labeling that attains it. Every
// constructor verifies the certificate and its weight before returning.
struct FamilyValue {
    int weight = 0;
    Labeling certificate;
};

// Step pattern underlying the path and cycle formulas:
// 4*floor(p/3) plus 0, 3, 4 as p mod 3 is 0, 1, 2.
int m_value(int p);

FamilyValue gamma_path(int p);                  // p >= 1
FamilyValue gamma_cycle(int p);                 // p >= 3
FamilyValue gamma_star(int p);                  // K_{1,p-1}, p >= 2
FamilyValue gamma_double_star(int r, int s);    // r, s >= 1 leaves per stem

// Block gadget families: `blocks` disjoint 4-vertex paths, block i on
// vertices 4i..4i+3 with its connector at 4i+1. Hub edges join connectors
// only. family_f wires connectors into a spanning tree over the blocks (a
// path by default, seeded overload draws a random tree), so the result is a
// tree on 4*blocks vertices. family_h accepts any connected hub graph with
// one vertex per block; its seeded overload samples one. A single block is
// the 4-vertex path in both families.
Graph family_f(int blocks);
Graph family_f(int blocks, std::uint64_t seed);
Graph family_h(int blocks, const Graph& hub);
Graph family_h(int blocks, std::uint64_t seed);

// Optimum for either family: 7 per block, certificate 0,4,0,3 on each block
// (hub edges only ever join 4-labeled connectors, which breaks nothing).
FamilyValue family_value(int blocks);

}  // namespace trdom
