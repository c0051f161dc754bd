#pragma once

#include <cstdint>
#include <vector>

#include "trdom/graph.hpp"
#include "trdom/labeling.hpp"

namespace trdom {

enum class Method { bruteforce, bnb, treedp, closedform };
const char* method_name(Method m);

struct ComponentSolve {
    std::vector<int> vertices;  // original vertex ids, ascending
    int weight = 0;
    Method method = Method::bruteforce;
    std::uint64_t nodes = 0;
};

// Solvers decompose into connected components and sum the optima; the
// witness always verifies valid and weight equals its sum.
struct SolveResult {
    int weight = 0;
    Labeling witness;
    Method method = Method::bruteforce;
    std::uint64_t nodes_explored = 0;
    std::vector<ComponentSolve> per_component;
};

inline constexpr int kBruteforceMaxComponent = 14;
inline constexpr int kOracleMaxComponent = 14;
inline constexpr int kChainMaxComponent = 12;
inline constexpr int kBnbMaxComponent = 64;

// Exhaustive optimum of the [k]-Roman domination number. Labels vertices in
// BFS order, finalizing a vertex once its closed neighborhood is labeled and
// pruning unsatisfiable prefixes. restrict_no_ones limits the alphabet to
// {0,2,3,4}; the restriction is only justified for k=3.
SolveResult gamma_kr_bruteforce(const Graph& g, int k, bool restrict_no_ones = false);

// Branch and bound for k=3 over the 1-free alphabet. Branches on vertices in
// descending degree order (ties by index), values tried as {0,4,3,2}; the
// incumbent starts from the constructive upper bounds. Deterministic.
SolveResult gamma_3r_bnb(const Graph& g);

// Small-graph oracles, each additive over components (<= 14 vertices per
// component; larger inputs raise GuardError).
int domination_number(const Graph& g);
int roman_number(const Graph& g);
int double_roman_number(const Graph& g);

struct ChainReport {
    int gamma = 0;
    int roman = 0;
    int double_roman = 0;
    int triple_roman = 0;
    bool gamma_le_roman = false;
    bool roman_le_two_gamma = false;
    bool two_gamma_le_double = false;
    bool double_lt_triple = false;
    bool two_triple_le_three_double = false;  // gamma3 <= (3/2) gamma_dR, exact form
    bool triple_le_four_gamma = false;
    bool chain_holds() const {
        return gamma_le_roman && roman_le_two_gamma && two_gamma_le_double &&
               double_lt_triple && two_triple_le_three_double && triple_le_four_gamma;
    }
};

// Components capped at 12 vertices (GuardError beyond).
ChainReport inequality_chain_report(const Graph& g);

}  // namespace trdom
