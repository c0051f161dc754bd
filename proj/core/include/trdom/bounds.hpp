#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trdom/graph.hpp"
#include "trdom/labeling.hpp"

namespace trdom {

// Exact rational, so fractional bounds (7p/4, thirds) never round until
// display. den > 0, reduced.
struct Rat {
    long long num = 0;
    long long den = 1;

    static Rat of(long long n, long long d = 1);
    long long floored() const;
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
};

enum class BoundKind { upper, lower };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::upper;
    Rat value;
    bool applicable = false;
    std::string reason;  // inapplicability cause or applicability qualifier
    std::optional<Labeling> certificate;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    std::optional<Rat> best_upper;
    std::optional<Rat> best_lower;
};

// Constructive upper bounds (certificates attached, always verified valid):
BoundEntry ub_trivial(const Graph& g);            // 2p, all labels 2; needs no isolated vertex
BoundEntry ub_max_degree(const Graph& g);         // 3p-3Delta+1; disconnected: per-component sum, flagged
BoundEntry ub_max_degree_girth4(const Graph& g);  // 3p-3Delta; girth>=4, Delta<=p-2, delta>=2
BoundEntry ub_girth5(const Graph& g);             // 2p-2Delta+1; girth>=5, delta>=2
BoundEntry ub_regular_girth7(const Graph& g);     // 2p-2r^2+3r-2; r-regular, girth>=7

// Formula-only bounds (no certificate):
BoundEntry ub_probabilistic(const Graph& g);      // floor((4p/(d+1))(ln(3(d+1)/4)+1)), d = min degree
BoundEntry ub_tree(const Graph& g);               // 7p/4 on trees, p>=3
BoundEntry ub_diameter(const Graph& g);           // 3p - 5 diam/3 + 7/3
BoundEntry ub_girth_bound(const Graph& g);        // 3p + 2 - 5 girth/3

// Lower bounds:
//   degree/domination: ceil((2p + (Delta-1) gamma)/Delta); exact gamma when
//   the domination oracle guard allows, else gamma weakened to
//   ceil(p/(Delta+1)) and flagged in the reason.
BoundEntry lb_degree_domination(const Graph& g, std::optional<int> gamma = std::nullopt);
//   chain: double Roman number + 1 (oracle-guarded).
BoundEntry lb_chain(const Graph& g);

// All entries in fixed order plus the best applicable value on each side.
BoundReport best_bounds(const Graph& g);

// Random-sampling construction behind the probabilistic bound: each trial
// samples A with density ln(3(d+1)/4)/(d+1), labels A with 4, N(A) with 0,
// the rest with 3 (valid by construction), and the lightest trial wins.
// Requires min degree >= 1.
Labeling randomized_3rdf(const Graph& g, std::uint64_t seed, int trials = 64);

// Valid labelings harvested from the applicable constructive bounds, plus
// the all-3 fallback; used to seed branch-and-bound incumbents.
std::vector<Labeling> construction_candidates(const Graph& g);

std::string bound_report_json(const BoundReport& r);

}  // namespace trdom
