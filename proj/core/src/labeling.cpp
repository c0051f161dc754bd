#include "trdom/labeling.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "trdom/errors.hpp"

namespace trdom {

int weight(const Labeling& l) {
    return std::accumulate(l.values.begin(), l.values.end(), 0);
}

VerifyResult verify_krdf(const Graph& g, const Labeling& l, int k) {
    if (k < 1) throw std::invalid_argument("verify: k >= 1 required");
    if (l.k != k)
        throw std::invalid_argument("verify: labeling is for k=" + std::to_string(l.k) +
                                    ", queried with k=" + std::to_string(k));
    if (static_cast<int>(l.values.size()) != g.order())
        throw std::invalid_argument("verify: labeling size does not match graph order");
    for (int h : l.values)
        if (h < 0 || h > k + 1)
            throw std::invalid_argument("verify: label outside [0," + std::to_string(k + 1) + "]");

    VerifyResult r;
    for (int v = 0; v < g.order(); ++v) {
        if (l.values[v] >= k) continue;
        int active = 0;
        int total = l.values[v];
        for (int w : g.neighbors(v)) {
            if (l.values[w] >= 1) {
                ++active;
                total += l.values[w];
            }
        }
        if (total < active + k) r.violations.push_back({v, active + k, total});
    }
    return r;
}

bool satisfies_3rdf_cases(const Graph& g, const Labeling& l, int v) {
    const int h = l.values[v];
    if (h >= 3) return true;
    int c2 = 0, c3 = 0, c4 = 0;
    for (int w : g.neighbors(v)) {
        switch (l.values[w]) {
            case 2: ++c2; break;
            case 3: ++c3; break;
            case 4: ++c4; break;
            default: break;  // labels 0 and 1 contribute no surplus
        }
    }
    if (h == 0) return c4 >= 1 || c3 >= 2 || (c3 >= 1 && c2 >= 1) || c2 >= 3;
    if (h == 1) return c4 >= 1 || c3 >= 1 || c2 >= 2;
    return c2 + c3 + c4 >= 1;  // h == 2
}

VerifyResult verify_3rdf(const Graph& g, const Labeling& l) {
    VerifyResult r = verify_krdf(g, l, 3);
    // Redundant route: the enumerated cases must agree with the inequality
    // vertex by vertex.
    std::size_t bad = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!satisfies_3rdf_cases(g, l, v)) {
            if (bad >= r.violations.size() || r.violations[bad].vertex != v)
                throw std::logic_error("verify_3rdf: case table disagrees with the inequality");
            ++bad;
        }
    if (bad != r.violations.size())
        throw std::logic_error("verify_3rdf: case table disagrees with the inequality");
    return r;
}

Labeling eliminate_ones(const Graph& g, const Labeling& l) {
    if (l.k != 3) throw std::invalid_argument("eliminate_ones: defined for k=3 labelings");
    if (!verify_3rdf(g, l).valid())
        throw std::invalid_argument("eliminate_ones: input labeling is not valid");

    Labeling out = l;
    auto& h = out.values;
    // A 1-vertex contributes no surplus to its neighbors, so each rewrite
    // below keeps every other vertex's surplus intact while fixing v:
    //   4-neighbor:       v <- 0                (weight -1)
    //   3-neighbor w:     v <- 0, w <- 4        (weight unchanged)
    //   two 2-neighbors:  v <- 0, one w <- 3    (weight unchanged)
    // Rules tried in that order; scan ascending until no 1 remains.
    bool again = true;
    int rounds = 0;
    while (again) {
        if (++rounds > g.order() + 1)
            throw std::logic_error("eliminate_ones: rewrite did not reach a fixed point");
        again = false;
        for (int v = 0; v < g.order(); ++v) {
            if (h[v] != 1) continue;
            int with3 = -1, first2 = -1;
            int twos = 0;
            bool done = false;
            for (int w : g.neighbors(v)) {
                if (h[w] == 4) {
                    h[v] = 0;
                    done = true;
                    break;
                }
                if (h[w] == 3 && with3 < 0) with3 = w;
                if (h[w] == 2 && first2 < 0) first2 = w;
                if (h[w] == 2) ++twos;
            }
            if (!done) {
                if (with3 >= 0) {
                    h[v] = 0;
                    h[with3] = 4;
                } else if (twos >= 2) {
                    h[v] = 0;
                    h[first2] = 3;
                } else {
                    // Valid 1-vertices always match a rule: surplus >= 2
                    // forces a 4, a 3, or two 2s among the neighbors.
                    throw std::logic_error("eliminate_ones: no rewrite rule applies to a valid 1-vertex");
                }
            }
            again = true;
        }
        bool any = false;
        for (int x : h) any = any || x == 1;
        again = again && any;
    }
    if (!verify_3rdf(g, out).valid() || weight(out) > weight(l))
        throw std::logic_error("eliminate_ones: rewrite broke validity or raised the weight");
    return out;
}

Labeling labeling_from_text(const std::string& text, int k) {
    Labeling l;
    l.k = k;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int v;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            throw ParseError("labeling: non-integer token '" + tok + "'");
        if (v < 0 || v > k + 1)
            throw ParseError("labeling: value " + tok + " outside [0," + std::to_string(k + 1) +
                             "]");
        l.values.push_back(v);
    }
    if (l.values.empty()) throw ParseError("labeling: no values");
    return l;
}

std::string labeling_to_text(const Labeling& l) {
    std::ostringstream out;
    for (std::size_t i = 0; i < l.values.size(); ++i) {
        if (i) out << ' ';
        out << l.values[i];
    }
    out << '\n';
    return out.str();
}

}  // namespace trdom
