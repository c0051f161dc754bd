#include "trdom/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "trdom/errors.hpp"

namespace trdom {

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

void validate(const X3CInstance& inst) {
    if (inst.q < 1) throw std::invalid_argument("instance needs q >= 1");
    for (const auto& tr : inst.triples) {
        if (tr[0] < 0 || tr[2] >= 3 * inst.q)
            throw std::invalid_argument("triple element out of range");
        if (tr[0] >= tr[1] || tr[1] >= tr[2])
            throw std::invalid_argument("triple must hold three distinct sorted elements");
    }
}

}  // namespace

X3CInstance x3c_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long q = 0, t = 0;
    X3CInstance inst;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks.size() != 2 || !parse_int(toks[0], q) || !parse_int(toks[1], t) || q < 1 ||
                t < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'q t' with q >= 1, t >= 0");
            have_header = true;
            inst.q = static_cast<int>(q);
            continue;
        }
        long long a, b, c;
        if (toks.size() != 3 || !parse_int(toks[0], a) || !parse_int(toks[1], b) ||
            !parse_int(toks[2], c))
            throw ParseError("line " + std::to_string(lineno) + ": expected three integers");
        std::array<int, 3> tr{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
        std::sort(tr.begin(), tr.end());
        if (a < 0 || b < 0 || c < 0 || tr[2] >= 3 * inst.q)
            throw ParseError("line " + std::to_string(lineno) + ": element outside 0..3q-1");
        if (tr[0] == tr[1] || tr[1] == tr[2])
            throw ParseError("line " + std::to_string(lineno) + ": repeated element in triple");
        inst.triples.push_back(tr);
    }
    if (!have_header) throw ParseError("empty instance text: missing 'q t' header");
    if (static_cast<long long>(inst.triples.size()) != t)
        throw ParseError("header declares " + std::to_string(t) + " triples, found " +
                         std::to_string(inst.triples.size()));
    return inst;
}

std::string x3c_to_text(const X3CInstance& inst) {
    validate(inst);
    std::ostringstream out;
    out << inst.q << " " << inst.triples.size() << "\n";
    for (const auto& tr : inst.triples) out << tr[0] << " " << tr[1] << " " << tr[2] << "\n";
    return out.str();
}

std::optional<std::vector<int>> x3c_bruteforce(const X3CInstance& inst) {
    validate(inst);
    const int t = static_cast<int>(inst.triples.size());
    if (t > kX3cMaxTriples)
        throw GuardError("exact-cover search limited to " + std::to_string(kX3cMaxTriples) +
                         " triples, got " + std::to_string(t));
    const int n = 3 * inst.q;
    std::vector<std::vector<int>> holding(static_cast<std::size_t>(n));
    for (int j = 0; j < t; ++j)
        for (int e : inst.triples[j]) holding[e].push_back(j);

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    std::vector<int> chosen;
    // Branch on the lowest uncovered element; each candidate triple must be
    // disjoint from the part already covered.
    auto search = [&](auto&& self, int from) -> bool {
        int e = from;
        while (e < n && covered[e]) ++e;
        if (e == n) return true;
        for (int j : holding[e]) {
            const auto& tr = inst.triples[j];
            if (covered[tr[0]] || covered[tr[1]] || covered[tr[2]]) continue;
            covered[tr[0]] = covered[tr[1]] = covered[tr[2]] = 1;
            chosen.push_back(j);
            if (self(self, e + 1)) return true;
            chosen.pop_back();
            covered[tr[0]] = covered[tr[1]] = covered[tr[2]] = 0;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

GadgetMap build_gadget(const X3CInstance& inst, GadgetVariant variant) {
    validate(inst);
    const int q = inst.q;
    const int t = static_cast<int>(inst.triples.size());
    GadgetMap m;
    m.variant = variant;
    m.instance = inst;
    m.threshold = 4 * t + 11 * q;
    m.graph = Graph(6 * q + 5 * t);

    for (int i = 0; i < 3 * q; ++i) {
        m.element_vertex.push_back(i);
        m.element_anchor.push_back(3 * q + i);
        m.graph.add_edge(i, 3 * q + i);
    }
    for (int j = 0; j < t; ++j) {
        const int w = 6 * q + 5 * j;
        const int c = w + 1;
        m.star_center.push_back(w);
        m.star_connector.push_back(c);
        m.star_leaves.push_back({w + 2, w + 3, w + 4});
        m.graph.add_edge(w, c);
        for (int l = 2; l <= 4; ++l) m.graph.add_edge(w, w + l);
        for (int e : inst.triples[j]) m.graph.add_edge(c, e);
    }
    if (variant == GadgetVariant::chordal)
        for (int j = 0; j < t; ++j)
            for (int j2 = j + 1; j2 < t; ++j2)
                m.graph.add_edge(m.star_connector[j], m.star_connector[j2]);
    return m;
}

Labeling cover_to_labeling(const GadgetMap& m, const std::vector<int>& cover) {
    const int q = m.instance.q;
    const int t = static_cast<int>(m.instance.triples.size());
    if (static_cast<int>(cover.size()) != q)
        throw std::invalid_argument("cover must hold exactly q triples");
    std::vector<int> hits(static_cast<std::size_t>(3 * q), 0);
    for (int j : cover) {
        if (j < 0 || j >= t) throw std::invalid_argument("cover index out of range");
        for (int e : m.instance.triples[j]) ++hits[e];
    }
    for (int e = 0; e < 3 * q; ++e)
        if (hits[e] != 1) throw std::invalid_argument("cover is not exact");

    Labeling l{3, std::vector<int>(static_cast<std::size_t>(m.graph.order()), 0)};
    for (int w : m.star_center) l.values[w] = 4;
    for (int y : m.element_anchor) l.values[y] = 3;
    for (int j : cover) l.values[m.star_connector[j]] = 2;
    if (!verify_3rdf(m.graph, l).valid() || weight(l) != m.threshold)
        throw std::logic_error("cover labeling failed verification");
    return l;
}

std::vector<int> labeling_to_cover(const GadgetMap& m, const Labeling& l) {
    if (!verify_3rdf(m.graph, l).valid())
        throw std::invalid_argument("labeling is not a valid assignment on the gadget");
    if (weight(l) > m.threshold)
        throw std::invalid_argument("labeling weight exceeds the gadget threshold");

    const int q = m.instance.q;
    const int t = static_cast<int>(m.instance.triples.size());

    // Canonical shape first: exactly the labeling cover_to_labeling emits.
    auto canonical = [&]() -> std::optional<std::vector<int>> {
        std::vector<int> picks;
        for (int j = 0; j < t; ++j) {
            if (l.values[m.star_center[j]] != 4) return std::nullopt;
            for (int leaf : m.star_leaves[j])
                if (l.values[leaf] != 0) return std::nullopt;
            int cv = l.values[m.star_connector[j]];
            if (cv == 2)
                picks.push_back(j);
            else if (cv != 0)
                return std::nullopt;
        }
        for (int i = 0; i < 3 * q; ++i)
            if (l.values[m.element_vertex[i]] != 0 || l.values[m.element_anchor[i]] != 3)
                return std::nullopt;
        if (static_cast<int>(picks.size()) != q) return std::nullopt;
        std::vector<int> hits(static_cast<std::size_t>(3 * q), 0);
        for (int j : picks)
            for (int e : m.instance.triples[j]) ++hits[e];
        for (int h : hits)
            if (h != 1) return std::nullopt;
        return picks;
    }();
    if (canonical) return *canonical;

    // Any other witness at or under the threshold still certifies that a
    // cover exists, so recover one directly from the instance.
    auto solved = x3c_bruteforce(m.instance);
    if (!solved)
        throw std::logic_error("labeling meets the threshold on an instance with no cover");
    return *solved;
}

std::string gadget_roles_json(const GadgetMap& m) {
    using json = nlohmann::ordered_json;
    json out;
    out["variant"] = m.variant == GadgetVariant::bipartite ? "bipartite" : "chordal";
    out["q"] = m.instance.q;
    out["t"] = static_cast<int>(m.instance.triples.size());
    out["order"] = m.graph.order();
    out["threshold"] = m.threshold;
    out["elements"] = m.element_vertex;
    out["anchors"] = m.element_anchor;
    out["centers"] = m.star_center;
    out["connectors"] = m.star_connector;
    out["leaves"] = json::array();
    for (const auto& lv : m.star_leaves) out["leaves"].push_back(lv);
    out["triples"] = json::array();
    for (const auto& tr : m.instance.triples) out["triples"].push_back(tr);
    return out.dump(2);
}

}  // namespace trdom
