#include "trdom/families.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "trdom/rng.hpp"

namespace trdom {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

FamilyValue checked(const Graph& g, int weight_claim, std::vector<int> values,
                    const char* what) {
    FamilyValue fv;
    fv.weight = weight_claim;
    fv.certificate = Labeling{3, std::move(values)};
    if (!verify_3rdf(g, fv.certificate).valid() || weight(fv.certificate) != weight_claim)
        throw std::logic_error(std::string(what) + ": certificate check failed");
    return fv;
}

// 0,4,0 per full triple; a leftover vertex takes 3, a leftover pair 2,2.
std::vector<int> path_pattern(int p) {
    std::vector<int> v(static_cast<std::size_t>(p), 0);
    for (int i = 0; i + 2 < p; i += 3) v[i + 1] = 4;
    switch (p % 3) {
        case 1: v[p - 1] = 3; break;
        case 2: v[p - 2] = v[p - 1] = 2; break;
        default: break;
    }
    return v;
}

}  // namespace

int m_value(int p) {
    require(p >= 1, "m_value needs p >= 1");
    static constexpr int tail[3] = {0, 3, 4};
    return 4 * (p / 3) + tail[p % 3];
}

FamilyValue gamma_path(int p) {
    require(p >= 1, "path needs p >= 1");
    return checked(gen::path(p), m_value(p), path_pattern(p), "path");
}

FamilyValue gamma_cycle(int p) {
    require(p >= 3, "cycle needs p >= 3");
    const int base = (4 * p + 2) / 3;  // ceil(4p/3)
    std::vector<int> values;
    int value;
    switch (p) {
        // Four orders beat the generic pattern by one; their labelings do
        // not fit it and are spelled out.
        case 4: values = {3, 0, 3, 0}; value = base; break;
        case 5: values = {3, 0, 2, 2, 0}; value = base; break;
        case 7: values = {3, 0, 2, 2, 0, 3, 0}; value = base; break;
        case 10: values = {0, 3, 0, 2, 2, 0, 3, 0, 2, 2}; value = base; break;
        default:
            values = path_pattern(p);
            value = p % 3 == 0 ? base : base + 1;
            break;
    }
    return checked(gen::cycle(p), value, std::move(values), "cycle");
}

FamilyValue gamma_star(int p) {
    require(p >= 2, "star needs p >= 2");
    std::vector<int> values(static_cast<std::size_t>(p), 0);
    values[0] = 4;
    return checked(gen::star(p), 4, std::move(values), "star");
}

FamilyValue gamma_double_star(int r, int s) {
    require(r >= 1 && s >= 1, "double star needs r, s >= 1");
    const int p = r + s + 2;
    std::vector<int> values(static_cast<std::size_t>(p), 0);
    int value;
    if (r >= 2 && s >= 2) {
        values[0] = values[1] = 4;
        value = 8;
    } else {
        // A single-leaf stem is cheaper to starve: the heavy stem covers it,
        // and only its lone leaf still needs a self-sufficient 3.
        const int big = r >= s ? 0 : 1;
        values[big] = 4;
        values[big == 0 ? r + 2 : 2] = 3;  // the other stem's only leaf
        value = 7;
    }
    return checked(gen::double_star(r, s), value, std::move(values), "double star");
}

namespace {

Graph blocks_with_hub(int blocks, const Graph& hub) {
    Graph g(4 * blocks);
    for (int i = 0; i < blocks; ++i) {
        g.add_edge(4 * i, 4 * i + 1);
        g.add_edge(4 * i + 1, 4 * i + 2);
        g.add_edge(4 * i + 2, 4 * i + 3);
    }
    for (auto [u, v] : hub.edges()) g.add_edge(4 * u + 1, 4 * v + 1);
    return g;
}

}  // namespace

Graph family_f(int blocks) {
    require(blocks >= 1, "family f needs at least one block");
    Graph hub(blocks);
    for (int i = 0; i + 1 < blocks; ++i) hub.add_edge(i, i + 1);
    return blocks_with_hub(blocks, hub);
}

Graph family_f(int blocks, std::uint64_t seed) {
    require(blocks >= 1, "family f needs at least one block");
    return blocks_with_hub(blocks, gen::random_tree(blocks, seed));
}

Graph family_h(int blocks, const Graph& hub) {
    require(blocks >= 1, "family h needs at least one block");
    require(hub.order() == blocks, "family h hub must have one vertex per block");
    require(struct_report(hub).is_connected, "family h hub must be connected");
    return blocks_with_hub(blocks, hub);
}

Graph family_h(int blocks, std::uint64_t seed) {
    require(blocks >= 1, "family h needs at least one block");
    Graph hub = gen::random_tree(blocks, seed);
    if (blocks > 2) {
        std::uint64_t state = seed;
        rng::splitmix64(state);  // decouple from the tree draw
        std::mt19937_64 gen(rng::splitmix64(state));
        const double extra = 2.0 / blocks;
        for (int u = 0; u < blocks; ++u)
            for (int v = u + 1; v < blocks; ++v)
                if (rng::unit(gen) < extra) hub.add_edge(u, v);
    }
    return family_h(blocks, hub);
}

FamilyValue family_value(int blocks) {
    require(blocks >= 1, "family value needs at least one block");
    std::vector<int> values(static_cast<std::size_t>(4 * blocks), 0);
    for (int i = 0; i < blocks; ++i) {
        values[4 * i + 1] = 4;
        values[4 * i + 3] = 3;
    }
    return checked(family_f(blocks), 7 * blocks, std::move(values), "family");
}

}  // namespace trdom
