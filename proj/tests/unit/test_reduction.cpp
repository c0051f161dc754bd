#include <doctest.h>
#include <json.hpp>

#include <algorithm>

#include "testsupport.hpp"
#include "trdom/errors.hpp"
#include "trdom/exact.hpp"
#include "trdom/graph.hpp"
#include "trdom/labeling.hpp"
#include "trdom/reduction.hpp"

using namespace trdom;

namespace {

X3CInstance parse(const std::string& text) { return x3c_from_text(text); }

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("instance text round trip") {
    X3CInstance inst = parse("# comment\n2 3\n0 1 2\n5 4 3\n0 2 4\n");
    CHECK(inst.q == 2);
    REQUIRE(inst.triples.size() == 3);
    CHECK(inst.triples[1] == std::array<int, 3>{3, 4, 5});  // each triple sorted
    CHECK(x3c_to_text(inst) == "2 3\n0 1 2\n3 4 5\n0 2 4\n");
    CHECK(x3c_to_text(parse(x3c_to_text(inst))) == x3c_to_text(inst));
    // Duplicates are allowed and keep their own indices.
    X3CInstance dup = parse("1 2\n0 1 2\n0 1 2\n");
    CHECK(dup.triples.size() == 2);
}

TEST_CASE("instance parser rejects malformed text with line numbers") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_WITH_AS(parse("0 1\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse("x 1\n"), doctest::Contains("header"), ParseError);
    CHECK_THROWS_WITH_AS(parse("1 1\n0 1\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse("1 1\n0 1 5\n"), doctest::Contains("0..3q-1"), ParseError);
    CHECK_THROWS_WITH_AS(parse("1 1\n0 1 1\n"), doctest::Contains("repeated"), ParseError);
    CHECK_THROWS_WITH_AS(parse("1 2\n0 1 2\n"), doctest::Contains("declares"), ParseError);
    CHECK_THROWS_WITH_AS(parse("1 0\n0 1 2\n"), doctest::Contains("declares"), ParseError);
}

TEST_CASE("brute-force cover search") {
    // Cover must use triples 0 and 2; 1 overlaps both.
    auto cover = x3c_bruteforce(parse("2 3\n0 1 2\n0 1 3\n3 4 5\n"));
    REQUIRE(cover.has_value());
    CHECK(*cover == std::vector<int>{0, 2});

    CHECK(!x3c_bruteforce(parse("1 0\n")).has_value());
    CHECK(!x3c_bruteforce(parse("2 2\n0 1 2\n0 3 4\n")).has_value());
    CHECK(x3c_bruteforce(parse("1 1\n0 1 2\n")).value() == std::vector<int>{0});

    // A duplicate of the same partition picks the earliest indices.
    auto dup = x3c_bruteforce(parse("2 4\n0 1 2\n0 1 2\n3 4 5\n3 4 5\n"));
    REQUIRE(dup.has_value());
    CHECK(*dup == std::vector<int>{0, 2});
}

TEST_CASE("brute-force cover search is guarded") {
    X3CInstance big;
    big.q = 2;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) big.triples.push_back({a, b, c});
    big.triples.push_back({0, 1, 2});  // 21st triple
    CHECK_THROWS_AS(x3c_bruteforce(big), GuardError);
    big.triples.pop_back();
    CHECK(x3c_bruteforce(big).has_value());  // exactly at the limit is fine
}

TEST_CASE("gadget layout is pinned for the smallest instance") {
    GadgetMap m = build_gadget(parse("1 1\n0 1 2\n"), GadgetVariant::bipartite);
    CHECK(m.graph.order() == 11);  // 6q + 5t
    CHECK(m.threshold == 15);      // 4t + 11q
    CHECK(m.element_vertex == std::vector<int>{0, 1, 2});
    CHECK(m.element_anchor == std::vector<int>{3, 4, 5});
    CHECK(m.star_center == std::vector<int>{6});
    CHECK(m.star_connector == std::vector<int>{7});
    REQUIRE(m.star_leaves.size() == 1);
    CHECK(m.star_leaves[0] == std::array<int, 3>{8, 9, 10});
    std::vector<std::pair<int, int>> expect = {{0, 3}, {0, 7}, {1, 4}, {1, 7}, {2, 5},
                                               {2, 7}, {6, 7}, {6, 8}, {6, 9}, {6, 10}};
    CHECK(m.graph.edges() == expect);
    // One star means no connector pairs: the variants coincide.
    GadgetMap ch = build_gadget(parse("1 1\n0 1 2\n"), GadgetVariant::chordal);
    CHECK(ch.graph.edges() == m.graph.edges());
}

TEST_CASE("gadget variants differ exactly in the connector clique") {
    X3CInstance inst = parse("1 2\n0 1 2\n0 1 2\n");
    GadgetMap bip = build_gadget(inst, GadgetVariant::bipartite);
    GadgetMap ch = build_gadget(inst, GadgetVariant::chordal);
    CHECK(bip.graph.order() == 16);
    CHECK(ch.graph.size() == bip.graph.size() + 1);  // the single c-c edge
    CHECK(ch.graph.adjacent(bip.star_connector[0], bip.star_connector[1]));

    CHECK(test::is_bipartite(bip.graph));
    CHECK(!test::is_chordal(bip.graph));  // two connectors and two x's form C4
    CHECK(test::is_chordal(ch.graph));
    CHECK(!test::is_bipartite(ch.graph));

    // Shared elements keep the chordal variant chordal on bigger instances.
    GadgetMap ch2 = build_gadget(parse("2 3\n0 1 2\n0 1 3\n3 4 5\n"), GadgetVariant::chordal);
    CHECK(test::is_chordal(ch2.graph));
    CHECK(!test::is_bipartite(ch2.graph));
    GadgetMap bip2 = build_gadget(parse("2 3\n0 1 2\n0 1 3\n3 4 5\n"), GadgetVariant::bipartite);
    CHECK(test::is_bipartite(bip2.graph));
}

TEST_CASE("elements untouched by any triple leave pendant components") {
    GadgetMap m = build_gadget(parse("2 1\n0 1 2\n"), GadgetVariant::bipartite);
    CHECK(!struct_report(m.graph).is_connected);
    CHECK(components(m.graph).size() == 4);  // star block + three x-y edges
}

TEST_CASE("cover maps to the threshold labeling and back") {
    X3CInstance inst = parse("2 3\n0 1 2\n0 1 3\n3 4 5\n");
    for (GadgetVariant variant : {GadgetVariant::bipartite, GadgetVariant::chordal}) {
        GadgetMap m = build_gadget(inst, variant);
        Labeling l = cover_to_labeling(m, {0, 2});
        CHECK(verify_3rdf(m.graph, l).valid());
        CHECK(weight(l) == m.threshold);
        CHECK(l.values[m.star_center[0]] == 4);
        CHECK(l.values[m.star_connector[0]] == 2);
        CHECK(l.values[m.star_connector[1]] == 0);
        CHECK(l.values[m.element_anchor[0]] == 3);
        CHECK(labeling_to_cover(m, l) == std::vector<int>{0, 2});
    }
}

TEST_CASE("cover_to_labeling rejects anything but an exact cover") {
    GadgetMap m = build_gadget(parse("2 3\n0 1 2\n0 1 3\n3 4 5\n"), GadgetVariant::bipartite);
    CHECK_THROWS_AS(cover_to_labeling(m, {0}), std::invalid_argument);        // too few
    CHECK_THROWS_AS(cover_to_labeling(m, {0, 1}), std::invalid_argument);     // overlap
    CHECK_THROWS_AS(cover_to_labeling(m, {0, 3}), std::invalid_argument);     // out of range
    CHECK_THROWS_AS(cover_to_labeling(m, {0, 0}), std::invalid_argument);     // repeats
    // Index order inside the cover is irrelevant.
    CHECK(cover_to_labeling(m, {2, 0}).values == cover_to_labeling(m, {0, 2}).values);
}

TEST_CASE("labeling_to_cover rejects invalid or overweight witnesses") {
    GadgetMap m = build_gadget(parse("1 1\n0 1 2\n"), GadgetVariant::bipartite);
    Labeling good = cover_to_labeling(m, {0});

    Labeling broken = good;
    broken.values[m.star_center[0]] = 0;  // leaves lose their defender
    CHECK_THROWS_AS(labeling_to_cover(m, broken), std::invalid_argument);

    Labeling heavy = good;
    heavy.values[m.star_leaves[0][0]] = 2;  // valid but above the threshold
    REQUIRE(verify_3rdf(m.graph, heavy).valid());
    CHECK_THROWS_AS(labeling_to_cover(m, heavy), std::invalid_argument);
}

TEST_CASE("picking the duplicate star reads back as that duplicate") {
    X3CInstance inst = parse("1 2\n0 1 2\n0 1 2\n");
    GadgetMap m = build_gadget(inst, GadgetVariant::bipartite);
    Labeling alt = cover_to_labeling(m, {1});
    CHECK(labeling_to_cover(m, alt) == std::vector<int>{1});
}

TEST_CASE("the gadget optimum certifies the decision") {
    // YES instance: optimum == threshold; NO instance: strictly above.
    X3CInstance yes = parse("2 3\n0 1 2\n0 1 3\n3 4 5\n");
    X3CInstance no = parse("2 2\n0 1 2\n0 1 3\n");
    for (GadgetVariant variant : {GadgetVariant::bipartite, GadgetVariant::chordal}) {
        GadgetMap my = build_gadget(yes, variant);
        SolveResult ry = gamma_3r_bnb(my.graph);
        CHECK(ry.weight == my.threshold);
        CHECK(labeling_to_cover(my, ry.witness) == std::vector<int>{0, 2});

        GadgetMap mn = build_gadget(no, variant);
        CHECK(gamma_3r_bnb(mn.graph).weight > mn.threshold);
    }
}

TEST_CASE("role map serializes to well-formed JSON") {
    GadgetMap m = build_gadget(parse("1 1\n0 1 2\n"), GadgetVariant::chordal);
    nlohmann::json j = nlohmann::json::parse(gadget_roles_json(m));
    CHECK(j["variant"] == "chordal");
    CHECK(j["q"] == 1);
    CHECK(j["t"] == 1);
    CHECK(j["order"] == 11);
    CHECK(j["threshold"] == 15);
    CHECK(j["elements"] == nlohmann::json::array({0, 1, 2}));
    CHECK(j["anchors"] == nlohmann::json::array({3, 4, 5}));
    CHECK(j["centers"] == nlohmann::json::array({6}));
    CHECK(j["connectors"] == nlohmann::json::array({7}));
    REQUIRE(j["leaves"].size() == 1);
    CHECK(j["leaves"][0] == nlohmann::json::array({8, 9, 10}));
}

}  // TEST_SUITE
