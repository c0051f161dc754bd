#include <doctest.h>

#include <algorithm>
#include <set>

#include "testsupport.hpp"
#include "trdom/errors.hpp"
#include "trdom/graph.hpp"

using namespace trdom;

TEST_SUITE("graph") {

TEST_CASE("edge list round trip") {
    Graph g = from_edge_list("p 5\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));
    CHECK(to_edge_list(g) == "p 5\n0 1\n1 2\n2 3\n3 4\n");
    Graph h = from_edge_list(to_edge_list(g));
    CHECK(h.edges() == g.edges());
}

TEST_CASE("header is optional and comments are skipped") {
    Graph g = from_edge_list("# a triangle\n0 1\n\n1 2\n0 2\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    // Declared order may exceed the largest endpoint: isolated tail vertices.
    Graph h = from_edge_list("p 4\n0 1\n");
    CHECK(h.order() == 4);
    CHECK(h.degree(3) == 0);
}

TEST_CASE("parser rejects malformed text with line numbers") {
    CHECK_THROWS_AS(from_edge_list(""), ParseError);
    CHECK_THROWS_AS(from_edge_list("# only comments\n"), ParseError);
    CHECK_THROWS_WITH_AS(from_edge_list("p x\n"),
                         doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(from_edge_list("0 1\n2\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(from_edge_list("0 1\n1 one\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(from_edge_list("0 -1\n"),
                         doctest::Contains("negative"), ParseError);
    CHECK_THROWS_WITH_AS(from_edge_list("2 2\n"),
                         doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(from_edge_list("p 3\n0 5\n"),
                         doctest::Contains("exceeds"), ParseError);
}

TEST_CASE("duplicate edges collapse") {
    Graph g = from_edge_list("0 1\n1 0\n0 1\n");
    CHECK(g.order() == 2);
    CHECK(g.size() == 1);
}

TEST_CASE("adjacency lists stay sorted") {
    Graph g(5);
    g.add_edge(3, 1);
    g.add_edge(3, 4);
    g.add_edge(3, 0);
    auto nb = g.neighbors(3);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(g.degree(3) == 3);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("structure report on known graphs") {
    StructReport c5 = struct_report(gen::cycle(5));
    CHECK(c5.delta == 2);
    CHECK(c5.Delta == 2);
    CHECK(c5.diameter == 2);
    CHECK(c5.girth == 5);
    CHECK(c5.is_connected);
    CHECK(!c5.is_tree);
    CHECK(c5.regular_degree == 2);

    StructReport p4 = struct_report(gen::path(4));
    CHECK(p4.diameter == 3);
    CHECK(!p4.girth.has_value());
    CHECK(p4.is_tree);
    CHECK(!p4.regular_degree.has_value());

    StructReport k34 = struct_report(gen::complete_bipartite(3, 4));
    CHECK(k34.girth == 4);
    CHECK(k34.diameter == 2);
    CHECK(k34.delta == 3);
    CHECK(k34.Delta == 4);

    StructReport forest = struct_report(from_edge_list("p 4\n0 1\n2 3\n"));
    CHECK(!forest.is_connected);
    CHECK(!forest.diameter.has_value());
    CHECK(!forest.is_tree);  // a tree is connected
    CHECK(forest.regular_degree == 1);

    StructReport k1 = struct_report(Graph(1));
    CHECK(k1.is_connected);
    CHECK(k1.is_tree);
    CHECK(k1.diameter == 0);
        CHECK(k1.regular_degree == 0);
}

TEST_CASE("components are sorted by smallest member") {
    Graph g = from_edge_list("p 6\n3 2\n5 4\n");
    auto comps = components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{2, 3});
    CHECK(comps[3] == std::vector<int>{4, 5});
}

TEST_CASE("induced subgraph keeps the selected edges") {
    Graph c5 = gen::cycle(5);
    Graph sub = induced_subgraph(c5, {0, 1, 2, 3});
    CHECK(sub.order() == 4);
    CHECK(sub.size() == 3);  // the path 0-1-2-3
    CHECK(sub.adjacent(0, 1));
    CHECK(!sub.adjacent(0, 3));
}

TEST_CASE("generators produce the advertised shapes") {
    CHECK(gen::path(1).order() == 1);
    CHECK(gen::path(6).size() == 5);
    CHECK(gen::cycle(3).size() == 3);
    CHECK_THROWS_AS(gen::cycle(2), std::invalid_argument);

    Graph star = gen::star(7);
    CHECK(star.degree(0) == 6);
    for (int v = 1; v < 7; ++v) CHECK(star.degree(v) == 1);
    CHECK_THROWS_AS(gen::star(1), std::invalid_argument);

    Graph ds = gen::double_star(3, 2);
    CHECK(ds.order() == 7);
    CHECK(ds.adjacent(0, 1));
    CHECK(ds.degree(0) == 4);  // 3 leaves + the other stem
    CHECK(ds.degree(1) == 3);

    Graph kb = gen::complete_bipartite(2, 3);
    CHECK(kb.order() == 5);
    CHECK(kb.size() == 6);
    CHECK(test::is_bipartite(kb));

    Graph sp = gen::spider({2, 1, 3});
    CHECK(sp.order() == 7);
    CHECK(sp.degree(0) == 3);
    CHECK(struct_report(sp).is_tree);
}

TEST_CASE("random generators are seed-deterministic") {
    Graph a = gen::gnp(12, 0.3, 99);
    Graph b = gen::gnp(12, 0.3, 99);
    CHECK(a.edges() == b.edges());
    Graph c = gen::gnp(12, 0.3, 100);
    CHECK(a.edges() != c.edges());

    for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
        Graph t = gen::random_tree(9, seed);
        CHECK(t.size() == 8);
        CHECK(struct_report(t).is_tree);
        Graph t2 = gen::random_tree(9, seed);
        CHECK(t.edges() == t2.edges());
    }
}

TEST_CASE("canonical codes identify isomorphic graphs") {
    // C4 in two different vertex orders.
    Graph a = from_edge_list("0 1\n1 2\n2 3\n3 0\n");
    Graph b = from_edge_list("0 2\n2 1\n1 3\n3 0\n");
    CHECK(test::canonical_code(a) == test::canonical_code(b));
    // P4 is not C4.
    CHECK(test::canonical_code(gen::path(4)) != test::canonical_code(a));
    // Decode returns a graph with the same code.
    std::uint64_t code = test::canonical_code(gen::cycle(5));
    Graph back = test::graph_from_code(5, code);
    CHECK(test::canonical_code(back) == code);
}

TEST_CASE("isomorphism class counts match the classic tables") {
    const int expect_all[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(test::all_graphs(n).size()) == expect_all[n - 1]);
    const int expect_conn[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(test::connected_graphs(n).size()) == expect_conn[n - 1]);
    CHECK(static_cast<int>(test::all_graphs(7).size()) == 1044);
    CHECK(static_cast<int>(test::connected_graphs(7).size()) == 853);

    int trees = 0;
    for (const Graph& g : test::all_graphs(7))
        if (struct_report(g).is_tree) ++trees;
    CHECK(trees == 11);
}

TEST_CASE("structure predicates") {
    CHECK(test::is_bipartite(gen::cycle(6)));
    CHECK(!test::is_bipartite(gen::cycle(5)));
    CHECK(test::is_bipartite(gen::random_tree(10, 3)));

    CHECK(test::is_chordal(gen::path(6)));
    CHECK(test::is_chordal(gen::star(5)));
    CHECK(!test::is_chordal(gen::cycle(4)));
    CHECK(!test::is_chordal(gen::cycle(6)));
    Graph chorded = gen::cycle(4);
    chorded.add_edge(0, 2);
    CHECK(test::is_chordal(chorded));
    CHECK(test::is_chordal(gen::complete_bipartite(1, 4)));
    CHECK(!test::is_chordal(gen::complete_bipartite(2, 3)));
}

TEST_CASE("random connected generator") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = test::random_connected_graph(12, 0.2, seed);
        CHECK(g.order() == 12);
        CHECK(struct_report(g).is_connected);
    }
    Graph a = test::random_connected_graph(10, 0.3, 5);
    Graph b = test::random_connected_graph(10, 0.3, 5);
    CHECK(a.edges() == b.edges());
}

}  // TEST_SUITE
