#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <regex>
#include <string>

#include "testsupport.hpp"

using nlohmann::json;
using trdom::test::CliResult;
using trdom::test::run_cli;
using trdom::test::write_temp;

namespace {

json parse_json(const std::string& text) { return json::parse(text); }

// Timing is the one volatile report field; identical runs must agree on
// everything else.
json stripped(const std::string& text) {
    json j = json::parse(text);
    j.erase("timing_ms");
    return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify accepts the fixtures") {
    std::string graph = write_temp("p 5\n0 1\n1 3\n3 4\n4 2\n2 0\n", "c5");
    std::string lab = write_temp("3 0 0 2 2\n", "c5lab");
    CliResult r = run_cli({"verify", graph, lab});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "valid weight=7\n");

    CliResult j = run_cli({"verify", graph, lab, "--json"});
    CHECK(j.exit_code == 0);
    json report = parse_json(j.out);
    CHECK(report["command"] == "verify");
    CHECK(report["valid"] == true);
    CHECK(report["weight"] == 7);
    CHECK(report["order"] == 5);
    CHECK(report["violations"].empty());
    std::string digest = report["digest_graph"];
    CHECK(std::regex_match(digest, std::regex("fnv1a64:[0-9a-f]{16}")));
}

TEST_CASE("verify reports violations and exits 1") {
    std::string graph = write_temp("0 1\n1 2\n", "p3");
    std::string lab = write_temp("1 3 0\n", "p3lab");
    CliResult r = run_cli({"verify", graph, lab});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("invalid (1 violations)") != std::string::npos);
    CHECK(r.out.find("vertex 2: requires 4, has 3") != std::string::npos);

    CliResult j = run_cli({"verify", graph, lab, "--json"});
    CHECK(j.exit_code == 1);
    json report = parse_json(j.out);
    CHECK(report["valid"] == false);
    CHECK(report["violations"][0]["vertex"] == 2);
}

TEST_CASE("verify honors --k") {
    std::string graph = write_temp("0 1\n1 2\n", "p3k");
    std::string lab = write_temp("2 0 2\n", "p3klab");
    CHECK(run_cli({"verify", graph, lab, "--k", "1"}).exit_code == 0);
    CHECK(run_cli({"verify", graph, lab, "--k", "3"}).exit_code == 1);
}

TEST_CASE("malformed inputs exit 2") {
    std::string graph = write_temp("0 1\n1 2\n", "ok");
    std::string bad_graph = write_temp("0 x\n", "badg");
    std::string bad_lab = write_temp("0 9 0\n", "badl");
    std::string lab = write_temp("0 4 0\n", "okl");
    CHECK(run_cli({"verify", bad_graph, lab}).exit_code == 2);
    CHECK(run_cli({"verify", graph, bad_lab}).exit_code == 2);
    CHECK(run_cli({"verify", "/nonexistent/file", lab}).exit_code == 2);
    CHECK(run_cli({"solve", bad_graph}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"solve"}).exit_code == 2);  // missing required positional
    CHECK(run_cli({"solve", graph, "--method", "sorcery"}).exit_code == 2);
    CliResult err = run_cli({"verify", bad_graph, lab});
    CHECK(err.err.find("line 1") != std::string::npos);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli({"--help"}).exit_code == 0);
    CliResult r = run_cli({"solve", "--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("--method") != std::string::npos);
}

TEST_CASE("solve picks the right engine per shape") {
    CliResult path = run_cli({"solve", "-", "--json"}, "0 1\n1 2\n2 3\n");
    json pj = parse_json(path.out);
    CHECK(pj["weight"] == 7);
    CHECK(pj["method"] == "closedform");

    CliResult cyc = run_cli({"solve", "-", "--json"}, "0 1\n1 2\n2 3\n3 0\n");
    CHECK(parse_json(cyc.out)["weight"] == 6);
    CHECK(parse_json(cyc.out)["method"] == "closedform");

    // A star is a tree but not a path: the tree engine takes over.
    CliResult star = run_cli({"solve", "-", "--json"}, "0 1\n0 2\n0 3\n0 4\n");
    CHECK(parse_json(star.out)["weight"] == 4);
    CHECK(parse_json(star.out)["method"] == "treedp");

    // A chorded cycle is neither: branch and bound.
    CliResult dense = run_cli({"solve", "-", "--json"}, "0 1\n1 2\n2 3\n3 0\n0 2\n");
    CHECK(parse_json(dense.out)["method"] == "bnb");

    // Mixed shapes across components report method "mixed".
    CliResult mixed = run_cli({"solve", "-", "--json"}, "p 7\n0 1\n1 2\n3 4\n3 5\n3 6\n");
    json mj = parse_json(mixed.out);
    CHECK(mj["method"] == "mixed");
    CHECK(mj["weight"] == 8);  // 3-path contributes 4, 4-star contributes 4
    CHECK(mj["per_component"].size() == 2);
}

TEST_CASE("solve methods can be forced and refuse wrong shapes") {
    std::string c4 = write_temp("0 1\n1 2\n2 3\n3 0\n", "c4");
    std::string star = write_temp("0 1\n0 2\n0 3\n", "star4");
    CHECK(parse_json(run_cli({"solve", c4, "--method", "bruteforce", "--json"}).out)["weight"] == 6);
    CHECK(parse_json(run_cli({"solve", c4, "--method", "bnb", "--json"}).out)["weight"] == 6);
    CHECK(run_cli({"solve", c4, "--method", "treedp"}).exit_code == 2);
    CHECK(run_cli({"solve", star, "--method", "closedform"}).exit_code == 2);
    CHECK(parse_json(run_cli({"solve", star, "--method", "treedp", "--json"}).out)["weight"] == 4);
}

TEST_CASE("solve --k generalizes, --no-ones restricts") {
    std::string p4 = write_temp("0 1\n1 2\n2 3\n", "p4");
    json k1 = parse_json(run_cli({"solve", p4, "--method", "bruteforce", "--k", "1", "--json"}).out);
    CHECK(k1["weight"] == 3);  // Roman domination of the 4-path
    CHECK(k1["k"] == 1);
    json k3 = parse_json(run_cli({"solve", p4, "--method", "bruteforce", "--no-ones", "--json"}).out);
    CHECK(k3["weight"] == 7);
    CHECK(run_cli({"solve", p4, "--method", "bruteforce", "--k", "2", "--no-ones"}).exit_code == 2);
    // Only bruteforce understands foreign k.
    CHECK(run_cli({"solve", p4, "--method", "bnb", "--k", "2"}).exit_code == 2);
}

TEST_CASE("solve guard refusals exit 3") {
    std::string big = write_temp(trdom::to_edge_list(trdom::gen::path(20)), "p20");
    CHECK(run_cli({"solve", big, "--method", "bruteforce"}).exit_code == 3);
    CliResult r = run_cli({"solve", big, "--method", "bruteforce"});
    CHECK(r.err.find("guard:") != std::string::npos);
    std::string huge = write_temp(trdom::to_edge_list(trdom::gen::gnp(70, 0.9, 3)), "g70");
    CHECK(run_cli({"solve", huge, "--method", "bnb"}).exit_code == 3);
    std::string chain_big = write_temp(trdom::to_edge_list(trdom::gen::path(13)), "p13");
    CHECK(run_cli({"chain", chain_big}).exit_code == 3);
}

TEST_CASE("solve witness file round trips through verify") {
    std::string graph = write_temp(trdom::to_edge_list(trdom::gen::cycle(9)), "c9");
    std::string witness = trdom::test::write_temp("", "c9wit");
    CliResult r = run_cli({"solve", graph, "--out", witness, "--json"});
    CHECK(r.exit_code == 0);
    CHECK(parse_json(r.out)["weight"] == 12);
    CHECK(run_cli({"verify", graph, witness}).exit_code == 0);
}

TEST_CASE("reports are deterministic modulo timing") {
    std::string graph = write_temp(trdom::to_edge_list(trdom::gen::gnp(14, 0.3, 8)), "g14");
    CliResult a = run_cli({"solve", graph, "--json"});
    CliResult b = run_cli({"solve", graph, "--json"});
    CHECK(stripped(a.out) == stripped(b.out));
    CliResult c = run_cli({"solve", graph, "--json", "--threads", "8"});
    CHECK(stripped(a.out) == stripped(c.out));

    CliResult ba = run_cli({"bound", graph, "--json"});
    CliResult bb = run_cli({"bound", graph, "--json"});
    CHECK(stripped(ba.out) == stripped(bb.out));
}

TEST_CASE("bound human output marks tight entries") {
    std::string c5 = write_temp(trdom::to_edge_list(trdom::gen::cycle(5)), "c5b");
    CliResult r = run_cli({"bound", c5});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("girth5") != std::string::npos);
    CHECK(r.out.find("(tight)") != std::string::npos);
    CHECK(r.out.find("n/a") != std::string::npos);  // some entries never apply here

    json j = parse_json(run_cli({"bound", c5, "--json"}).out);
    CHECK(j["best_upper"] == 7);
    CHECK(j["best_lower"] == 7);
    bool found = false;
    for (const auto& e : j["entries"])
        if (e["name"] == "girth5") {
            CHECK(e["tight"] == true);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("gen lists families and emits known shapes") {
    CliResult list = run_cli({"gen", "--list"});
    CHECK(list.exit_code == 0);
    for (const char* name : {"path", "cycle", "star", "double_star", "complete_bipartite",
                             "spider", "gnp", "random_tree", "family_f", "family_h"})
        CHECK(list.out.find(name) != std::string::npos);

    CliResult p4 = run_cli({"gen", "path", "--order", "4"});
    CHECK(p4.out == "p 4\n0 1\n1 2\n2 3\n");

    json j = parse_json(run_cli({"gen", "cycle", "--order", "5", "--json"}).out);
    CHECK(j["order"] == 5);
    CHECK(j["known_value"] == 7);

    // Unknown family or missing parameters fail as usage errors.
    CHECK(run_cli({"gen", "klein_bottle"}).exit_code == 2);
    CHECK(run_cli({"gen", "path"}).exit_code == 2);
    CHECK(run_cli({"gen"}).exit_code == 2);
}

TEST_CASE("gen randomness is seeded and reproducible") {
    CliResult a = run_cli({"gen", "gnp", "--order", "12", "--prob", "0.3", "--seed", "5"});
    CliResult b = run_cli({"gen", "gnp", "--order", "12", "--prob", "0.3", "--seed", "5"});
    CliResult c = run_cli({"gen", "gnp", "--order", "12", "--prob", "0.3", "--seed", "6"});
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    // The default seed is fixed, so omitting --seed is reproducible too.
    CliResult d = run_cli({"gen", "random_tree", "--order", "9"});
    CliResult e = run_cli({"gen", "random_tree", "--order", "9"});
    CHECK(d.out == e.out);
}

TEST_CASE("reduce builds gadgets with a sidecar role map") {
    std::string x3c = write_temp("1 1\n0 1 2\n", "x11");
    CliResult r = run_cli({"reduce", x3c});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("p 11\n") == 0);

    std::string out_edges = write_temp("", "gadget_out");
    CliResult w = run_cli({"reduce", x3c, "--out", out_edges});
    CHECK(w.exit_code == 0);
    CliResult solved = run_cli({"solve", out_edges, "--json"});
    CHECK(parse_json(solved.out)["weight"] == 15);

    std::ifstream sidecar(out_edges + ".roles.json");
    REQUIRE(sidecar.good());
    json roles;
    sidecar >> roles;
    CHECK(roles["threshold"] == 15);
    CHECK(roles["variant"] == "bipartite");

    json jr = parse_json(run_cli({"reduce", x3c, "--json"}).out);
    CHECK(jr["order"] == 11);
    CHECK(jr["threshold"] == 15);
    CHECK(jr["roles"]["centers"][0] == 6);
}

TEST_CASE("reduce cover and extract round trip") {
    std::string x3c = write_temp("2 3\n0 1 2\n0 1 3\n3 4 5\n", "x23");
    std::string cover = write_temp("0 2\n", "cov");
    CliResult lab = run_cli({"reduce", x3c, "--cover", cover});
    CHECK(lab.exit_code == 0);
    std::string labfile = write_temp(lab.out, "labfile");
    CliResult back = run_cli({"reduce", x3c, "--extract", labfile});
    CHECK(back.exit_code == 0);
    CHECK(back.out == "0 2\n");

    // A bad cover is a domain failure, exit 1.
    std::string badcover = write_temp("0 1\n", "badcov");
    CHECK(run_cli({"reduce", x3c, "--cover", badcover}).exit_code == 1);
}

TEST_CASE("reduce --solve reports covers and their absence") {
    std::string yes = write_temp("2 3\n0 1 2\n0 1 3\n3 4 5\n", "yes");
    CliResult ry = run_cli({"reduce", yes, "--solve"});
    CHECK(ry.exit_code == 0);
    CHECK(ry.out == "0 2\n");

    std::string no = write_temp("2 2\n0 1 2\n0 1 3\n", "no");
    CliResult rn = run_cli({"reduce", no, "--solve"});
    CHECK(rn.exit_code == 1);
    CHECK(rn.out == "no exact cover\n");

    CHECK(run_cli({"reduce", yes, "--variant", "moebius"}).exit_code == 2);
}

TEST_CASE("chain prints the four values") {
    std::string c5 = write_temp(trdom::to_edge_list(trdom::gen::cycle(5)), "c5chain");
    CliResult r = run_cli({"chain", c5});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("gamma 2") != std::string::npos);
    CHECK(r.out.find("triple_roman 7") != std::string::npos);
    CHECK(r.out.find("chain holds") != std::string::npos);

    json j = parse_json(run_cli({"chain", c5, "--json"}).out);
    CHECK(j["gamma"] == 2);
    CHECK(j["roman"] == 4);
    CHECK(j["double_roman"] == 6);
    CHECK(j["triple_roman"] == 7);
    CHECK(j["holds"] == true);
    CHECK(j["relations"]["double_lt_triple"] == true);
}

}  // TEST_SUITE
