#include "doctest.h"

#include "lrw/graph.hpp"
#include "lrw/io.hpp"
#include "oracles.hpp"

#include <random>

using namespace lrw;

namespace {

void check_simple(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        CHECK(!g.neighbors(u).test(u));
        for (int v = 0; v < g.n(); ++v) CHECK(g.neighbors(u).test(v) == g.neighbors(v).test(u));
    }
}

} // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edge_list basics") {
    Graph k2 = from_edge_list(2, {{0, 1}});
    CHECK(k2.n() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));

    Graph e3 = from_edge_list(3, {});
    CHECK(e3.edge_count() == 0);

    Graph p4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4 == path_graph(4));

    CHECK(from_edge_list(2, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1); // duplicates collapse
    CHECK_THROWS_AS(from_edge_list(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(from_edge_list(2, {{0, 2}}), InputError);
}

TEST_CASE("half_graph") {
    CHECK(half_graph(1) == from_edge_list(2, {{0, 1}}));
    CHECK(half_graph(3).edge_count() == 6);
    Graph h2 = half_graph(2);
    CHECK(h2.degree(0) == 2); // a1
    CHECK(h2.degree(1) == 1); // a2
    CHECK(h2.degree(2) == 1); // b1
    CHECK(h2.degree(3) == 2); // b2
    CHECK_THROWS_AS(half_graph(0), InputError);
}

TEST_CASE("half_graph restriction is a half graph") {
    for (int k = 2; k <= 6; ++k) {
        Graph h = half_graph(k);
        for (int j = 1; j <= k; ++j) {
            std::vector<int> s;
            for (int i = 0; i < j; ++i) s.push_back(i);
            for (int i = 0; i < j; ++i) s.push_back(k + i);
            CHECK(induced_subgraph(h, s).graph == half_graph(j));
        }
    }
}

TEST_CASE("lozin_h") {
    CHECK(lozin_h(1, 3, false).edge_count() == 0);
    Graph h22 = lozin_h(2, 2, false);
    CHECK(h22.edge_count() == 3);
    CHECK(h22.has_edge(0, 2));  // v11-v21
    CHECK(h22.has_edge(1, 2));  // v12-v21
    CHECK(h22.has_edge(1, 3));  // v12-v22
    CHECK(lozin_h(1, 3, true) == complete_graph(3));
    CHECK_THROWS_AS(lozin_h(0, 3, false), InputError);
}

TEST_CASE("lex_product") {
    CHECK(lex_product(complete_graph(2), complete_graph(2)) == complete_graph(4));
    Graph p3k2 = lex_product(path_graph(3), complete_graph(2));
    CHECK(p3k2.n() == 6);
    CHECK(p3k2.edge_count() == 2 * 4 + 3 * 1);
    // identity factor
    Graph p4 = path_graph(4);
    CHECK(lex_product(p4, complete_graph(1)) == p4);
    CHECK_THROWS_AS(lex_product(p4, Graph(0)), InputError);
}

TEST_CASE("lex_product associativity under canonical ids") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Graph f = oracle::random_graph(3, 50, rng);
        CHECK(lex_product(lex_product(f, f), f) == lex_product(f, lex_product(f, f)));
    }
}

TEST_CASE("join_apex") {
    CHECK(join_apex(complete_graph(1)) == complete_graph(2));
    Graph star = join_apex(empty_graph(3));
    CHECK(star.edge_count() == 3);
    CHECK(star.degree(3) == 3);
    Graph a = join_apex(path_graph(4));
    CHECK(a.n() == 5);
    CHECK(a.edge_count() == 7);
}

TEST_CASE("induced_subgraph") {
    CHECK(induced_subgraph(path_graph(4), {0, 1}).graph == complete_graph(2));
    CHECK(induced_subgraph(complete_graph(4), {0, 2, 3}).graph == complete_graph(3));
    Induced semi = induced_subgraph(half_graph(3), {0, 1, 3, 4}); // a1,a2,b1,b2
    CHECK(semi.graph == half_graph(2));
    CHECK(semi.old_id == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("generated graphs are symmetric and loopless") {
    check_simple(half_graph(4));
    check_simple(lozin_h(3, 4, true));
    check_simple(lex_product(path_graph(3), cycle_graph(3)));
    check_simple(join_apex(half_graph(2)));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) check_simple(oracle::random_graph(8, 40, rng));
}

TEST_CASE("edge list roundtrip and error paths") {
    Graph g = half_graph(3);
    CHECK(parse_edge_list(to_edge_list(g)) == g);

    CHECK(parse_edge_list("2 1\n# comment\n\n0 1\n") == complete_graph(2));
    CHECK_THROWS_AS(parse_edge_list(""), FormatError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), FormatError); // missing edge line
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), InputError);  // self loop
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), InputError);  // out of range
}

TEST_CASE("ordered graph validation") {
    Graph p4 = path_graph(4);
    CHECK_THROWS_AS(OrderedGraph::with_order(p4, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(OrderedGraph::with_order(p4, {0, 1, 2, 2}), InputError);
    OrderedGraph og = OrderedGraph::with_order(p4, {2, 0, 3, 1});
    Graph perm = og.permuted();
    CHECK(perm.edge_count() == p4.edge_count());
    // vertex at position 0 is 2; its neighbors 1, 3 sit at positions 3, 2
    CHECK(perm.has_edge(0, 3));
    CHECK(perm.has_edge(0, 2));
}

TEST_SUITE_END();
