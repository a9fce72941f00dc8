#include "doctest.h"

#include "lrw/width.hpp"
#include "oracles.hpp"

#include <random>

using namespace lrw;

TEST_SUITE_BEGIN("width");

TEST_CASE("order_width") {
    CHECK(order_width(OrderedGraph::identity(empty_graph(5))) == 0);
    CHECK(order_width(OrderedGraph::identity(complete_graph(1))) == 0);
    // interleaved order a1,b1,a2,b2,a3,b3 on the half-graph
    OrderedGraph og = OrderedGraph::with_order(half_graph(3), {0, 3, 1, 4, 2, 5});
    CHECK(oracle::order_width_of(og.graph, og.order) == 1);
    CHECK(order_width(og) == 1);
}

TEST_CASE("linear rankwidth on named graphs") {
    CHECK(linear_rankwidth_exact(complete_graph(1)).width == 0);
    CHECK(linear_rankwidth_exact(path_graph(4)).width == 1);
    CHECK(oracle::brute_lrw(path_graph(4)) == 1);
    for (int k = 1; k <= 6; ++k) CHECK(linear_rankwidth_exact(half_graph(k)).width == 1);
    CHECK(linear_rankwidth_exact(cycle_graph(5)).width == 2);
}

TEST_CASE("linear rankwidth witness achieves the width") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracle::random_graph(2 + (int)(rng() % 7), 50, rng);
        LinearWidthResult res = linear_rankwidth_exact(g);
        CHECK(order_width(OrderedGraph::with_order(g, res.order)) == res.width);
    }
}

TEST_CASE("linear rankwidth agrees with all-orders enumeration") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        Graph g = oracle::random_graph(1 + (int)(rng() % 7), 30 + (int)(rng() % 50), rng);
        CHECK(linear_rankwidth_exact(g).width == oracle::brute_lrw(g));
    }
}

TEST_CASE("serial reference matches the parallel kernel") {
    std::mt19937_64 rng(27);
    for (int t = 0; t < 15; ++t) {
        Graph g = oracle::random_graph(1 + (int)(rng() % 9), 50, rng);
        LinearWidthResult a = linear_rankwidth_exact(g);
        LinearWidthResult b = linear_rankwidth_exact_serial(g);
        CHECK(a.width == b.width);
        CHECK(a.order == b.order);
    }
}

TEST_CASE("linear rankwidth guard") {
    CHECK_THROWS_AS(linear_rankwidth_exact(empty_graph(21)), CapacityError);
    CHECK_THROWS_AS(linear_rankwidth_exact(empty_graph(8), 7), CapacityError);
}

TEST_CASE("caterpillar width equals order width") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + (int)(rng() % 6);
        Graph g = oracle::random_graph(n, 50, rng);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
        OrderedGraph og = OrderedGraph::with_order(g, order);
        CHECK(decomposition_width(g, caterpillar_decomposition(og)) == order_width(og));
    }
}

TEST_CASE("decomposition width of any tree on an edgeless graph is zero") {
    CHECK(rankwidth_exact(empty_graph(5)).width == 0);
    CHECK(decomposition_width(empty_graph(5),
                              caterpillar_decomposition(OrderedGraph::identity(empty_graph(5)))) == 0);
}

TEST_CASE("rankwidth on named graphs") {
    CHECK(rankwidth_exact(complete_graph(2)).width == 1);
    CHECK(rankwidth_exact(join_apex(path_graph(4))).width == 2);
    CHECK(rankwidth_exact(cycle_graph(5)).width == 2);
    CHECK_THROWS_AS(rankwidth_exact(complete_graph(1)), InputError);
    CHECK_THROWS_AS(rankwidth_exact(empty_graph(8)), CapacityError);
}

TEST_CASE("rankwidth tree achieves the width and rw <= lrw") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 12; ++t) {
        Graph g = oracle::random_graph(2 + (int)(rng() % 5), 50, rng);
        RankwidthResult res = rankwidth_exact(g);
        CHECK(decomposition_width(g, res.tree) == res.width);
        CHECK(res.width <= linear_rankwidth_exact(g).width);
    }
}

TEST_CASE("glued decomposition of a lexicographic product") {
    // K1 . K1 with apexes: gluing two 2-node trees yields K2's decomposition
    RankwidthResult yk1 = rankwidth_exact(join_apex(complete_graph(1)));
    RankDecompositionTree glued = lex_product_decomposition(yk1.tree, yk1.tree);
    CHECK(glued.leaf_count() == 2);
    CHECK(decomposition_width(join_apex(complete_graph(1)), glued) == 1);

    Graph p4 = path_graph(4), k2 = complete_graph(2);
    RankwidthResult yg = rankwidth_exact(join_apex(p4));
    RankwidthResult yh = rankwidth_exact(join_apex(k2));
    RankDecompositionTree tree = lex_product_decomposition(yg.tree, yh.tree);
    Graph prod = join_apex(lex_product(p4, k2));
    CHECK(decomposition_width(prod, tree) == std::max(yg.width, yh.width));
    CHECK(decomposition_width(prod, tree) == 2);
}

TEST_CASE("glued width equals the max factor width on small pairs") {
    std::vector<Graph> factors{path_graph(4), complete_graph(2), cycle_graph(5),
                               complete_graph(1)};
    std::vector<RankwidthResult> decomp;
    for (const Graph& f : factors) decomp.push_back(rankwidth_exact(join_apex(f)));
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = 0; j < factors.size(); ++j) {
            RankDecompositionTree tree = lex_product_decomposition(decomp[i].tree, decomp[j].tree);
            Graph prod = join_apex(lex_product(factors[i], factors[j]));
            CHECK(decomposition_width(prod, tree) ==
                  std::max(decomp[i].width, decomp[j].width));
        }
}

TEST_CASE("both factors with apex sit inside the apexed product") {
    // the lower bound on the product width comes from these induced copies
    Graph g = path_graph(4), h = cycle_graph(5);
    Graph prod = join_apex(lex_product(g, h));
    const int hn = h.n(), apex = g.n() * hn;

    std::vector<int> g_side;
    for (int u = 0; u < g.n(); ++u) g_side.push_back(u * hn); // fiber vertex 0
    g_side.push_back(apex);
    CHECK(induced_subgraph(prod, g_side).graph == join_apex(g));

    std::vector<int> h_side;
    for (int v = 0; v < hn; ++v) h_side.push_back(v); // copy at G-vertex 0
    h_side.push_back(apex);
    CHECK(induced_subgraph(prod, h_side).graph == join_apex(h));
}

TEST_CASE("clique and chromatic numbers") {
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(chromatic_number(complete_graph(5)) == 5);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(clique_number(half_graph(3)) == 2);
    CHECK(chromatic_number(half_graph(3)) == 2);
    CHECK(clique_number(empty_graph(0)) == 0);
    CHECK(chromatic_number(empty_graph(4)) == 1);
    CHECK_THROWS_AS(chromatic_number(empty_graph(19)), CapacityError);
}

TEST_CASE("clique and chromatic match brute force on random graphs") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracle::random_graph(1 + (int)(rng() % 8), 20 + (int)(rng() % 60), rng);
        CHECK(clique_number(g) == oracle::brute_clique(g));
        CHECK(chromatic_number(g) == oracle::brute_chromatic(g));
    }
}

TEST_CASE("is_cograph") {
    CographCheck p4 = is_cograph(path_graph(4));
    CHECK(!p4.is_cograph);
    // the witness is an induced P4
    auto [a, b, c, d] = p4.p4;
    Graph g = path_graph(4);
    CHECK(g.has_edge(a, b));
    CHECK(g.has_edge(b, c));
    CHECK(g.has_edge(c, d));
    CHECK(!g.has_edge(a, c));
    CHECK(!g.has_edge(a, d));
    CHECK(!g.has_edge(b, d));

    CHECK(is_cograph(complete_graph(6)).is_cograph);
    CHECK(is_cograph(empty_graph(6)).is_cograph);
    CHECK(!is_cograph(join_apex(path_graph(4))).is_cograph);

    Cotree tree = is_cograph(complete_graph(3)).cotree;
    CHECK(tree.height() == 2);
    CHECK(tree.leaves().size() == 3);
}

TEST_CASE("is_cograph agrees with exhaustive induced-P4 search") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracle::random_graph(1 + (int)(rng() % 10), 20 + (int)(rng() % 60), rng);
        CographCheck chk = is_cograph(g);
        CHECK(chk.is_cograph == oracle::brute_is_cograph(g));
        if (chk.is_cograph) {
            std::vector<int> leaves = chk.cotree.leaves();
            std::sort(leaves.begin(), leaves.end());
            std::vector<int> all(g.n());
            std::iota(all.begin(), all.end(), 0);
            CHECK(leaves == all);
        }
    }
}

TEST_SUITE_END();
