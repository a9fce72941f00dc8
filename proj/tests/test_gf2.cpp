#include "doctest.h"

#include "lrw/gf2.hpp"
#include "oracles.hpp"

#include <random>

using namespace lrw;

namespace {

BitMatrix matrix_of(int cols, std::vector<std::vector<int>> rows) {
    BitMatrix m(cols);
    for (auto& r : rows) {
        Bitset b(cols);
        for (int i : r) b.set(i);
        m.push_row(b);
    }
    return m;
}

} // namespace

TEST_SUITE_BEGIN("gf2");

TEST_CASE("rank") {
    BitMatrix id4 = matrix_of(4, {{0}, {1}, {2}, {3}});
    CHECK(rank(id4) == 4);

    BitMatrix dup = matrix_of(3, {{0, 1}, {0, 1}});
    CHECK(rank(dup) == 1);

    // rows 110, 011, 101: the third is the XOR of the first two
    BitMatrix tri = matrix_of(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(oracle::brute_rank(tri.rows) == 2);
    CHECK(rank(tri) == 2);
}

TEST_CASE("rank agrees with subset enumeration on random matrices") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        const int rows = 1 + (int)(rng() % 6), cols = 1 + (int)(rng() % 7);
        BitMatrix m(cols);
        for (int i = 0; i < rows; ++i) {
            Bitset b(cols);
            for (int c = 0; c < cols; ++c)
                if (rng() % 2) b.set(c);
            m.push_row(b);
        }
        CHECK(rank(m) == oracle::brute_rank(m.rows));
        CHECK(rank(m) == (int)greedy_basis(m.rows).size());
    }
}

TEST_CASE("cut_rank") {
    Graph any = path_graph(3);
    CHECK(cut_rank(any, std::vector<int>{}) == 0);
    CHECK(cut_rank(any, std::vector<int>{0, 1, 2}) == 0);

    Graph c4 = cycle_graph(4);
    CHECK(oracle::brute_cut_rank(c4, {0, 1}) == 2);
    CHECK(cut_rank(c4, std::vector<int>{0, 1}) == 2);

    Graph h3 = half_graph(3);
    CHECK(oracle::brute_cut_rank(h3, {0, 1, 2}) == 3);
    CHECK(cut_rank(h3, std::vector<int>{0, 1, 2}) == 3);
}

TEST_CASE("cut_rank is symmetric under complementation") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracle::random_graph(7, 50, rng);
        for (uint32_t mask = 0; mask < (1u << 7); ++mask) {
            Bitset x(7), y(7);
            for (int v = 0; v < 7; ++v)
                (mask >> v & 1 ? x : y).set(v);
            CHECK(cut_rank(g, x) == cut_rank(g, y));
        }
    }
}

TEST_CASE("solve_in_span") {
    BitMatrix b1 = matrix_of(3, {{0}, {1}});
    CHECK(solve_in_span(b1, Bitset::of(3, {0, 1})) == std::vector<int>{0, 1});

    BitMatrix b2 = matrix_of(3, {{0}});
    CHECK(!solve_in_span(b2, Bitset::of(3, {1})).has_value());

    // rows 110, 011; target 101 = row0 ^ row1 (brute force over 4 subsets)
    BitMatrix b3 = matrix_of(3, {{0, 1}, {1, 2}});
    CHECK(solve_in_span(b3, Bitset::of(3, {0, 2})) == std::vector<int>{0, 1});

    BitMatrix dep = matrix_of(3, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(solve_in_span(dep, Bitset::of(3, {0})), ContractError);
}

TEST_CASE("solve_in_span matches exhaustive XOR search") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; ++t) {
        const int cols = 2 + (int)(rng() % 6);
        std::vector<Bitset> vecs;
        for (int i = 0; i < 5; ++i) {
            Bitset b(cols);
            for (int c = 0; c < cols; ++c)
                if (rng() % 2) b.set(c);
            vecs.push_back(b);
        }
        BitMatrix basis(cols);
        for (int i : greedy_basis(vecs)) basis.push_row(vecs[i]);
        Bitset target(cols);
        for (int c = 0; c < cols; ++c)
            if (rng() % 2) target.set(c);
        auto sol = solve_in_span(basis, target);
        CHECK(sol.has_value() == oracle::brute_in_span(basis.rows, target));
        if (sol) {
            Bitset acc(cols);
            for (int i : *sol) acc ^= basis.rows[i];
            CHECK(acc == target);
        }
    }
}

TEST_CASE("greedy_basis") {
    // nested distinct nonzero sets are independent
    std::vector<Bitset> nested{Bitset::of(3, {2}), Bitset::of(3, {1, 2}), Bitset::of(3, {0, 1, 2})};
    CHECK(greedy_basis(nested) == std::vector<int>{0, 1, 2});

    std::vector<Bitset> dup{Bitset::of(3, {0, 2}), Bitset::of(3, {0, 2}), Bitset::of(3, {1})};
    CHECK(greedy_basis(dup) == std::vector<int>{0, 2});

    std::vector<Bitset> zeros{Bitset(3), Bitset(3)};
    CHECK(greedy_basis(zeros).empty());
}

TEST_SUITE_END();
