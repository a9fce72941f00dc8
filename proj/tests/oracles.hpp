#pragma once

// Brute-force reference computations, independent of the library's
// implementation paths. Everything here enumerates; nothing eliminates.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lrw/graph.hpp"

namespace oracle {

// GF(2) rank as log2 of the span size, by XOR-enumerating all row subsets.
inline int brute_rank(const std::vector<lrw::Bitset>& rows) {
    std::set<std::vector<int>> span;
    const size_t k = rows.size();
    for (uint64_t pick = 0; pick < (uint64_t(1) << k); ++pick) {
        lrw::Bitset acc(rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < k; ++i)
            if (pick >> i & 1) acc ^= rows[i];
        span.insert(acc.to_vector());
    }
    int r = 0;
    while ((size_t(1) << r) < span.size()) ++r;
    return r;
}

// Is target an XOR of some subset of rows?
inline bool brute_in_span(const std::vector<lrw::Bitset>& rows, const lrw::Bitset& target) {
    const size_t k = rows.size();
    for (uint64_t pick = 0; pick < (uint64_t(1) << k); ++pick) {
        lrw::Bitset acc(target.size());
        for (size_t i = 0; i < k; ++i)
            if (pick >> i & 1) acc ^= rows[i];
        if (acc == target) return true;
    }
    return false;
}

inline int brute_cut_rank(const lrw::Graph& g, const std::vector<int>& x) {
    lrw::Bitset mask(g.n());
    for (int v : x) mask.set(v);
    std::vector<lrw::Bitset> rows;
    for (int v : x) rows.push_back(g.neighbors(v).and_not(mask));
    return brute_rank(rows);
}

inline int order_width_of(const lrw::Graph& g, const std::vector<int>& order) {
    int w = 0;
    std::vector<int> prefix;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        prefix.push_back(order[(int)i]);
        w = std::max(w, brute_cut_rank(g, prefix));
    }
    return w;
}

// Minimum width over all n! orders.
inline int brute_lrw(const lrw::Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    int best = g.n();
    do {
        best = std::min(best, order_width_of(g, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// tau(v) straight from its defining condition: the least t >= v such that
// the suffix neighborhood of v is an XOR of suffix neighborhoods of earlier
// positions. Positions refer to the already-permuted graph.
inline int brute_tau(const lrw::Graph& pos, int v) {
    const int n = pos.n();
    auto suffix = [&](int w, int t) {
        lrw::Bitset s(n);
        const lrw::Bitset& nb = pos.neighbors(w);
        for (int p = nb.find_first(); p >= 0; p = nb.find_next(p))
            if (p > t) s.set(p);
        return s;
    };
    for (int t = v; t < n; ++t) {
        std::vector<lrw::Bitset> rows;
        for (int w = 0; w < v; ++w) rows.push_back(suffix(w, t));
        if (brute_in_span(rows, suffix(v, t))) return t;
    }
    return n - 1;
}

// Induced-P4-free test by checking every 4-subset.
inline bool brute_is_cograph(const lrw::Graph& g) {
    const int n = g.n();
    std::array<int, 4> p;
    for (p[0] = 0; p[0] < n; ++p[0])
        for (p[1] = p[0] + 1; p[1] < n; ++p[1])
            for (p[2] = p[1] + 1; p[2] < n; ++p[2])
                for (p[3] = p[2] + 1; p[3] < n; ++p[3]) {
                    std::array<int, 4> q = p;
                    std::sort(q.begin(), q.end());
                    do {
                        if (g.has_edge(q[0], q[1]) && g.has_edge(q[1], q[2]) &&
                            g.has_edge(q[2], q[3]) && !g.has_edge(q[0], q[2]) &&
                            !g.has_edge(q[0], q[3]) && !g.has_edge(q[1], q[3]))
                            return false;
                    } while (std::next_permutation(q.begin(), q.end()));
                }
    return true;
}

inline bool proper_colorable(const lrw::Graph& g, int k, std::vector<int>& col, int v) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (col[u] == c && g.has_edge(u, v)) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (proper_colorable(g, k, col, v + 1)) return true;
    }
    col[v] = -1;
    return false;
}

inline int brute_chromatic(const lrw::Graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(g.n(), -1);
        if (proper_colorable(g, k, col, 0)) return k;
    }
}

inline int brute_clique(const lrw::Graph& g) {
    const int n = g.n();
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < vs.size() && clique; ++i)
            for (size_t j = i + 1; j < vs.size() && clique; ++j)
                if (!g.has_edge(vs[i], vs[j])) clique = false;
        if (clique) best = std::max(best, (int)vs.size());
    }
    return best;
}

// Deterministic graph generators for test corpora. Raw mt19937_64 draws
// keep the sequence identical across platforms.
inline lrw::Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    lrw::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((int)(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

} // namespace oracle
