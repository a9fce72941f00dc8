#include "lrw/stability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

namespace lrw {

namespace {

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int u = g.neighbors(v).find_first(); u >= 0; u = g.neighbors(v).find_next(u))
            adj[v] |= uint64_t(1) << u;
    return adj;
}

struct OrderIndexSearch {
    const std::vector<uint64_t>& adj;
    const std::vector<int>& a_order; // ascending degree
    const std::vector<int>& b_order; // descending degree
    int best = 0;
    int cap;

    void dfs(int t, uint64_t cand_a, uint64_t cand_b) {
        if (best >= cap) return;
        if (t + std::min(std::popcount(cand_a), std::popcount(cand_b)) <= best) return;
        for (int a : a_order) {
            if (!(cand_a >> a & 1)) continue;
            const uint64_t with_a = cand_b & adj[a] & ~(uint64_t(1) << a);
            for (int b : b_order) {
                if (!(with_a >> b & 1)) continue;
                best = std::max(best, t + 1);
                if (best >= cap) return;
                const uint64_t drop = (uint64_t(1) << a) | (uint64_t(1) << b);
                dfs(t + 1, cand_a & ~adj[b] & ~drop, with_a & ~drop);
            }
        }
    }
};

} // namespace

int order_index(const Graph& g, int guard_n, std::optional<int> k_cap) {
    const int n = g.n();
    if (!k_cap && n > guard_n)
        throw CapacityError("order_index: n=" + std::to_string(n) + " exceeds guard " +
                            std::to_string(guard_n) + " (raise with --guard-n or give a cap)");
    if (n > 62) throw CapacityError("order_index: n=" + std::to_string(n) + " exceeds 62");
    if (n == 0) return 0;

    const std::vector<uint64_t> adj = adjacency_masks(g);
    std::vector<int> a_order(n), b_order(n);
    for (int v = 0; v < n; ++v) a_order[v] = b_order[v] = v;
    std::stable_sort(a_order.begin(), a_order.end(),
                     [&](int x, int y) { return g.degree(x) < g.degree(y); });
    std::stable_sort(b_order.begin(), b_order.end(),
                     [&](int x, int y) { return g.degree(x) > g.degree(y); });

    OrderIndexSearch s{adj, a_order, b_order, 0, k_cap ? *k_cap : n};
    const uint64_t all = (uint64_t(1) << n) - 1;
    s.dfs(0, all, all);
    return s.best;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// Component l of Class(v): the singleton {gamma} at l = 0, the l-th
// delegation color set up to r, empty beyond.
std::vector<int> class_component(const VertexLabel& lab, int l) {
    if (l == 0) return {lab.gamma};
    if (l <= (int)lab.class_sets.size()) return lab.class_sets[l - 1];
    return {};
}

int odd_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    int parity = 0;
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x)) parity ^= 1;
    return parity;
}

} // namespace

std::string class_key(const VertexLabel& lab) {
    std::string s = std::to_string(lab.gamma);
    for (const auto& cs : lab.class_sets) {
        s += '|';
        s += join(cs);
    }
    return s;
}

std::string nc_key(const VertexLabel& lab) { return join(lab.nc); }

bool PairContext::parity_disagrees() const {
    return odd_intersection(nc2_set, cl1_at_l1) != odd_intersection(nc1_set, cl2_at_l2);
}

PairContext pair_context(const ActivityData& ad, const ColoredOrder& labels, int u, int v) {
    if (u >= v) throw InputError("pair_context needs u < v");
    PairContext ctx;
    ctx.l1 = xi(ad, u, v);
    ctx.l2 = xi(ad, v, u);
    const VertexLabel& lu = labels.labels[u];
    const VertexLabel& lv = labels.labels[v];
    ctx.cl1 = class_key(lu);
    ctx.nc1 = nc_key(lu);
    ctx.cl2 = class_key(lv);
    ctx.nc2 = nc_key(lv);
    ctx.cl1_at_l1 = class_component(lu, ctx.l1);
    ctx.cl2_at_l2 = class_component(lv, ctx.l2);
    ctx.nc1_set = lu.nc;
    ctx.nc2_set = lv.nc;
    return ctx;
}

std::vector<PairContext> realized_contexts(const ActivityData& ad, const ColoredOrder& labels) {
    std::vector<PairContext> out;
    for (int u = 0; u < ad.n(); ++u)
        for (int v = u + 1; v < ad.n(); ++v) out.push_back(pair_context(ad, labels, u, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::pair<int, int>> zeta(const ActivityData& ad, const FTree& ft,
                                        const ColoredOrder& labels, int u, int v) {
    if (u >= v) throw InputError("zeta needs u < v");
    const int l1 = xi(ad, u, v);
    const int l2 = xi(ad, v, u);
    const std::string cl = class_key(labels.labels[v]);
    const std::string nc = nc_key(labels.labels[v]);
    const int target_node = ft.iterate(v, l2);
    for (int cand = u - 1; cand >= 0; --cand) {
        if (class_key(labels.labels[cand]) != cl || nc_key(labels.labels[cand]) != nc) continue;
        if (xi(ad, u, cand) != l1) continue;
        if (xi(ad, cand, u) != l2) continue;
        if (ft.iterate(cand, l2) != target_node) continue;
        return std::make_pair(cand, u);
    }
    return std::nullopt;
}

int max_alternation_chain(const ActivityData& ad, const FTree& ft, const ColoredOrder& labels,
                          const PairContext& ctx) {
    int longest = 0;
    for (int u = 0; u < ad.n(); ++u)
        for (int v = u + 1; v < ad.n(); ++v) {
            if (pair_context(ad, labels, u, v) != ctx) continue;
            int len = 0;
            int cu = u, cv = v;
            while (true) {
                ++len;
                // zeta(u_i, v_i) = (v_{i+1}, u_i)
                auto first = zeta(ad, ft, labels, cu, cv);
                if (!first) break;
                const int v_next = first->first;
                // zeta(v_{i+1}, u_i) = (u_{i+1}, v_{i+1})
                auto second = zeta(ad, ft, labels, v_next, cu);
                if (!second) break;
                cu = second->first;
                cv = v_next;
            }
            longest = std::max(longest, len);
        }
    return longest;
}

Graph lex_power(const Graph& f, int m, long long size_guard) {
    if (m < 1) throw InputError("power must be positive");
    if (f.n() == 0) throw InputError("empty base graph");
    long long size = 1;
    for (int i = 0; i < m; ++i) {
        size *= f.n();
        if (size > size_guard)
            throw CapacityError("lex_power: |f|^m exceeds the size guard " +
                                std::to_string(size_guard));
    }
    Graph g = f;
    for (int i = 1; i < m; ++i) g = lex_product(g, f);
    return g;
}

namespace {

// All vertex subsets of g inducing a subgraph isomorphic to f, as masks.
std::vector<uint64_t> induced_copies(const Graph& g, const Graph& f) {
    const int n = g.n(), k = f.n();
    std::vector<uint64_t> copies;
    std::vector<int> subset(k);
    std::vector<int> map_to(k, -1);
    std::vector<char> used(k, 0);

    std::function<bool(int)> extend = [&](int i) -> bool {
        if (i == k) return true;
        for (int j = 0; j < k; ++j) {
            if (used[j]) continue;
            bool ok = true;
            for (int i2 = 0; i2 < i && ok; ++i2)
                ok = f.has_edge(i, i2) == g.has_edge(subset[j], subset[map_to[i2]]);
            if (!ok) continue;
            used[j] = 1;
            map_to[i] = j;
            if (extend(i + 1)) {
                used[j] = 0;
                return true;
            }
            used[j] = 0;
        }
        return false;
    };

    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == k) {
            if (extend(0)) {
                uint64_t mask = 0;
                for (int v : subset) mask |= uint64_t(1) << v;
                copies.push_back(mask);
            }
            return;
        }
        for (int v = from; v <= n - (k - idx); ++v) {
            subset[idx] = v;
            choose(idx + 1, v + 1);
        }
    };
    if (k >= 1 && k <= n) choose(0, 0);
    return copies;
}

long long colorings_total(int n, int m, long long guard) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > guard / m) return guard + 1;
        total *= m;
    }
    return total;
}

struct RamseyInstance {
    Graph power;
    std::vector<uint64_t> copies;
    long long total = 0;
    int m = 0;

    bool check(long long counter) const {
        const int n = power.n();
        int digit[64];
        uint64_t class_mask[64] = {0};
        long long rest = counter;
        for (int v = 0; v < n; ++v) {
            digit[v] = (int)(rest % m);
            class_mask[digit[v]] |= uint64_t(1) << v;
            rest /= m;
        }
        for (uint64_t mask : copies) {
            const int c = digit[std::countr_zero(mask)];
            if ((mask & ~class_mask[c]) == 0) return true;
        }
        return false;
    }

    std::vector<int> digits(long long counter) const {
        std::vector<int> d(power.n());
        for (int v = 0; v < power.n(); ++v) {
            d[v] = (int)(counter % m);
            counter /= m;
        }
        return d;
    }
};

RamseyInstance ramsey_instance(const Graph& f, int m, long long coloring_guard) {
    if (m < 1) throw InputError("color count must be positive");
    if (m > 62) throw CapacityError("verify_vertex_ramsey: more than 62 colors");
    RamseyInstance inst;
    inst.m = m;
    inst.power = lex_power(f, m, coloring_guard);
    if (inst.power.n() > 62)
        throw CapacityError("verify_vertex_ramsey: power has more than 62 vertices");
    inst.total = colorings_total(inst.power.n(), m, coloring_guard);
    if (inst.total > coloring_guard)
        throw CapacityError("verify_vertex_ramsey: m^(|f|^m) exceeds the coloring guard " +
                            std::to_string(coloring_guard));
    inst.copies = induced_copies(inst.power, f);
    return inst;
}

} // namespace

RamseyCheck verify_vertex_ramsey(const Graph& f, int m, long long coloring_guard) {
    const RamseyInstance inst = ramsey_instance(f, m, coloring_guard);
    long long bad = inst.total;
#pragma omp parallel for schedule(dynamic, 4096) reduction(min : bad)
    for (long long counter = 0; counter < inst.total; ++counter)
        if (counter < bad && !inst.check(counter)) bad = counter;
    if (bad >= inst.total) return {true, {}};
    return {false, inst.digits(bad)};
}

RamseyCheck verify_vertex_ramsey_serial(const Graph& f, int m, long long coloring_guard) {
    const RamseyInstance inst = ramsey_instance(f, m, coloring_guard);
    for (long long counter = 0; counter < inst.total; ++counter)
        if (!inst.check(counter)) return {false, inst.digits(counter)};
    return {true, {}};
}

Graph substitution(const Graph& g, int v, const Graph& h) {
    if (v < 0 || v >= g.n()) throw InputError("substitution vertex out of range");
    const int hn = h.n();
    auto map_id = [&](int w) { return w < v ? w : w + hn - 1; };
    Graph out(g.n() - 1 + hn);
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) {
            const int other = map_id(a == v ? b : a);
            for (int j = 0; j < hn; ++j) out.add_edge(other, v + j);
        } else {
            out.add_edge(map_id(a), map_id(b));
        }
    }
    for (auto [a, b] : h.edges()) out.add_edge(v + a, v + b);
    return out;
}

} // namespace lrw
