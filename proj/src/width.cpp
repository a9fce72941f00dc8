#include "lrw/width.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>

namespace lrw {

namespace {

constexpr int kHardSubsetCap = 24; // 2^24 table entries; memory bound

void check_subset_guard(int n, int guard_n, const char* what) {
    if (n > guard_n)
        throw CapacityError(std::string(what) + ": n=" + std::to_string(n) +
                            " exceeds guard " + std::to_string(guard_n) +
                            " (raise with --guard-n)");
    if (n > kHardSubsetCap)
        throw CapacityError(std::string(what) + ": n=" + std::to_string(n) +
                            " exceeds the subset-table cap " + std::to_string(kHardSubsetCap));
}

// XOR-basis rank of word rows.
int word_rank(const uint64_t* rows, int cnt) {
    uint64_t basis[64];
    int r = 0;
    for (int i = 0; i < cnt; ++i) {
        uint64_t x = rows[i];
        for (int j = 0; j < r && x; ++j)
            x = std::min(x, x ^ basis[j]);
        if (x) {
            basis[r++] = x;
            // keep rows ordered by decreasing high bit so min() reduces
            for (int j = r - 1; j > 0 && basis[j] > basis[j - 1]; --j)
                std::swap(basis[j], basis[j - 1]);
        }
    }
    return r;
}

std::vector<uint64_t> adjacency_words(const Graph& g) {
    std::vector<uint64_t> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v).word(0);
    return adj;
}

uint8_t rho_of_mask(const std::vector<uint64_t>& adj, uint32_t mask) {
    uint64_t rows[64];
    int cnt = 0;
    uint64_t m = mask;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        rows[cnt++] = adj[v] & ~uint64_t(mask);
    }
    return (uint8_t)word_rank(rows, cnt);
}

// Forward reconstruction shared by both DP variants: repeatedly extend the
// prefix with the smallest vertex that preserves optimality.
std::vector<int> reconstruct_order(int n, const std::vector<uint8_t>& rho,
                                   const std::vector<uint8_t>& best) {
    std::vector<int> order;
    uint32_t s = 0;
    const uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    while (s != full) {
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1) continue;
            uint32_t t = s | (uint32_t(1) << v);
            if (std::max(rho[t], best[t]) == best[s]) {
                order.push_back(v);
                s = t;
                break;
            }
        }
    }
    return order;
}

} // namespace

int order_width(const OrderedGraph& og) {
    const int n = og.graph.n();
    if ((int)og.order.size() != n) throw InputError("order length differs from vertex count");
    int w = 0;
    Bitset prefix(n);
    for (int i = 0; i + 1 < n; ++i) {
        prefix.set(og.order[i]);
        w = std::max(w, cut_rank(og.graph, prefix));
    }
    return w;
}

LinearWidthResult linear_rankwidth_exact(const Graph& g, int guard_n) {
    const int n = g.n();
    check_subset_guard(n, guard_n, "linear_rankwidth_exact");
    if (n <= 1) return {0, std::vector<int>(n, 0)};

    const uint32_t full = (uint32_t(1) << n) - 1;
    const std::vector<uint64_t> adj = adjacency_words(g);
    std::vector<uint8_t> rho(full + 1);
    std::vector<uint8_t> best(full + 1);

#pragma omp parallel for schedule(dynamic, 4096)
    for (int64_t mask = 0; mask <= (int64_t)full; ++mask)
        rho[mask] = rho_of_mask(adj, (uint32_t)mask);

    // Masks grouped by popcount, largest first; best[s] only reads supersets
    // with one extra bit, so each layer is data-parallel.
    std::vector<uint32_t> layer_start(n + 2, 0);
    for (uint32_t m = 0; m <= full; ++m) layer_start[std::popcount(m) + 1]++;
    for (int k = 0; k <= n; ++k) layer_start[k + 1] += layer_start[k];
    std::vector<uint32_t> by_count(full + 1);
    {
        std::vector<uint32_t> fill(layer_start.begin(), layer_start.end() - 1);
        for (uint32_t m = 0; m <= full; ++m) by_count[fill[std::popcount(m)]++] = m;
    }

    best[full] = 0;
    for (int k = n - 1; k >= 0; --k) {
        const int64_t lo = layer_start[k], hi = layer_start[k + 1];
#pragma omp parallel for schedule(dynamic, 1024)
        for (int64_t i = lo; i < hi; ++i) {
            const uint32_t s = by_count[i];
            uint8_t b = 0xff;
            for (int v = 0; v < n; ++v) {
                if (s >> v & 1) continue;
                const uint32_t t = s | (uint32_t(1) << v);
                b = std::min(b, std::max(rho[t], best[t]));
            }
            best[s] = b;
        }
    }

    return {best[0], reconstruct_order(n, rho, best)};
}

LinearWidthResult linear_rankwidth_exact_serial(const Graph& g, int guard_n) {
    const int n = g.n();
    check_subset_guard(n, guard_n, "linear_rankwidth_exact_serial");
    if (n <= 1) return {0, std::vector<int>(n, 0)};

    const uint32_t full = (uint32_t(1) << n) - 1;
    std::vector<uint8_t> rho(full + 1, 0xff);
    std::vector<uint8_t> best(full + 1, 0xff);

    auto rho_of = [&](uint32_t s) {
        if (rho[s] == 0xff) {
            Bitset x(n);
            for (int v = 0; v < n; ++v)
                if (s >> v & 1) x.set(v);
            rho[s] = (uint8_t)cut_rank(g, x);
        }
        return rho[s];
    };
    std::function<uint8_t(uint32_t)> go = [&](uint32_t s) -> uint8_t {
        if (s == full) return best[s] = 0;
        if (best[s] != 0xff) return best[s];
        uint8_t b = 0xfe;
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1) continue;
            const uint32_t t = s | (uint32_t(1) << v);
            b = std::min(b, std::max(rho_of(t), go(t)));
        }
        return best[s] = b;
    };

    const uint8_t width = go(0);
    // go() touched rho[t] and best[t] for every nonempty t, which covers
    // everything reconstruction reads
    return {width, reconstruct_order(n, rho, best)};
}

void RankDecompositionTree::validate() const {
    const int m = node_count();
    if (m < 2) throw ContractError("decomposition tree needs at least two nodes");
    long long edge_half = 0;
    for (int a = 0; a < m; ++a) {
        const size_t d = adj[a].size();
        if (d != 1 && d != 3) throw ContractError("decomposition tree is not subcubic");
        edge_half += (long long)d;
        if (vertex_of_node[a] >= 0 && d != 1)
            throw ContractError("internal node carries a vertex");
        if (vertex_of_node[a] < 0 && d == 1)
            throw ContractError("leaf without a vertex");
    }
    if (edge_half != 2LL * (m - 1)) throw ContractError("decomposition tree edge count is wrong");
    // connectivity
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        ++reached;
        for (int b : adj[a])
            if (!seen[b]) {
                seen[b] = 1;
                stack.push_back(b);
            }
    }
    if (reached != m) throw ContractError("decomposition tree is disconnected");
    // leaf bijection
    if ((int)vertex_of_node.size() != m) throw ContractError("vertex map size mismatch");
    std::vector<char> have(leaf_count(), 0);
    for (int a = 0; a < m; ++a) {
        int v = vertex_of_node[a];
        if (v < 0) continue;
        if (v >= leaf_count() || have[v] || leaf_of_vertex[v] != a)
            throw ContractError("leaf map is not a bijection");
        have[v] = 1;
    }
    for (char h : have)
        if (!h) throw ContractError("leaf map is not a bijection");
}

Bitset RankDecompositionTree::side(int a, int b) const {
    Bitset out(leaf_count());
    std::vector<int> stack{a};
    std::vector<char> seen(node_count(), 0);
    seen[a] = seen[b] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (vertex_of_node[x] >= 0) out.set(vertex_of_node[x]);
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return out;
}

int decomposition_width(const Graph& g, const RankDecompositionTree& t) {
    t.validate();
    if (t.leaf_count() != g.n())
        throw ContractError("leaf count differs from graph order");
    int w = 0;
    for (int a = 0; a < t.node_count(); ++a)
        for (int b : t.adj[a])
            if (a < b) w = std::max(w, cut_rank(g, t.side(a, b)));
    return w;
}

RankDecompositionTree caterpillar_decomposition(const OrderedGraph& og) {
    const int n = og.graph.n();
    if (n < 2) throw InputError("caterpillar decomposition needs at least 2 vertices");
    RankDecompositionTree t;
    if (n == 2) {
        t.adj = {{1}, {0}};
        t.vertex_of_node = {og.order[0], og.order[1]};
    } else {
        // internal spine s_1..s_{n-2} at node ids n..2n-3, leaves at 0..n-1
        const int spine = n;
        t.adj.assign(2 * n - 2, {});
        t.vertex_of_node.assign(2 * n - 2, -1);
        for (int p = 0; p < n; ++p) t.vertex_of_node[p] = og.order[p];
        auto link = [&](int a, int b) {
            t.adj[a].push_back(b);
            t.adj[b].push_back(a);
        };
        link(0, spine);
        for (int i = 0; i < n - 2; ++i) link(i + 1, spine + i);
        link(n - 1, spine + n - 3);
        for (int i = 0; i + 1 < n - 2; ++i) link(spine + i, spine + i + 1);
    }
    t.leaf_of_vertex.assign(n, -1);
    for (int a = 0; a < t.node_count(); ++a)
        if (t.vertex_of_node[a] >= 0) t.leaf_of_vertex[t.vertex_of_node[a]] = a;
    t.validate();
    return t;
}

namespace {

// Mutable tree used during enumeration; nodes have at most 3 neighbor slots.
struct EnumTree {
    std::vector<std::vector<int>> adj;
    std::vector<int> vertex_of_node;

    void link(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    void unlink(int a, int b) {
        adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
        adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
    }
};

RankDecompositionTree freeze(const EnumTree& e, int n_vertices) {
    RankDecompositionTree t;
    t.adj = e.adj;
    t.vertex_of_node = e.vertex_of_node;
    t.leaf_of_vertex.assign(n_vertices, -1);
    for (int a = 0; a < (int)e.adj.size(); ++a)
        if (e.vertex_of_node[a] >= 0) t.leaf_of_vertex[e.vertex_of_node[a]] = a;
    return t;
}

} // namespace

RankwidthResult rankwidth_exact(const Graph& g, int guard_n) {
    const int n = g.n();
    if (n < 2) throw InputError("rankwidth needs at least 2 vertices");
    if (n > guard_n)
        throw CapacityError("rankwidth_exact: n=" + std::to_string(n) + " exceeds guard " +
                            std::to_string(guard_n) + " (raise with --guard-n)");

    // Every leaf-labeled subcubic tree arises exactly once by inserting leaf
    // k into an edge of a tree on leaves 0..k-1 (remove the highest leaf to
    // invert), so no isomorphism dedup is needed.
    EnumTree e;
    e.adj.assign(2, {});
    e.vertex_of_node = {0, 1};
    e.link(0, 1);

    int best_width = n + 1;
    RankDecompositionTree best_tree;

    std::function<void(int)> grow = [&](int k) {
        if (k == n) {
            RankDecompositionTree t = freeze(e, n);
            int w = decomposition_width(g, t);
            if (w < best_width) {
                best_width = w;
                best_tree = std::move(t);
            }
            return;
        }
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < (int)e.adj.size(); ++a)
            for (int b : e.adj[a])
                if (a < b) edges.emplace_back(a, b);
        for (auto [a, b] : edges) {
            const int mid = (int)e.adj.size();
            e.adj.push_back({});
            e.vertex_of_node.push_back(-1);
            const int leaf = (int)e.adj.size();
            e.adj.push_back({});
            e.vertex_of_node.push_back(k);
            e.unlink(a, b);
            e.link(a, mid);
            e.link(mid, b);
            e.link(mid, leaf);
            grow(k + 1);
            e.unlink(mid, leaf);
            e.unlink(a, mid);
            e.unlink(mid, b);
            e.link(a, b);
            e.adj.pop_back();
            e.adj.pop_back();
            e.vertex_of_node.pop_back();
            e.vertex_of_node.pop_back();
        }
    };
    grow(2);
    return {best_width, std::move(best_tree)};
}

RankDecompositionTree lex_product_decomposition(const RankDecompositionTree& yg,
                                                const RankDecompositionTree& yh) {
    yg.validate();
    yh.validate();
    const int g = yg.leaf_count() - 1; // apex leaf has id g
    const int h = yh.leaf_count() - 1;
    if (g < 1 || h < 1) throw InputError("factors must decompose G x K1 with G nonempty");

    // Working copy with suppressible degree-2 nodes.
    std::vector<std::vector<int>> adj = yg.adj;
    std::vector<int> vertex = yg.vertex_of_node;
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };

    for (int a = 0; a < (int)vertex.size(); ++a) {
        if (vertex[a] < 0) continue;
        vertex[a] = (vertex[a] == g) ? g * h : -2; // apex keeps a product id; -2 marks glue points
    }
    for (int u = 0; u < g; ++u) {
        const int glue = yg.leaf_of_vertex[u];
        // fresh copy of yh with its beta leaf identified with the glue node
        std::vector<int> map(yh.node_count(), -1);
        map[yh.leaf_of_vertex[h]] = glue;
        for (int a = 0; a < yh.node_count(); ++a) {
            if (map[a] >= 0) continue;
            map[a] = (int)adj.size();
            adj.push_back({});
            vertex.push_back(yh.vertex_of_node[a] >= 0 ? u * h + yh.vertex_of_node[a] : -1);
        }
        vertex[glue] = -1;
        for (int a = 0; a < yh.node_count(); ++a)
            for (int b : yh.adj[a])
                if (a < b) link(map[a], map[b]);
    }

    // Suppress degree-2 nodes left by the identification.
    for (int a = 0; a < (int)adj.size(); ++a) {
        if (adj[a].size() != 2) continue;
        int x = adj[a][0], y = adj[a][1];
        adj[a].clear();
        adj[x].erase(std::find(adj[x].begin(), adj[x].end(), a));
        adj[y].erase(std::find(adj[y].begin(), adj[y].end(), a));
        link(x, y);
        vertex[a] = -3; // dead
    }

    // Compact node ids.
    std::vector<int> newid(adj.size(), -1);
    int m = 0;
    for (int a = 0; a < (int)adj.size(); ++a)
        if (vertex[a] != -3) newid[a] = m++;
    RankDecompositionTree out;
    out.adj.assign(m, {});
    out.vertex_of_node.assign(m, -1);
    out.leaf_of_vertex.assign(g * h + 1, -1);
    for (int a = 0; a < (int)adj.size(); ++a) {
        if (newid[a] < 0) continue;
        for (int b : adj[a]) out.adj[newid[a]].push_back(newid[b]);
        out.vertex_of_node[newid[a]] = vertex[a];
        if (vertex[a] >= 0) out.leaf_of_vertex[vertex[a]] = newid[a];
    }
    out.validate();
    return out;
}

namespace {

struct CliqueSearch {
    const std::vector<uint64_t>& adj;
    int best = 0;

    void expand(uint64_t r_size, uint64_t p, uint64_t x) {
        if (!p && !x) {
            best = std::max(best, (int)r_size);
            return;
        }
        if ((int)(r_size + std::popcount(p)) <= best) return;
        uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        uint64_t best_cover = p & adj[pivot];
        for (uint64_t m = px; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            uint64_t cover = p & adj[u];
            if (std::popcount(cover) > std::popcount(best_cover)) {
                pivot = u;
                best_cover = cover;
            }
        }
        uint64_t cand = p & ~adj[pivot];
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            uint64_t bit = uint64_t(1) << v;
            expand(r_size + 1, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    }
};

} // namespace

int clique_number(const Graph& g, int guard_n) {
    const int n = g.n();
    if (n > guard_n || n > 64)
        throw CapacityError("clique_number: n=" + std::to_string(n) + " exceeds guard " +
                            std::to_string(std::min(guard_n, 64)) + " (raise with --guard-n)");
    if (n == 0) return 0;
    std::vector<uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = g.neighbors(v).find_first(); u >= 0; u = g.neighbors(v).find_next(u))
            adj[v] |= uint64_t(1) << u;
    CliqueSearch s{adj};
    uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    s.expand(0, all, 0);
    return s.best;
}

namespace {

// Enumerates maximal independent sets of G[mask] containing the lowest
// vertex of mask, as maximal cliques of the complement.
struct ChiContext {
    int n;
    std::vector<uint32_t> co_adj;
    std::vector<int16_t> memo;

    int chi(uint32_t mask) {
        if (!mask) return 0;
        if (memo[mask] >= 0) return memo[mask];
        const int v = std::countr_zero(mask);
        int best = 1 + 30; // n <= 24
        auto visit = [&](uint32_t mis) {
            best = std::min(best, 1 + chi(mask & ~mis));
        };
        std::function<void(uint32_t, uint32_t, uint32_t)> bk = [&](uint32_t r, uint32_t p,
                                                                   uint32_t x) {
            if (!p && !x) {
                visit(r);
                return;
            }
            int pivot = std::countr_zero(p ? p : x);
            uint32_t cand = p & ~co_adj[pivot];
            while (cand) {
                int u = std::countr_zero(cand);
                cand &= cand - 1;
                uint32_t bit = uint32_t(1) << u;
                bk(r | bit, p & co_adj[u], x & co_adj[u]);
                p &= ~bit;
                x |= bit;
            }
        };
        bk(uint32_t(1) << v, co_adj[v] & mask, 0);
        return memo[mask] = (int16_t)best;
    }
};

} // namespace

int chromatic_number(const Graph& g, int guard_n) {
    const int n = g.n();
    check_subset_guard(n, guard_n, "chromatic_number");
    if (n == 0) return 0;
    ChiContext ctx;
    ctx.n = n;
    ctx.co_adj.assign(n, 0);
    const uint32_t full = (uint32_t(1) << n) - 1;
    for (int v = 0; v < n; ++v) {
        uint32_t nb = 0;
        for (int u = g.neighbors(v).find_first(); u >= 0; u = g.neighbors(v).find_next(u))
            nb |= uint32_t(1) << u;
        ctx.co_adj[v] = full & ~nb & ~(uint32_t(1) << v);
    }
    ctx.memo.assign((size_t)full + 1, -1);
    return ctx.chi(full);
}

int Cotree::height() const {
    if (root < 0) return 0;
    std::function<int(int)> depth = [&](int a) -> int {
        int d = 0;
        for (int c : nodes[a].children) d = std::max(d, depth(c));
        return d + 1;
    };
    return depth(root);
}

std::vector<int> Cotree::leaves() const {
    std::vector<int> out;
    std::function<void(int)> walk = [&](int a) {
        if (nodes[a].kind == Kind::Leaf) out.push_back(nodes[a].vertex);
        for (int c : nodes[a].children) walk(c);
    };
    if (root >= 0) walk(root);
    return out;
}

namespace {

std::vector<std::vector<int>> split_components(const Graph& g, const std::vector<int>& s,
                                               bool in_complement) {
    std::vector<char> used(s.size(), 0);
    std::vector<std::vector<int>> comps;
    for (size_t i = 0; i < s.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> stack{i};
        used[i] = 1;
        std::vector<int> comp;
        while (!stack.empty()) {
            size_t a = stack.back();
            stack.pop_back();
            comp.push_back(s[a]);
            for (size_t b = 0; b < s.size(); ++b) {
                if (used[b]) continue;
                bool adj = g.has_edge(s[a], s[b]);
                if (adj != in_complement) {
                    used[b] = 1;
                    stack.push_back(b);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g, const std::vector<int>& s) {
    for (int b : s)
        for (int c : s) {
            if (b == c || !g.has_edge(b, c)) continue;
            for (int a : s) {
                if (a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c)) continue;
                for (int d : s) {
                    if (d == a || d == b || d == c) continue;
                    if (g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d))
                        return std::array<int, 4>{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

} // namespace

CographCheck is_cograph(const Graph& g) {
    CographCheck out;
    Cotree& tree = out.cotree;
    bool failed = false;
    std::array<int, 4> p4{};

    std::function<int(const std::vector<int>&)> build = [&](const std::vector<int>& s) -> int {
        if (failed) return -1;
        if (s.size() == 1) {
            tree.nodes.push_back({Cotree::Kind::Leaf, s[0], {}});
            return (int)tree.nodes.size() - 1;
        }
        auto comps = split_components(g, s, false);
        Cotree::Kind kind = Cotree::Kind::Union;
        if (comps.size() == 1) {
            comps = split_components(g, s, true);
            kind = Cotree::Kind::Join;
            if (comps.size() == 1) {
                auto w = find_induced_p4(g, s);
                if (!w) throw ContractError("connected co-connected set without induced P4");
                p4 = *w;
                failed = true;
                return -1;
            }
        }
        std::vector<int> children;
        for (const auto& comp : comps) {
            int c = build(comp);
            if (failed) return -1;
            children.push_back(c);
        }
        tree.nodes.push_back({kind, -1, std::move(children)});
        return (int)tree.nodes.size() - 1;
    };

    if (g.n() == 0) {
        out.is_cograph = true;
        return out;
    }
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    int root = build(all);
    if (failed) {
        out.is_cograph = false;
        out.cotree = Cotree{};
        out.p4 = p4;
    } else {
        out.is_cograph = true;
        tree.root = root;
    }
    return out;
}

} // namespace lrw
