#include "lrw/intervals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace lrw {

IntervalFamily build_interval_graph(const ActivityData& ad) {
    const int n = ad.n();
    IntervalFamily f;
    f.r = ad.r;
    f.tau = ad.tau;
    f.left2.resize(n);
    f.right2.resize(n);
    for (int v = 0; v < n; ++v) f.left2[v] = 4 * v;
    for (int t = 0; t < n; ++t) {
        // at most two intervals end at t: the active one with tau = t and
        // the inactive t itself
        std::vector<int> enders;
        for (int v = 0; v <= t; ++v)
            if (ad.tau[v] == t) enders.push_back(v);
        int active_enders = 0;
        for (int v : enders)
            if (ad.active[v]) ++active_enders;
        if (active_enders > 1)
            throw InvariantError("two active intervals end at position " + std::to_string(t));
        for (size_t i = 0; i < enders.size(); ++i) f.right2[enders[i]] = 4 * t + 1 + (int)i;
    }

    f.h = Graph(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (ad.tau[u] >= v) f.h.add_edge(u, v);

    for (int t = 0; t < n; ++t) {
        int load = 0;
        for (int v = 0; v <= t; ++v)
            if (ad.tau[v] >= t) ++load;
        if (load > ad.r + 2)
            throw InvariantError(std::to_string(load) + " intervals meet at position " +
                                 std::to_string(t) + ", above r+2 = " +
                                 std::to_string(ad.r + 2));
        f.max_point_load = std::max(f.max_point_load, load);
    }
    f.pathwidth_certificate = f.max_point_load - 1;
    return f;
}

Digraph orient(const IntervalFamily& f) {
    Digraph d(f.h.n());
    for (auto [u, v] : f.h.edges()) d.add_arc(std::max(u, v), std::min(u, v));
    return d;
}

CenteredColoring p_centered_coloring(const IntervalFamily& f, int p) {
    if (p < 1) throw InputError("p must be positive");
    const int n = f.h.n();
    const Digraph d = orient(f);
    CenteredColoring c;
    c.p = p;
    c.colors.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        // p rounds of closed out-neighborhood expansion; arcs only point to
        // earlier vertices, which are already colored
        Bitset reach(n);
        reach.set(v);
        for (int round = 0; round < p; ++round) {
            Bitset next = reach;
            for (int x = reach.find_first(); x >= 0; x = reach.find_next(x)) next |= d.out(x);
            if (next == reach) break;
            reach = next;
        }
        std::vector<char> used(n + 2, 0);
        for (int x = reach.find_first(); x >= 0; x = reach.find_next(x))
            if (x != v) used[c.colors[x]] = 1;
        int col = 1;
        while (used[col]) ++col;
        c.colors[v] = col;
        c.palette = std::max(c.palette, col);
    }
    return c;
}

namespace {

bool mask_connected(const Graph& g, uint32_t mask) {
    const int start = std::countr_zero(mask);
    uint32_t seen = uint32_t(1) << start;
    uint32_t frontier = seen;
    while (frontier) {
        uint32_t next = 0;
        for (uint32_t m = frontier; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const Bitset& nb = g.neighbors(v);
            next |= (uint32_t)nb.word(0) & mask;
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

bool mask_centered(const Graph& g, const std::vector<int>& colors, int p, uint32_t mask) {
    if (!mask_connected(g, mask)) return true;
    int count[30] = {0};
    int distinct = 0;
    for (uint32_t m = mask; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (count[colors[v]]++ == 0) ++distinct;
    }
    if (distinct >= p) return true;
    for (uint32_t m = mask; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (count[colors[v]] == 1) return true;
    }
    return false;
}

void check_centered_input(const Graph& g, const std::vector<int>& colors, int p, int guard_n) {
    if (p < 1) throw InputError("p must be positive");
    if ((int)colors.size() != g.n()) throw InputError("coloring size differs from graph order");
    if (g.n() > guard_n || g.n() > 28)
        throw CapacityError("verify_centered: n=" + std::to_string(g.n()) + " exceeds guard " +
                            std::to_string(std::min(guard_n, 28)) +
                            " (raise with --guard-n)");
}

// verify_centered only cares about color equality, so remap arbitrary color
// values onto 1..n before scanning
std::vector<int> dense_colors(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(colors.size());
    for (size_t i = 0; i < colors.size(); ++i)
        out[i] = 1 + (int)(std::lower_bound(sorted.begin(), sorted.end(), colors[i]) -
                           sorted.begin());
    return out;
}

} // namespace

CenteredCheck verify_centered(const Graph& g, const std::vector<int>& colors, int p,
                              int guard_n) {
    check_centered_input(g, colors, p, guard_n);
    const int n = g.n();
    if (n == 0) return {true, {}};
    const std::vector<int> col = dense_colors(colors);
    const int64_t full = (int64_t(1) << n) - 1;
    int64_t worst = full + 1;
#pragma omp parallel for schedule(dynamic, 4096) reduction(min : worst)
    for (int64_t mask = 1; mask <= full; ++mask)
        if (mask < worst && !mask_centered(g, col, p, (uint32_t)mask))
            worst = mask;
    if (worst > full) return {true, {}};
    CenteredCheck bad{false, {}};
    for (int v = 0; v < n; ++v)
        if (worst >> v & 1) bad.witness.push_back(v);
    return bad;
}

CenteredCheck verify_centered_serial(const Graph& g, const std::vector<int>& colors, int p,
                                     int guard_n) {
    check_centered_input(g, colors, p, guard_n);
    const int n = g.n();
    if (n == 0) return {true, {}};
    const std::vector<int> col = dense_colors(colors);
    const int64_t full = (int64_t(1) << n) - 1;
    for (int64_t mask = 1; mask <= full; ++mask) {
        if (mask_centered(g, col, p, (uint32_t)mask)) continue;
        CenteredCheck bad{false, {}};
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) bad.witness.push_back(v);
        return bad;
    }
    return {true, {}};
}

std::vector<int> RootedForest::preorder() const {
    std::map<int, size_t> index;
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
    std::vector<int> out;
    std::function<void(int)> walk = [&](int v) {
        out.push_back(v);
        for (int c : children[index.at(v)]) walk(c);
    };
    for (int r : roots) walk(r);
    return out;
}

bool RootedForest::is_ancestor(int a, int d) const {
    std::map<int, size_t> index;
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
    for (int x = d; x >= 0; x = parent[index.at(x)])
        if (x == a) return true;
    return false;
}

RootedForest cover_forest(const IntervalFamily& f, const CenteredColoring& c,
                          const std::vector<int>& colorset) {
    if ((int)colorset.size() > c.p)
        throw InputError("colorset larger than p");
    std::vector<char> keep_color(64, 0);
    for (int col : colorset) {
        if (col < 1 || col > 63) throw InputError("color out of range");
        keep_color[col] = 1;
    }
    std::vector<int> verts;
    for (int v = 0; v < f.h.n(); ++v)
        if (keep_color[c.colors[v]]) verts.push_back(v);

    RootedForest forest;
    forest.vertices = verts;
    forest.parent.assign(verts.size(), -1);
    forest.children.assign(verts.size(), {});
    std::map<int, size_t> index;
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;

    // components of the colorset-induced subgraph of H
    std::function<std::vector<std::vector<int>>(const std::vector<int>&)> components =
        [&](const std::vector<int>& s) {
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
                    for (size_t b = 0; b < s.size(); ++b)
                        if (!used[b] && f.h.has_edge(s[a], s[b])) {
                            used[b] = 1;
                            stack.push_back(b);
                        }
                }
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            std::sort(comps.begin(), comps.end());
            // interval components must occupy disjoint position ranges
            for (size_t i = 0; i + 1 < comps.size(); ++i)
                if (comps[i].back() > comps[i + 1].front())
                    throw InvariantError("components interlace between positions " +
                                         std::to_string(comps[i + 1].front()) + " and " +
                                         std::to_string(comps[i].back()));
            return comps;
        };

    std::function<int(const std::vector<int>&)> grow = [&](const std::vector<int>& comp) -> int {
        const int root = comp.front();
        for (size_t i = 1; i < comp.size(); ++i)
            if (c.colors[comp[i]] == c.colors[root])
                throw InvariantError("minimum vertex " + std::to_string(root) +
                                     " shares its color with " + std::to_string(comp[i]));
        std::vector<int> rest(comp.begin() + 1, comp.end());
        for (const std::vector<int>& sub : components(rest)) {
            const int child = grow(sub);
            forest.parent[index.at(child)] = root;
            forest.children[index.at(root)].push_back(child);
        }
        return root;
    };

    for (const std::vector<int>& comp : components(verts)) forest.roots.push_back(grow(comp));

    // the closure property and the pre-order agreement are what the forest
    // is for; fail loudly if the construction ever loses them
    for (int u : verts)
        for (int v : verts)
            if (u < v && f.h.has_edge(u, v) && !forest.is_ancestor(u, v) &&
                !forest.is_ancestor(v, u))
                throw InvariantError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") is not an ancestor pair");
    if (forest.preorder() != verts)
        throw InvariantError("pre-order differs from the position order");
    return forest;
}

std::string serialize(const IntervalFamily& f) {
    std::string s;
    for (int v = 0; v < (int)f.left2.size(); ++v)
        s += std::to_string(v) + " " + std::to_string(f.left2[v]) + " " +
             std::to_string(f.right2[v]) + "\n";
    return s;
}

} // namespace lrw
