#include "lrw/graph.hpp"

#include <algorithm>

namespace lrw {

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v); // duplicates collapse in the bit rows
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph half_graph(int k) {
    if (k < 1) throw InputError("half-graph order must be positive");
    Graph g(2 * k);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) g.add_edge(i - 1, k + j - 1);
    return g;
}

Graph lozin_h(int rows, int cols, bool tilde) {
    if (rows < 1 || cols < 1) throw InputError("Lozin graph needs positive dimensions");
    auto id = [cols](int i, int j) { return (i - 1) * cols + (j - 1); };
    Graph g(rows * cols);
    for (int i = 1; i < rows; ++i)
        for (int j = 1; j <= cols; ++j)
            for (int jp = 1; jp <= j; ++jp) g.add_edge(id(i, j), id(i + 1, jp));
    if (tilde)
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j)
                for (int jp = j + 1; jp <= cols; ++jp) g.add_edge(id(i, j), id(i, jp));
    return g;
}

Graph lex_product(const Graph& g, const Graph& h) {
    if (g.n() == 0 || h.n() == 0) throw InputError("lexicographic product of empty factor");
    const int hn = h.n();
    Graph p(g.n() * hn);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < hn; ++v) {
            const int a = u * hn + v;
            // u = x, v ~ y in H
            const Bitset& nh = h.neighbors(v);
            for (int y = nh.find_next(v); y >= 0; y = nh.find_next(y))
                p.add_edge(a, u * hn + y);
            // u ~ x in G: all (x, y)
            const Bitset& ng = g.neighbors(u);
            for (int x = ng.find_next(u); x >= 0; x = ng.find_next(x))
                for (int y = 0; y < hn; ++y) p.add_edge(a, x * hn + y);
        }
    return p;
}

Graph join_apex(const Graph& g) {
    Graph a(g.n() + 1);
    for (auto [u, v] : g.edges()) a.add_edge(u, v);
    for (int v = 0; v < g.n(); ++v) a.add_edge(v, g.n());
    return a;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Induced induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> ids = s;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (v < 0 || v >= g.n()) throw InputError("induced set contains invalid vertex");
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = (int)i;
    Graph sub((int)ids.size());
    for (size_t i = 0; i < ids.size(); ++i) {
        const Bitset& nb = g.neighbors(ids[i]);
        for (int v = nb.find_first(); v >= 0; v = nb.find_next(v))
            if (pos[v] > (int)i) sub.add_edge((int)i, pos[v]);
    }
    return {std::move(sub), std::move(ids)};
}

Induced induced_subgraph(const Graph& g, const Bitset& s) {
    return induced_subgraph(g, s.to_vector());
}

OrderedGraph OrderedGraph::with_order(Graph g, std::vector<int> order) {
    if ((int)order.size() != g.n()) throw InputError("order length differs from vertex count");
    std::vector<char> seen(g.n(), 0);
    for (int v : order) {
        if (v < 0 || v >= g.n() || seen[v]) throw InputError("order is not a permutation");
        seen[v] = 1;
    }
    return {std::move(g), std::move(order)};
}

OrderedGraph OrderedGraph::identity(Graph g) {
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    return {std::move(g), std::move(order)};
}

Graph OrderedGraph::permuted() const {
    Graph p(graph.n());
    std::vector<int> pos = position_of();
    for (auto [u, v] : graph.edges()) p.add_edge(pos[u], pos[v]);
    return p;
}

std::vector<int> OrderedGraph::position_of() const {
    std::vector<int> pos(graph.n());
    for (int p = 0; p < (int)order.size(); ++p) pos[order[p]] = p;
    return pos;
}

} // namespace lrw
