#pragma once

#include <utility>
#include <vector>

#include "lrw/bits.hpp"
#include "lrw/errors.hpp"

namespace lrw {

// Undirected loopless graph on vertices 0..n-1 with packed adjacency rows.
// Row v has bit u set iff {u,v} is an edge; rows stay symmetric with a
// zero diagonal by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].find_next(u); v >= 0; v = adj_[u].find_next(v))
                e.emplace_back(u, v);
        return e;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
};

// Directed graph; row v holds the out-neighbors of v.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), out_(n, Bitset(n)) {}

    int n() const { return n_; }
    void add_arc(int u, int v) {
        if (u == v) throw InputError("loop arc");
        out_[u].set(v);
    }
    bool has_arc(int u, int v) const { return out_[u].test(v); }
    const Bitset& out(int v) const { return out_[v]; }
    long long arc_count() const {
        long long c = 0;
        for (int v = 0; v < n_; ++v) c += out_[v].count();
        return c;
    }

private:
    int n_ = 0;
    std::vector<Bitset> out_;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Bipartite graph on a_1..a_k, b_1..b_k with {a_i,b_j} an edge iff i <= j.
// Vertex ids: a_i = i-1, b_j = k+j-1.
Graph half_graph(int k);

// H_{n,m} on v_{i,j} (id (i-1)*m + (j-1)): v_{i,j} ~ v_{i+1,j'} iff j' <= j.
// With tilde, additionally all edges inside each row i.
Graph lozin_h(int rows, int cols, bool tilde);

// Lexicographic product; vertex (u,v) gets id u*|H| + v.
Graph lex_product(const Graph& g, const Graph& h);

// Adds a universal vertex with id n.
Graph join_apex(const Graph& g);

Graph complement(const Graph& g);

struct Induced {
    Graph graph;
    std::vector<int> old_id; // new id -> original id, increasing
};

Induced induced_subgraph(const Graph& g, const std::vector<int>& s);
Induced induced_subgraph(const Graph& g, const Bitset& s);

// A graph together with a linear order on its vertices: order[p] is the
// vertex placed at position p.
struct OrderedGraph {
    Graph graph;
    std::vector<int> order;

    static OrderedGraph with_order(Graph g, std::vector<int> order);
    static OrderedGraph identity(Graph g);

    // Relabels the graph into position space: vertex p of the result is the
    // vertex at position p of the order.
    Graph permuted() const;

    std::vector<int> position_of() const; // vertex -> position
};

} // namespace lrw
