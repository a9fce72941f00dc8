#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lrw/gf2.hpp"
#include "lrw/graph.hpp"

namespace lrw {

inline constexpr int kDefaultLrwGuard = 20;
inline constexpr int kDefaultRankwidthGuard = 7;
inline constexpr int kDefaultCliqueGuard = 64;
inline constexpr int kDefaultChromaticGuard = 18;

// Maximum cut-rank over the proper prefixes of the order; 0 for n <= 1.
int order_width(const OrderedGraph& og);

struct LinearWidthResult {
    int width = 0;
    std::vector<int> order; // position -> vertex, witnesses the width
};

// Exact linear rankwidth by dynamic programming over vertex subsets.
// Ties break toward the lexicographically least witness order. The default
// implementation fills the subset tables with OpenMP; the _serial variant
// is an independent top-down reference kept for testing.
LinearWidthResult linear_rankwidth_exact(const Graph& g, int guard_n = kDefaultLrwGuard);
LinearWidthResult linear_rankwidth_exact_serial(const Graph& g, int guard_n = kDefaultLrwGuard);

// Subcubic tree (every node degree 1 or 3) with a leaf bijection to V(G).
struct RankDecompositionTree {
    std::vector<std::vector<int>> adj; // tree adjacency lists
    std::vector<int> leaf_of_vertex;   // graph vertex -> tree node
    std::vector<int> vertex_of_node;   // tree node -> graph vertex, -1 internal

    int node_count() const { return (int)adj.size(); }
    int leaf_count() const { return (int)leaf_of_vertex.size(); }

    // Throws ContractError unless the tree is connected, acyclic, subcubic,
    // has >= 2 nodes, and its leaves biject with 0..leaf_count()-1.
    void validate() const;

    // Vertices on one side of the bipartition induced by removing edge
    // (a, b): the leaves of the component containing a.
    Bitset side(int a, int b) const;
};

int decomposition_width(const Graph& g, const RankDecompositionTree& t);

// Caterpillar realizing the order: removing spine edge i separates the
// first i+1 positions, so the tree width equals the order width.
RankDecompositionTree caterpillar_decomposition(const OrderedGraph& og);

struct RankwidthResult {
    int width = 0;
    RankDecompositionTree tree;
};

// Exact rankwidth by exhaustive enumeration over leaf-labeled subcubic
// trees; requires 2 <= n <= guard.
RankwidthResult rankwidth_exact(const Graph& g, int guard_n = kDefaultRankwidthGuard);

// Glues |G| copies of yh onto yg: each G-vertex leaf of yg is identified
// with the beta leaf of a fresh copy, yielding a decomposition of
// (G . H) x K1. yg must decompose G x K1 (apex leaf |G|), yh likewise.
RankDecompositionTree lex_product_decomposition(const RankDecompositionTree& yg,
                                                const RankDecompositionTree& yh);

int clique_number(const Graph& g, int guard_n = kDefaultCliqueGuard);
int chromatic_number(const Graph& g, int guard_n = kDefaultChromaticGuard);

// Recursive union/join decomposition tree of a cograph.
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    struct Node {
        Kind kind = Kind::Leaf;
        int vertex = -1; // leaves only
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;

    // Nodes on the longest root-to-leaf path; a lone leaf has height 1.
    int height() const;
    std::vector<int> leaves() const;
};

struct CographCheck {
    bool is_cograph = false;
    Cotree cotree;                // valid iff is_cograph
    std::array<int, 4> p4{};      // induced path a-b-c-d, valid iff !is_cograph
};

CographCheck is_cograph(const Graph& g);

} // namespace lrw
