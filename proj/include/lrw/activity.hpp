#pragma once

#include <map>
#include <vector>

#include "lrw/gf2.hpp"
#include "lrw/graph.hpp"

namespace lrw {

// Result of the left-to-right activity sweep. Everything is expressed in
// position space of the analyzed order: position p hosts og.order[p], and
// tau, bases, f0 all speak about positions. Use og.order / og.position_of()
// to convert.
struct ActivityData {
    OrderedGraph og;
    Graph pos;     // the graph relabeled into position space
    int r = 0;     // width of the order (max prefix cut-rank)

    std::vector<int> tau;                // position -> position, tau(v) >= v
    std::vector<std::vector<int>> bases; // B_t per position t, increasing
    std::vector<std::vector<int>> f0;    // delegation set F0(v), increasing
    std::vector<char> active;            // v < tau(v)

    int n() const { return pos.n(); }

    // p lies in the activity interval I_x = [x, tau(x)].
    bool in_interval(int x, int p) const { return x <= p && p <= tau[x]; }
};

// Single sweep computing B_t, tau, F0 and the order width. The basis at t
// is the greedy (lexicographically least) neighbor basis of the suffix
// neighborhoods of positions <= t.
ActivityData analyze(const OrderedGraph& og);

// Rooted tree over the empty set, all singletons, and the sets reachable
// from them under the delegation map F; the empty set is the root and the
// unique fixed point.
struct FTree {
    struct Node {
        std::vector<int> members; // sorted positions; empty only for the root
        int parent = -1;          // node id of F(M); root points to itself
        int tau = -1;             // tau(M) = min member tau; -1 for the root
        int max = -1;             // max member; -1 for the root
        int depth = 0;            // root has depth 1
    };

    std::vector<Node> nodes;    // node 0 is the root
    std::vector<int> singleton; // position -> node id of {v}

    int root() const { return 0; }
    int parent(int id) const { return nodes[id].parent; }
    const std::vector<int>& members(int id) const { return nodes[id].members; }

    // Node id of F^k({v}); sticks at the root once reached.
    int iterate(int v, int k) const;

    // Greatest common ancestor of two nodes.
    int meet(int a, int b) const;

    int height() const; // nodes on the longest root-to-leaf path
};

// One application of F: the unique member with minimum tau is replaced by
// its delegation set. m must be the empty set, a singleton, or an active
// set, else ContractError.
std::vector<int> f_step(const ActivityData& ad, const std::vector<int>& m);

// Closure of all singletons under f_step, with the monotonicity of tau
// checked on every edge (InvariantError on breach).
FTree build_f_tree(const ActivityData& ad);

// Number of delegation steps from {u} until the active interval of the
// current set covers v (or the set vanishes). u and v are positions.
int xi(const ActivityData& ad, int u, int v);

// Adjacency of the positions u and v recovered through the delegation
// process alone; must match pos.has_edge(u, v).
bool reconstruct_adjacency(const ActivityData& ad, int u, int v);

// XOR of the full (position-space) neighborhoods of the members of m.
Bitset xor_neighborhood(const ActivityData& ad, const std::vector<int>& m);

} // namespace lrw
