#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrw/activity.hpp"
#include "lrw/encoding.hpp"
#include "lrw/graph.hpp"

namespace lrw {

inline constexpr int kDefaultOrderIndexGuard = 16;
inline constexpr long long kDefaultColoringGuard = 1LL << 24;
inline constexpr long long kDefaultLexPowerGuard = 1LL << 16;

// Largest k such that disjoint tuples a_1..a_k, b_1..b_k exist with
// {a_i,b_j} an edge iff i <= j. Exact branch-and-bound; with a cap the
// result is min(order index, cap) and the size guard is waived.
int order_index(const Graph& g, int guard_n = kDefaultOrderIndexGuard,
                std::optional<int> k_cap = std::nullopt);

// The (Class, NC) part of a label plus the two xi values of an ordered
// pair; the canonical strings make contexts comparable, and the raw sets
// back the parity test.
struct PairContext {
    int l1 = 0, l2 = 0;
    std::string cl1, nc1, cl2, nc2;
    std::vector<int> cl1_at_l1, cl2_at_l2; // Class components at the xi levels
    std::vector<int> nc1_set, nc2_set;

    bool parity_disagrees() const; // |C2 n (Cl1)_l1| != |C1 n (Cl2)_l2| mod 2
    auto operator<=>(const PairContext&) const = default;
};

std::string class_key(const VertexLabel& lab);
std::string nc_key(const VertexLabel& lab);

PairContext pair_context(const ActivityData& ad, const ColoredOrder& labels, int u, int v);

// Distinct contexts realized by pairs u < v of the graph.
std::vector<PairContext> realized_contexts(const ActivityData& ad, const ColoredOrder& labels);

// zeta(u, v) for u < v: the pair (v', u) where v' < u is the maximal
// position that agrees with v on both xi values, Class, NC, and on the set
// F^{xi(v,u)}; absent when no such position exists.
std::optional<std::pair<int, int>> zeta(const ActivityData& ad, const FTree& ft,
                                        const ColoredOrder& labels, int u, int v);

// Longest chain of pairs linked by alternating zeta steps whose every pair
// realizes the given context.
int max_alternation_chain(const ActivityData& ad, const FTree& ft, const ColoredOrder& labels,
                          const PairContext& ctx);

// Iterated lexicographic power F^{.m}.
Graph lex_power(const Graph& f, int m, long long size_guard = kDefaultLexPowerGuard);

struct RamseyCheck {
    bool ok = false;
    std::vector<int> witness; // coloring with no monochromatic induced copy
};

// Checks that every m-coloring of lex_power(f, m) contains a monochromatic
// induced copy of f, by exhausting all m^(|f|^m) colorings. The default
// implementation splits the coloring range across OpenMP threads and keeps
// the lowest counterexample; the _serial variant is the reference.
RamseyCheck verify_vertex_ramsey(const Graph& f, int m,
                                 long long coloring_guard = kDefaultColoringGuard);
RamseyCheck verify_vertex_ramsey_serial(const Graph& f, int m,
                                        long long coloring_guard = kDefaultColoringGuard);

// Replaces vertex v of g by a copy of h; the copy inherits v's adjacencies.
// Ids: vertices below v keep theirs, the copy occupies v..v+|h|-1, vertices
// above v shift up by |h|-1.
Graph substitution(const Graph& g, int v, const Graph& h);

} // namespace lrw
