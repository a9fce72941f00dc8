#pragma once

#include <string>
#include <vector>

#include "lrw/activity.hpp"
#include "lrw/graph.hpp"

namespace lrw {

inline constexpr int kDefaultCenteredGuard = 14;

// Activity intervals [v, tau(v)] of one analyzed order, together with their
// intersection graph H. Endpoints are also carried on a perturbed grid with
// no two intervals sharing an endpoint: coordinates are doubled
// half-integers, position p opens at 4p and the (at most two) intervals
// ending at p close at 4p+1 and 4p+2. The perturbation preserves H.
struct IntervalFamily {
    int r = 0;
    std::vector<int> tau;    // right endpoint, position scale
    std::vector<int> left2;  // 4*v
    std::vector<int> right2; // 4*tau(v) + 1 or + 2
    Graph h;                 // intersection graph on positions
    int max_point_load = 0;  // most intervals through one point
    int pathwidth_certificate = 0; // max_point_load - 1
};

// Builds the family and certifies the point load is at most r+2
// (InvariantError with the witness point otherwise).
IntervalFamily build_interval_graph(const ActivityData& ad);

// Directs every H-edge from the vertex with the larger left endpoint to the
// smaller; out-neighborhoods are transitive tournaments.
Digraph orient(const IntervalFamily& f);

struct CenteredColoring {
    int p = 0;
    std::vector<int> colors; // 1-based
    int palette = 0;
};

// Modified first-fit in left-endpoint order: each vertex gets the first
// color absent from its p-th iterated closed out-neighborhood.
CenteredColoring p_centered_coloring(const IntervalFamily& f, int p);

struct CenteredCheck {
    bool ok = false;
    std::vector<int> witness; // violating connected subset when !ok
};

// Checks that every connected induced subgraph either uses >= p colors or
// has a color occurring exactly once. Enumerates all connected subsets, so
// g.n() must stay within the guard. The default implementation scans the
// subset range with OpenMP; the _serial variant is the reference.
CenteredCheck verify_centered(const Graph& g, const std::vector<int>& colors, int p,
                              int guard_n = kDefaultCenteredGuard);
CenteredCheck verify_centered_serial(const Graph& g, const std::vector<int>& colors, int p,
                                     int guard_n = kDefaultCenteredGuard);

struct RootedForest {
    std::vector<int> vertices;              // global ids, increasing
    std::vector<int> parent;                // per vertex of `vertices`, global id or -1
    std::vector<int> roots;                 // global ids
    std::vector<std::vector<int>> children; // indexed like `vertices`

    std::vector<int> preorder() const;      // global ids
    bool is_ancestor(int a, int d) const;   // global ids
};

// Rooted forest on the vertices colored from `colorset` whose closure
// contains every edge of the induced subgraph and whose pre-order is the
// restriction of the position order: the minimum vertex of each component
// roots it (its color must be unique in the component) and the rest recurse.
RootedForest cover_forest(const IntervalFamily& f, const CenteredColoring& c,
                          const std::vector<int>& colorset);

// "v left right" lines on the doubled half-integer grid.
std::string serialize(const IntervalFamily& f);

} // namespace lrw
