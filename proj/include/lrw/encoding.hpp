#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrw/activity.hpp"
#include "lrw/graph.hpp"

namespace lrw {

using BigInt = boost::multiprecision::cpp_int;

// Per-position label over the alphabet of a width-r encoding. Colors live
// in [1, r+2]; color r+2 marks inactive positions. class_sets[i-1] holds
// the colors of the i-th delegation set F^i(v) for i = 1..r; together with
// gamma it forms Class(v). All sets are sorted.
struct VertexLabel {
    int gamma = 0;
    std::vector<std::vector<int>> class_sets;
    std::vector<int> nc; // colors of neighbors whose interval covers v
    std::vector<int> ic; // colors of all positions whose interval covers v

    bool operator==(const VertexLabel&) const = default;
    auto operator<=>(const VertexLabel&) const = default;
};

struct ColoredOrder {
    int r = 0;
    std::vector<VertexLabel> labels; // one per position, in order

    int n() const { return (int)labels.size(); }
};

// Proper coloring of the activity interval graph with palette [1, r+2]:
// inactive positions get r+2, active ones are first-fit colored by left
// endpoint within [1, r+1]. InvariantError if the palette runs out.
std::vector<int> gamma_coloring(const ActivityData& ad);

ColoredOrder encode(const OrderedGraph& og);
ColoredOrder encode(const ActivityData& ad, const FTree& ft);

// Rebuilds the graph (in position space) from the labels alone. Throws
// FormatError when the labels cannot have come from a valid encoding.
Graph decode(const ColoredOrder& co);

struct AlphabetBounds {
    BigInt f;           // bound on distinct (Class, NC) pairs
    BigInt f_prime;     // bound on distinct (Class, NC, IC) triples
    BigInt g;           // cograph-partition color bound; equals f_prime
    double bits_per_vertex = 0; // log2(f_prime)
};

AlphabetBounds alphabet_bounds(int r);

// Line format: header "r n", then per position
//   gamma | class_1;...;class_r | nc | ic
// with each color set comma-joined. Round-trips bit-exactly.
std::string serialize(const ColoredOrder& co);
ColoredOrder parse_colored_order(const std::string& text);

// Bounded-depth labeled tree defining a graph on its leaves: two leaves are
// adjacent according to the relation (or the plane left-right function) at
// their greatest common ancestor.
struct ConnectionModel {
    struct Node {
        int parent = -1;
        std::vector<int> children; // plane order where it matters
        int label = -1;            // leaves: color in [0, num_labels)
        std::vector<std::pair<int, int>> relation; // internal: C(v)
        std::vector<std::pair<int, int>> f;        // internal: pairs with f_v = 1
    };
    std::vector<Node> nodes;
    int root = 0;
    int num_labels = 0;
    int max_depth = 0; // declared bound; 0 = unchecked

    std::vector<int> leaves() const; // DFS order; defines leaf indices
    void validate() const;           // InputError when malformed
};

Digraph eval_connection_model_digraph(const ConnectionModel& m);

// Requires every relation to be symmetric.
Graph eval_connection_model(const ConnectionModel& m);

// Plane variant: leaves u < v (in plane order) are adjacent iff
// f_w(label(u), label(v)) = 1 at their greatest common ancestor w.
Graph eval_embedded_model(const ConnectionModel& m);

} // namespace lrw
