#pragma once

#include <optional>
#include <vector>

#include "lrw/bits.hpp"
#include "lrw/graph.hpp"

namespace lrw {

// Rectangular 0-1 matrix over GF(2); all rows share the column count.
struct BitMatrix {
    int cols = 0;
    std::vector<Bitset> rows;

    BitMatrix() = default;
    explicit BitMatrix(int cols) : cols(cols) {}

    void push_row(Bitset r) {
        if (r.size() != cols) throw InputError("row width differs from column count");
        rows.push_back(std::move(r));
    }
};

// Incremental GF(2) eliminator that tracks, for every reduced row, which
// inserted vectors combine to it. Tags identify inserted vectors (vertex
// ids in the activity sweep, row indices elsewhere).
class Gf2Eliminator {
public:
    // Inserts a vector. Returns true when the vector extends the span.
    // When it does not, *expression (if given) receives the sorted tags of
    // previously kept vectors whose XOR equals it.
    bool insert(const Bitset& v, int tag, std::vector<int>* expression = nullptr);

    // Expresses target in the current span, or nullopt if outside it.
    std::optional<std::vector<int>> express(const Bitset& target) const;

    int rank() const { return (int)rows_.size(); }
    const std::vector<int>& kept_tags() const { return kept_; }

private:
    struct Row {
        Bitset vec;
        int pivot;
        std::vector<int> combo; // tags whose original vectors XOR to vec
    };
    std::vector<Row> rows_;
    std::vector<int> kept_;
};

int rank(const BitMatrix& m);

// GF(2) rank of the bipartite adjacency matrix between x and its complement.
// Zero when x is empty or the full vertex set.
int cut_rank(const Graph& g, const Bitset& x);
int cut_rank(const Graph& g, const std::vector<int>& x);

// The unique index subset of independent basis rows whose XOR equals the
// target, or nullopt when the target lies outside the span.
// Throws ContractError when the rows are dependent.
std::optional<std::vector<int>> solve_in_span(const BitMatrix& basis_rows, const Bitset& target);

// Scans vectors in the given order; index i is kept iff vector i is outside
// the span of the kept earlier vectors. Zero vectors are never kept.
std::vector<int> greedy_basis(const std::vector<Bitset>& vectors);

} // namespace lrw
