#include "lrw/gf2.hpp"

#include <algorithm>

namespace lrw {

namespace {

// Symmetric difference of two sorted tag lists.
std::vector<int> symdiff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

} // namespace

bool Gf2Eliminator::insert(const Bitset& v, int tag, std::vector<int>* expression) {
    Bitset x = v;
    std::vector<int> combo{tag};
    for (const Row& r : rows_) {
        if (x.test(r.pivot)) {
            x ^= r.vec;
            combo = symdiff(combo, r.combo);
        }
    }
    if (x.none()) {
        if (expression) {
            std::vector<int> e;
            for (int t : combo)
                if (t != tag) e.push_back(t);
            *expression = std::move(e);
        }
        return false;
    }
    rows_.push_back({std::move(x), 0, std::move(combo)});
    rows_.back().pivot = rows_.back().vec.find_first();
    kept_.push_back(tag);
    return true;
}

std::optional<std::vector<int>> Gf2Eliminator::express(const Bitset& target) const {
    Bitset x = target;
    std::vector<int> combo;
    for (const Row& r : rows_) {
        if (x.test(r.pivot)) {
            x ^= r.vec;
            combo = symdiff(combo, r.combo);
        }
    }
    if (!x.none()) return std::nullopt;
    return combo;
}

int rank(const BitMatrix& m) {
    Gf2Eliminator e;
    for (size_t i = 0; i < m.rows.size(); ++i) e.insert(m.rows[i], (int)i);
    return e.rank();
}

int cut_rank(const Graph& g, const Bitset& x) {
    if (x.size() != g.n()) throw InputError("cut set width differs from graph order");
    Gf2Eliminator e;
    for (int v = x.find_first(); v >= 0; v = x.find_next(v))
        e.insert(g.neighbors(v).and_not(x), v);
    return e.rank();
}

int cut_rank(const Graph& g, const std::vector<int>& x) {
    Bitset b(g.n());
    for (int v : x) {
        if (v < 0 || v >= g.n()) throw InputError("cut set contains invalid vertex");
        b.set(v);
    }
    return cut_rank(g, b);
}

std::optional<std::vector<int>> solve_in_span(const BitMatrix& basis_rows, const Bitset& target) {
    if (target.size() != basis_rows.cols)
        throw InputError("target width differs from matrix column count");
    Gf2Eliminator e;
    for (size_t i = 0; i < basis_rows.rows.size(); ++i)
        if (!e.insert(basis_rows.rows[i], (int)i))
            throw ContractError("basis rows are linearly dependent");
    return e.express(target);
}

std::vector<int> greedy_basis(const std::vector<Bitset>& vectors) {
    Gf2Eliminator e;
    for (size_t i = 0; i < vectors.size(); ++i) e.insert(vectors[i], (int)i);
    return e.kept_tags();
}

} // namespace lrw
