#include "lrw/activity.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace lrw {

namespace {

Bitset suffix_neighborhood(const Graph& pos, int v, int t) {
    // N(v) restricted to positions > t
    Bitset s = pos.neighbors(v);
    for (int p = s.find_first(); p >= 0 && p <= t; p = s.find_next(p)) s.reset(p);
    return s;
}

} // namespace

ActivityData analyze(const OrderedGraph& og) {
    ActivityData ad;
    ad.og = og;
    ad.pos = og.permuted();
    const int n = ad.n();
    if (n == 0) throw InputError("analyze needs a nonempty graph");

    ad.tau.assign(n, -1);
    ad.bases.assign(n, {});
    ad.f0.assign(n, {});
    ad.active.assign(n, 0);
    ad.r = 0;

    // Candidates for B_t are B_{t-1} plus t itself: once a position drops
    // out of the basis it never re-enters (suffix neighborhoods only lose
    // columns). The drop point of v is tau(v).
    std::vector<int> candidates;
    Bitset prefix(n);
    for (int t = 0; t < n; ++t) {
        candidates.push_back(t);
        Gf2Eliminator elim;
        std::vector<int> kept;
        int active_drops = 0;
        for (int v : candidates) {
            std::vector<int> expr;
            if (elim.insert(suffix_neighborhood(ad.pos, v, t), v, &expr)) {
                kept.push_back(v);
            } else {
                ad.tau[v] = t;
                ad.f0[v] = std::move(expr);
                if (v < t) ++active_drops;
                if (!ad.f0[v].empty() && ad.f0[v].back() >= v)
                    throw InvariantError("delegation set of position " + std::to_string(v) +
                                         " reaches forward");
            }
        }
        if (active_drops > 1)
            throw InvariantError("two active positions share tau = " + std::to_string(t));
        ad.bases[t] = kept;
        candidates = std::move(kept);

        // basis size must equal the prefix cut-rank
        prefix.set(t);
        if (t < n - 1) {
            const int rank_t = cut_rank(ad.pos, prefix);
            if ((int)ad.bases[t].size() != rank_t)
                throw InvariantError("basis size " + std::to_string(ad.bases[t].size()) +
                                     " differs from prefix cut-rank " + std::to_string(rank_t) +
                                     " at position " + std::to_string(t));
            ad.r = std::max(ad.r, rank_t);
        }
    }
    if (!ad.bases[n - 1].empty())
        throw InvariantError("basis at the last position is nonempty");

    for (int v = 0; v < n; ++v) ad.active[v] = ad.tau[v] > v;
    return ad;
}

std::vector<int> f_step(const ActivityData& ad, const std::vector<int>& m) {
    if (m.empty()) return {};
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0 || m[i] >= ad.n()) throw ContractError("set member out of range");
        if (i && m[i] <= m[i - 1]) throw ContractError("set members must be increasing");
    }
    if (m.size() > 1) {
        // must be an active set: max M < tau(M)
        int tau_m = ad.tau[m[0]];
        for (int v : m) tau_m = std::min(tau_m, ad.tau[v]);
        if (m.back() >= tau_m) throw ContractError("set is neither a singleton nor active");
    }

    int min_v = m[0];
    bool tie = false;
    for (int v : m)
        if (ad.tau[v] < ad.tau[min_v])
            min_v = v;
    for (int v : m)
        if (v != min_v && ad.tau[v] == ad.tau[min_v]) tie = true;
    if (tie) throw InvariantError("tau minimizer is not unique");

    // M xor {min_v} xor F0(min_v); min_v is removed, F0 is disjoint from the rest
    std::vector<int> rest;
    for (int v : m)
        if (v != min_v) rest.push_back(v);
    std::vector<int> out;
    std::set_symmetric_difference(rest.begin(), rest.end(), ad.f0[min_v].begin(),
                                  ad.f0[min_v].end(), std::back_inserter(out));
    return out;
}

FTree build_f_tree(const ActivityData& ad) {
    FTree ft;
    ft.nodes.push_back({{}, 0, -1, -1, 1});
    std::map<std::vector<int>, int> id;
    id[{}] = 0;

    auto intern = [&](const std::vector<int>& m) {
        auto it = id.find(m);
        if (it != id.end()) return std::pair<int, bool>{it->second, false};
        FTree::Node node;
        node.members = m;
        node.max = m.back();
        node.tau = ad.tau[m[0]];
        for (int v : m) node.tau = std::min(node.tau, ad.tau[v]);
        ft.nodes.push_back(std::move(node));
        int nid = (int)ft.nodes.size() - 1;
        id[m] = nid;
        return std::pair<int, bool>{nid, true};
    };

    ft.singleton.assign(ad.n(), -1);
    std::vector<int> work;
    for (int v = 0; v < ad.n(); ++v) {
        auto [nid, fresh] = intern({v});
        ft.singleton[v] = nid;
        if (fresh) work.push_back(nid);
    }
    while (!work.empty()) {
        int nid = work.back();
        work.pop_back();
        std::vector<int> fm = f_step(ad, ft.nodes[nid].members);
        int pid;
        if (fm.empty()) {
            pid = 0;
        } else {
            auto [p, fresh] = intern(fm);
            pid = p;
            if (fresh) work.push_back(p);
            if (ft.nodes[p].tau <= ft.nodes[nid].tau)
                throw InvariantError("tau does not increase along F at node {" +
                                     std::to_string(ft.nodes[nid].members[0]) + ",...}");
            if (ft.nodes[p].max > ft.nodes[nid].max)
                throw InvariantError("max grows along F");
        }
        ft.nodes[nid].parent = pid;
    }

    // tau strictly increases toward leaves, so the parent relation is acyclic
    std::function<int(int)> depth_of = [&](int id) -> int {
        if (id == 0) return 1;
        if (ft.nodes[id].depth) return ft.nodes[id].depth;
        return ft.nodes[id].depth = depth_of(ft.nodes[id].parent) + 1;
    };
    for (size_t i = 1; i < ft.nodes.size(); ++i) depth_of((int)i);
    const int max_depth = ft.height();
    if (max_depth > ad.r + 2)
        throw InvariantError("F-tree height " + std::to_string(max_depth) + " exceeds r+2 = " +
                             std::to_string(ad.r + 2));
    return ft;
}

int FTree::iterate(int v, int k) const {
    int id = singleton[v];
    for (int i = 0; i < k && id != 0; ++i) id = nodes[id].parent;
    return id;
}

int FTree::meet(int a, int b) const {
    while (a != b) {
        if (nodes[a].depth >= nodes[b].depth)
            a = nodes[a].parent;
        else
            b = nodes[b].parent;
    }
    return a;
}

int FTree::height() const {
    int h = 0;
    for (const Node& nd : nodes) h = std::max(h, nd.depth);
    return h;
}

int xi(const ActivityData& ad, int u, int v) {
    if (u == v) throw InputError("xi needs distinct positions");
    std::vector<int> m{u};
    for (int k = 0;; ++k) {
        if (m.empty()) return k;
        // v in I_M = [max M, tau(M)]
        int tau_m = ad.tau[m[0]];
        for (int x : m) tau_m = std::min(tau_m, ad.tau[x]);
        if (m.back() <= v && v <= tau_m) return k;
        if (k > ad.r + 1)
            throw InvariantError("delegation chain from " + std::to_string(u) +
                                 " does not vanish within r+1 steps");
        m = f_step(ad, m);
    }
}

Bitset xor_neighborhood(const ActivityData& ad, const std::vector<int>& m) {
    Bitset acc(ad.n());
    for (int x : m) acc ^= ad.pos.neighbors(x);
    return acc;
}

bool reconstruct_adjacency(const ActivityData& ad, int u, int v) {
    if (u == v) throw InputError("reconstruct_adjacency needs distinct positions");
    const int a = std::min(u, v), b = std::max(u, v);
    std::vector<int> m{a};
    for (int k = xi(ad, a, b); k > 0; --k) m = f_step(ad, m);
    return xor_neighborhood(ad, m).test(b);
}

} // namespace lrw
