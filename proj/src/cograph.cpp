#include "lrw/cograph.hpp"

#include <algorithm>
#include <map>

namespace lrw {

namespace {

// (Class, NC) key: gamma, the class sets, and NC.
using ClassKey = std::tuple<int, std::vector<std::vector<int>>, std::vector<int>>;

ClassKey key_of(const VertexLabel& lab) {
    return {lab.gamma, lab.class_sets, lab.nc};
}

} // namespace

CographPartition partition(const ActivityData& ad, const ColoredOrder& labels) {
    if (labels.n() != ad.n()) throw ContractError("labels do not match the analyzed order");
    if (labels.r != ad.r) throw ContractError("label width differs from order width");
    const FTree ft = build_f_tree(ad);

    std::map<ClassKey, std::vector<int>> groups;
    for (int v = 0; v < ad.n(); ++v) groups[key_of(labels.labels[v])].push_back(v);

    CographPartition part;
    part.r = ad.r;
    std::vector<std::vector<int>> classes;
    for (auto& [key, members] : groups) classes.push_back(members);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    for (const std::vector<int>& members : classes) {
        CographClass cls;
        cls.vertices = members;
        if (members.size() == 1) {
            cls.cotree.nodes.push_back({Cotree::Kind::Leaf, members[0], {}});
            cls.cotree.root = 0;
            cls.height = 1;
            part.classes.push_back(std::move(cls));
            part.max_height = std::max(part.max_height, 1);
            continue;
        }

        // Meets of class members in the F-tree become the inner cotree
        // nodes; unary chains between them contribute nothing.
        std::map<int, int> verdict; // f-node -> 0 union, 1 join
        std::map<int, std::pair<int, int>> witness;
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                const int u = members[i], v = members[j];
                const int node = ft.meet(ft.singleton[u], ft.singleton[v]);
                if (node == ft.singleton[u] || node == ft.singleton[v])
                    throw InvariantError("class member is an ancestor of another");
                const int adj = ad.pos.has_edge(u, v) ? 1 : 0;
                auto [it, fresh] = verdict.emplace(node, adj);
                if (fresh) {
                    witness[node] = {u, v};
                } else if (it->second != adj) {
                    auto [wu, wv] = witness[node];
                    throw InvariantError(
                        "pairs (" + std::to_string(wu) + "," + std::to_string(wv) + ") and (" +
                        std::to_string(u) + "," + std::to_string(v) +
                        ") meet at the same node with different adjacency");
                }
            }

        // Chain of meet nodes above each leaf, nearest first. The member's
        // own singleton is never a meet (a same-class member inside another
        // member's delegation chain would force equal gamma colors on
        // intersecting intervals).
        auto meet_path = [&](int v) {
            std::vector<int> path;
            for (int id = ft.singleton[v]; id != ft.root(); id = ft.parent(id))
                if (verdict.count(ft.parent(id))) path.push_back(ft.parent(id));
            return path;
        };

        Cotree& tree = cls.cotree;
        std::map<int, int> cotree_id; // f-node -> cotree node
        for (auto& [fnode, adj] : verdict) {
            tree.nodes.push_back({adj ? Cotree::Kind::Join : Cotree::Kind::Union, -1, {}});
            cotree_id[fnode] = (int)tree.nodes.size() - 1;
        }
        int root_fnode = -1;
        for (auto& [fnode, id] : cotree_id) {
            // parent meet = nearest meet strictly above fnode
            int pid = -1;
            for (int a = ft.parent(fnode); ; a = ft.parent(a)) {
                if (a != fnode && cotree_id.count(a)) {
                    pid = cotree_id[a];
                    break;
                }
                if (a == ft.root()) break;
            }
            if (pid < 0)
                root_fnode = fnode;
            else
                tree.nodes[pid].children.push_back(id);
        }
        if (root_fnode < 0) throw InvariantError("meet nodes without a common root");
        for (int v : members) {
            const std::vector<int> path = meet_path(v);
            if (path.empty()) throw InvariantError("class member never meets the others");
            tree.nodes.push_back({Cotree::Kind::Leaf, v, {}});
            tree.nodes[cotree_id[path.front()]].children.push_back((int)tree.nodes.size() - 1);
        }
        tree.root = cotree_id[root_fnode];
        cls.height = tree.height();
        if (cls.height > ad.r + 2)
            throw InvariantError("cotree height " + std::to_string(cls.height) +
                                 " exceeds r+2 = " + std::to_string(ad.r + 2));
        part.max_height = std::max(part.max_height, cls.height);
        part.classes.push_back(std::move(cls));
    }
    return part;
}

ChiBoundReport chi_bound_report(const Graph& g, const CographPartition& p, int omega_guard,
                                int chi_guard) {
    ChiBoundReport rep;
    rep.class_count = (int)p.classes.size();
    rep.f_r = alphabet_bounds(p.r).f;
    rep.class_count_ok = BigInt(rep.class_count) <= rep.f_r;
    rep.max_cotree_height = p.max_height;
    rep.height_ok = p.max_height <= p.r + 2;
    try {
        rep.omega = clique_number(g, omega_guard);
    } catch (const CapacityError&) {
        rep.partial = true;
    }
    try {
        rep.chi = chromatic_number(g, chi_guard);
    } catch (const CapacityError&) {
        rep.partial = true;
    }
    if (rep.omega) {
        rep.chi_bound = rep.f_r * *rep.omega;
        if (rep.chi) rep.chi_bound_ok = BigInt(*rep.chi) <= *rep.chi_bound;
    }
    for (const CographClass& cls : p.classes) {
        ChiBoundReport::PerClass pc;
        pc.size = (int)cls.vertices.size();
        pc.height = cls.height;
        // positions are vertex ids of the position-space graph the classes
        // live in; g must be that graph
        try {
            Induced sub = induced_subgraph(g, cls.vertices);
            pc.perfect = chromatic_number(sub.graph, chi_guard) == clique_number(sub.graph, omega_guard);
        } catch (const CapacityError&) {
            rep.partial = true;
        }
        rep.per_class.push_back(pc);
    }
    return rep;
}

} // namespace lrw
