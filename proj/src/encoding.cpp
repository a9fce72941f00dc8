#include "lrw/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace lrw {

std::vector<int> gamma_coloring(const ActivityData& ad) {
    const int n = ad.n();
    std::vector<int> gamma(n, 0);
    std::vector<std::pair<int, int>> open; // (tau, color) of open active intervals
    for (int v = 0; v < n; ++v) {
        std::erase_if(open, [v](auto& e) { return e.first < v; });
        if (!ad.active[v]) {
            gamma[v] = ad.r + 2;
            continue;
        }
        int c = 1;
        for (bool moved = true; moved;) {
            moved = false;
            for (auto& [t, col] : open)
                if (col == c) {
                    ++c;
                    moved = true;
                }
        }
        if (c > ad.r + 1)
            throw InvariantError("gamma palette exhausted at position " + std::to_string(v));
        gamma[v] = c;
        open.emplace_back(ad.tau[v], c);
    }
    return gamma;
}

ColoredOrder encode(const OrderedGraph& og) {
    ActivityData ad = analyze(og);
    FTree ft = build_f_tree(ad);
    return encode(ad, ft);
}

ColoredOrder encode(const ActivityData& ad, const FTree& ft) {
    const int n = ad.n();
    const std::vector<int> gamma = gamma_coloring(ad);
    ColoredOrder co;
    co.r = ad.r;
    co.labels.resize(n);
    for (int v = 0; v < n; ++v) {
        VertexLabel& lab = co.labels[v];
        lab.gamma = gamma[v];
        lab.class_sets.resize(ad.r);
        for (int i = 1; i <= ad.r; ++i) {
            std::vector<int> colors;
            for (int x : ft.members(ft.iterate(v, i))) colors.push_back(gamma[x]);
            std::sort(colors.begin(), colors.end());
            if (!colors.empty() && colors.back() == ad.r + 2)
                throw InvariantError("delegation set contains an inactive position");
            if ((int)colors.size() > ad.r + 1 - i)
                throw InvariantError("delegation set at level " + std::to_string(i) +
                                     " has more than r+1-i members");
            lab.class_sets[i - 1] = std::move(colors);
        }
        for (int u = 0; u <= v; ++u) {
            if (!ad.in_interval(u, v)) continue;
            lab.ic.push_back(gamma[u]);
            if (ad.pos.has_edge(u, v)) lab.nc.push_back(gamma[u]);
        }
        std::sort(lab.ic.begin(), lab.ic.end());
        std::sort(lab.nc.begin(), lab.nc.end());
        if (std::adjacent_find(lab.ic.begin(), lab.ic.end()) != lab.ic.end())
            throw InvariantError("intervals covering a common position repeat a color");
    }
    return co;
}

namespace {

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

void validate_labels(const ColoredOrder& co) {
    for (int v = 0; v < co.n(); ++v) {
        const VertexLabel& lab = co.labels[v];
        if (lab.gamma < 1 || lab.gamma > co.r + 2)
            throw FormatError("gamma out of palette at position " + std::to_string(v));
        if ((int)lab.class_sets.size() != co.r)
            throw FormatError("label needs exactly r class sets");
        if (!contains(lab.ic, lab.gamma))
            throw FormatError("own color missing from IC at position " + std::to_string(v));
        if (!std::includes(lab.ic.begin(), lab.ic.end(), lab.nc.begin(), lab.nc.end()))
            throw FormatError("NC is not a subset of IC at position " + std::to_string(v));
        for (const auto& cs : lab.class_sets)
            for (int c : cs)
                if (c < 1 || c > co.r + 2) throw FormatError("class color out of palette");
    }
}

} // namespace

Graph decode(const ColoredOrder& co) {
    validate_labels(co);
    const int n = co.n();
    const int r = co.r;
    Graph g(n);
    if (n == 0) return g;

    // prev[c][p]: maximum position <= p with gamma = c, or -1
    std::vector<std::vector<int>> prev(r + 3, std::vector<int>(n, -1));
    for (int c = 1; c <= r + 2; ++c)
        for (int p = 0; p < n; ++p) {
            prev[c][p] = (co.labels[p].gamma == c) ? p : (p ? prev[c][p - 1] : -1);
        }

    // v lies in the interval of the maximal position <= v colored a, and of
    // no other position colored a; so "x owns color a at v" means x is that
    // maximal position and a appears in IC(v).
    auto in_interval_of = [&](int x, int a, int v) {
        return contains(co.labels[v].ic, a) && prev[a][v] == x;
    };

    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            bool edge = false;
            for (int k = 0; k <= r; ++k) {
                const std::vector<int>* colors;
                std::vector<int> own{co.labels[u].gamma};
                if (k == 0) {
                    colors = &own;
                } else {
                    colors = &co.labels[u].class_sets[k - 1];
                    if (colors->empty()) break; // F^k(u) vanished: no edge
                }
                bool covers_v = true;
                for (int a : *colors) {
                    const int x = (k == 0) ? u : (u == 0 ? -1 : prev[a][u - 1]);
                    if (x < 0)
                        throw FormatError("no position before " + std::to_string(u) +
                                          " carries class color " + std::to_string(a));
                    if (!in_interval_of(x, a, v)) {
                        covers_v = false;
                        break;
                    }
                }
                if (covers_v) {
                    int parity = 0;
                    for (int a : *colors)
                        if (contains(co.labels[v].nc, a)) parity ^= 1;
                    edge = parity != 0;
                    break;
                }
            }
            if (edge) g.add_edge(u, v);
        }
    }
    return g;
}

AlphabetBounds alphabet_bounds(int r) {
    if (r < 0) throw InputError("negative width");
    auto factorial = [](int k) {
        BigInt f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    auto choose2 = [](int k) { return (long long)k * (k - 1) / 2; };
    AlphabetBounds b;
    b.f = 3 * factorial(r + 2) * (BigInt(1) << choose2(r + 1));
    BigInt pow3 = 1;
    for (int i = 0; i < r + 2; ++i) pow3 *= 3;
    b.f_prime = factorial(r + 2) * (BigInt(1) << choose2(r)) * pow3;
    b.g = b.f_prime;
    double log2fact = 0;
    for (int i = 2; i <= r + 2; ++i) log2fact += std::log2((double)i);
    b.bits_per_vertex = log2fact + (double)choose2(r) + (r + 2) * std::log2(3.0);
    return b;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<int> split_ints(const std::string& s, char sep) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw FormatError("empty token in color set");
        size_t used = 0;
        int val;
        try {
            val = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw FormatError("bad integer '" + tok + "'");
        }
        if (used != tok.size()) throw FormatError("bad integer '" + tok + "'");
        out.push_back(val);
        pos = next + 1;
    }
    return out;
}

} // namespace

std::string serialize(const ColoredOrder& co) {
    std::string s = std::to_string(co.r) + " " + std::to_string(co.n()) + "\n";
    for (const VertexLabel& lab : co.labels) {
        s += std::to_string(lab.gamma);
        s += " | ";
        for (int i = 0; i < co.r; ++i) {
            if (i) s += ';';
            s += join(lab.class_sets[i]);
        }
        s += " | ";
        s += join(lab.nc);
        s += " | ";
        s += join(lab.ic);
        s += '\n';
    }
    return s;
}

ColoredOrder parse_colored_order(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing header");
    std::istringstream head(line);
    int r, n;
    if (!(head >> r >> n) || r < 0 || n < 0) throw FormatError("bad header");
    ColoredOrder co;
    co.r = r;
    co.labels.resize(n);
    for (int v = 0; v < n; ++v) {
        if (!std::getline(in, line)) throw FormatError("missing label line");
        std::vector<std::string> fields;
        size_t pos = 0;
        while (true) {
            size_t next = line.find(" | ", pos);
            if (next == std::string::npos) {
                fields.push_back(line.substr(pos));
                break;
            }
            fields.push_back(line.substr(pos, next - pos));
            pos = next + 3;
        }
        if (fields.size() != 4) throw FormatError("label line needs 4 fields");
        VertexLabel& lab = co.labels[v];
        lab.gamma = split_ints(fields[0], ',').at(0);
        lab.class_sets.assign(r, {});
        if (r > 0) {
            std::vector<std::string> sets;
            size_t p = 0;
            while (true) {
                size_t next = fields[1].find(';', p);
                if (next == std::string::npos) {
                    sets.push_back(fields[1].substr(p));
                    break;
                }
                sets.push_back(fields[1].substr(p, next - p));
                p = next + 1;
            }
            if ((int)sets.size() != r) throw FormatError("label line needs r class sets");
            for (int i = 0; i < r; ++i)
                if (!sets[i].empty()) lab.class_sets[i] = split_ints(sets[i], ',');
        } else if (!fields[1].empty()) {
            throw FormatError("class field must be empty when r = 0");
        }
        if (!fields[2].empty()) lab.nc = split_ints(fields[2], ',');
        if (!fields[3].empty()) lab.ic = split_ints(fields[3], ',');
    }
    validate_labels(co);
    return co;
}

std::vector<int> ConnectionModel::leaves() const {
    std::vector<int> out;
    std::function<void(int)> walk = [&](int a) {
        if (nodes[a].children.empty()) out.push_back(a);
        for (int c : nodes[a].children) walk(c);
    };
    walk(root);
    return out;
}

void ConnectionModel::validate() const {
    if (nodes.empty()) throw InputError("empty model");
    std::vector<int> depth(nodes.size(), 0);
    std::function<void(int, int)> walk = [&](int a, int d) {
        if (a < 0 || a >= (int)nodes.size()) throw InputError("bad child index");
        depth[a] = d;
        if (max_depth > 0 && d > max_depth) throw InputError("model deeper than declared bound");
        if (nodes[a].children.empty()) {
            if (nodes[a].label < 0 || nodes[a].label >= num_labels)
                throw InputError("leaf without a valid label");
        } else {
            for (auto [x, y] : nodes[a].relation)
                if (x < 0 || x >= num_labels || y < 0 || y >= num_labels)
                    throw InputError("relation pair outside the label set");
            for (auto [x, y] : nodes[a].f)
                if (x < 0 || x >= num_labels || y < 0 || y >= num_labels)
                    throw InputError("f pair outside the label set");
            for (int c : nodes[a].children) walk(c, d + 1);
        }
    };
    walk(root, 1);
}

namespace {

// gca of two model nodes via parent walks
int model_gca(const ConnectionModel& m, int a, int b) {
    std::vector<char> seen(m.nodes.size(), 0);
    for (int x = a; x >= 0; x = m.nodes[x].parent) seen[x] = 1;
    for (int y = b; y >= 0; y = m.nodes[y].parent)
        if (seen[y]) return y;
    throw InputError("model nodes without a common ancestor");
}

bool relation_has(const std::vector<std::pair<int, int>>& rel, int a, int b) {
    return std::find(rel.begin(), rel.end(), std::make_pair(a, b)) != rel.end();
}

} // namespace

Digraph eval_connection_model_digraph(const ConnectionModel& m) {
    m.validate();
    const std::vector<int> leaves = m.leaves();
    Digraph g((int)leaves.size());
    for (size_t i = 0; i < leaves.size(); ++i)
        for (size_t j = 0; j < leaves.size(); ++j) {
            if (i == j) continue;
            const int w = model_gca(m, leaves[i], leaves[j]);
            if (relation_has(m.nodes[w].relation, m.nodes[leaves[i]].label,
                             m.nodes[leaves[j]].label))
                g.add_arc((int)i, (int)j);
        }
    return g;
}

Graph eval_connection_model(const ConnectionModel& m) {
    m.validate();
    for (const auto& nd : m.nodes)
        for (auto [a, b] : nd.relation)
            if (!relation_has(nd.relation, b, a))
                throw InputError("relation is not symmetric; undirected output undeclared");
    const Digraph d = eval_connection_model_digraph(m);
    Graph g(d.n());
    for (int u = 0; u < d.n(); ++u)
        for (int v = d.out(u).find_next(u); v >= 0; v = d.out(u).find_next(v))
            g.add_edge(u, v);
    return g;
}

Graph eval_embedded_model(const ConnectionModel& m) {
    m.validate();
    const std::vector<int> leaves = m.leaves(); // plane order
    Graph g((int)leaves.size());
    for (size_t i = 0; i < leaves.size(); ++i)
        for (size_t j = i + 1; j < leaves.size(); ++j) {
            const int w = model_gca(m, leaves[i], leaves[j]);
            // leaf i is left of leaf j at w by plane order
            if (relation_has(m.nodes[w].f, m.nodes[leaves[i]].label, m.nodes[leaves[j]].label))
                g.add_edge((int)i, (int)j);
        }
    return g;
}

} // namespace lrw
