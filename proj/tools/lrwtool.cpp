// Command-line front end: generate graphs, run the analysis pipeline, and
// emit machine-readable certificates.
//
// Exit codes: 0 all checks pass, 1 usage or malformed input, 2 a
// certificate failed, 3 an exactness guard was exceeded.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrw/cograph.hpp"
#include "lrw/encoding.hpp"
#include "lrw/intervals.hpp"
#include "lrw/io.hpp"
#include "lrw/stability.hpp"
#include "lrw/width.hpp"

using json = nlohmann::ordered_json;
using namespace lrw;

namespace {

constexpr const char* kSchema = "lrw-report/1";

std::string big_str(const BigInt& b) { return b.str(); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Graph gen_family(const std::string& family, const std::vector<std::string>& params,
                 uint64_t seed);

// P4, K3, C5, E2 shorthands for ramsey/lexpower bases
std::optional<Graph> shorthand_graph(const std::string& name) {
    if (name.size() < 2) return std::nullopt;
    const char kind = name[0];
    int k;
    try {
        size_t used = 0;
        k = std::stoi(name.substr(1), &used);
        if (used + 1 != name.size()) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    switch (kind) {
        case 'P': return path_graph(k);
        case 'K': return complete_graph(k);
        case 'C': return cycle_graph(k);
        case 'E': return empty_graph(k);
        default: return std::nullopt;
    }
}

Graph gen_family(const std::string& family, const std::vector<std::string>& params,
                 uint64_t seed) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw InputError("family '" + family + "' needs " + std::to_string(k) +
                             " parameter(s)");
    };
    auto num = [&](size_t i) {
        try {
            return std::stoi(params.at(i));
        } catch (const std::exception&) {
            throw InputError("bad numeric parameter '" + params.at(i) + "'");
        }
    };
    if (family == "halfgraph") {
        want(1);
        return half_graph(num(0));
    }
    if (family == "lozin" || family == "lozin-tilde") {
        want(2);
        return lozin_h(num(0), num(1), family == "lozin-tilde");
    }
    if (family == "lexpower") {
        want(2);
        auto base = shorthand_graph(params[0]);
        if (!base) throw InputError("lexpower base must look like P4, K3, C5 or E2");
        return lex_power(*base, num(1));
    }
    if (family == "path") {
        want(1);
        return path_graph(num(0));
    }
    if (family == "clique") {
        want(1);
        return complete_graph(num(0));
    }
    if (family == "empty") {
        want(1);
        return empty_graph(num(0));
    }
    if (family == "random") {
        want(2);
        const int n = num(0);
        const long long m = num(1);
        if (n < 0 || m < 0 || m > (long long)n * (n - 1) / 2)
            throw InputError("random graph needs 0 <= m <= n(n-1)/2");
        std::mt19937_64 rng(seed);
        Graph g(n);
        long long placed = 0;
        while (placed < m) {
            const int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v || g.has_edge(u, v)) continue;
            g.add_edge(u, v);
            ++placed;
        }
        return g;
    }
    throw InputError("unknown family '" + family + "'");
}

Graph load_graph(const std::string& spec) {
    if (auto g = shorthand_graph(spec)) return *g;
    return read_edge_list(spec);
}

struct PipelineResult {
    OrderedGraph og;
    std::string order_source;
    ActivityData ad;
    FTree ft;
    ColoredOrder labels;
};

PipelineResult run_pipeline(const Graph& g, const std::string& order_file, int guard_n) {
    PipelineResult out;
    if (!order_file.empty()) {
        out.og = OrderedGraph::with_order(g, read_order(order_file, g.n()));
        out.order_source = "file";
    } else {
        LinearWidthResult res = linear_rankwidth_exact(g, guard_n);
        out.og = OrderedGraph::with_order(g, res.order);
        out.order_source = "dp";
    }
    out.ad = analyze(out.og);
    out.ft = build_f_tree(out.ad);
    out.labels = encode(out.ad, out.ft);
    return out;
}

void write_or_print(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out);
        if (!os) throw InputError("cannot write " + out);
        os << text;
    }
}

int cmd_analyze(const std::string& input, const std::string& order_file, int guard_n,
                bool timing) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = read_edge_list(input);
    if (g.n() == 0) throw InputError("analyze needs a nonempty graph");
    PipelineResult p = run_pipeline(g, order_file, guard_n);
    const int r = p.ad.r;

    json rep;
    rep["schema"] = kSchema;
    rep["command"] = "analyze";
    rep["input"] = {{"path", input}, {"n", g.n()}, {"m", g.edge_count()}};
    rep["order"] = {{"source", p.order_source}, {"width", r}, {"order", p.og.order}};

    bool all_ok = true;
    json witness = json::object();

    // F-tree and basis certificates
    int max_basis = 0;
    for (const auto& b : p.ad.bases) max_basis = std::max(max_basis, (int)b.size());
    bool f_ok = p.ft.height() <= r + 2;
    for (size_t id = 0; id < p.ft.nodes.size() && f_ok; ++id) {
        int cur = (int)id;
        for (int k = 0; k <= r; ++k) cur = p.ft.parent(cur); // r+1 delegation steps
        f_ok = p.ft.members(cur).empty();
    }
    const bool basis_ok = max_basis <= r;
    rep["activity"] = {{"f_tree_height", p.ft.height()},
                       {"f_tree_vanishes", f_ok},
                       {"max_basis_size", max_basis},
                       {"basis_ok", basis_ok}};
    all_ok = all_ok && f_ok && basis_ok;

    // alphabet certificates
    {
        std::set<std::string> class_nc, triples;
        for (int v = 0; v < p.labels.n(); ++v) {
            const VertexLabel& lab = p.labels.labels[v];
            const std::string cls = class_key(lab) + "#" + nc_key(lab);
            class_nc.insert(cls);
            std::string ic;
            for (int c : lab.ic) ic += std::to_string(c) + ",";
            triples.insert(cls + "#" + ic);
        }
        const AlphabetBounds bounds = alphabet_bounds(r);
        const bool nc_ok = BigInt((long long)class_nc.size()) <= bounds.f;
        const bool tri_ok = BigInt((long long)triples.size()) <= bounds.f_prime;
        rep["alphabet"] = {{"distinct_class_nc", class_nc.size()},
                           {"f_r", big_str(bounds.f)},
                           {"class_nc_ok", nc_ok},
                           {"distinct_triples", triples.size()},
                           {"f_prime_r", big_str(bounds.f_prime)},
                           {"triples_ok", tri_ok},
                           {"bits_per_vertex", bounds.bits_per_vertex}};
        all_ok = all_ok && nc_ok && tri_ok;
    }

    // reconstruction certificate
    {
        const Graph decoded = decode(p.labels);
        const Graph expected = p.og.permuted();
        json mism = json::array();
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (decoded.has_edge(u, v) != expected.has_edge(u, v))
                    mism.push_back({u, v});
        const bool rec_ok = mism.empty();
        rep["reconstruction"] = {{"ok", rec_ok}};
        if (!rec_ok) witness["reconstruction_mismatches"] = mism;
        all_ok = all_ok && rec_ok;
    }

    // interval certificate
    {
        const IntervalFamily fam = build_interval_graph(p.ad);
        const bool load_ok = fam.max_point_load <= r + 2;
        rep["intervals"] = {{"max_point_load", fam.max_point_load},
                            {"load_ok", load_ok},
                            {"pathwidth_certificate", fam.pathwidth_certificate}};
        all_ok = all_ok && load_ok;
    }

    // cograph partition certificate
    {
        const CographPartition part = partition(p.ad, p.labels);
        bool cographs_ok = true;
        json bad_class = json::array();
        for (const CographClass& cls : part.classes) {
            if (!is_cograph(induced_subgraph(p.ad.pos, cls.vertices).graph).is_cograph) {
                cographs_ok = false;
                bad_class.push_back(cls.vertices);
            }
        }
        const ChiBoundReport chi = chi_bound_report(p.ad.pos, part);
        json pj = {{"class_count", chi.class_count},
                   {"class_count_ok", chi.class_count_ok},
                   {"max_cotree_height", chi.max_cotree_height},
                   {"height_ok", chi.height_ok},
                   {"all_cographs", cographs_ok},
                   {"partial", chi.partial}};
        pj["omega"] = chi.omega ? json(*chi.omega) : json();
        pj["chi"] = chi.chi ? json(*chi.chi) : json();
        pj["chi_bound"] = chi.chi_bound ? json(big_str(*chi.chi_bound)) : json();
        pj["chi_bound_ok"] = chi.chi_bound_ok ? json(*chi.chi_bound_ok) : json();
        rep["partition"] = pj;
        if (!cographs_ok) witness["non_cograph_classes"] = bad_class;
        all_ok = all_ok && chi.class_count_ok && chi.height_ok && cographs_ok &&
                 (!chi.chi_bound_ok || *chi.chi_bound_ok);
    }

    rep["ok"] = all_ok;
    if (!witness.empty()) rep["witness"] = witness;
    if (timing) {
        const auto t1 = std::chrono::steady_clock::now();
        rep["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
    emit(rep);
    return all_ok ? 0 : 2;
}

int cmd_centered(const std::string& input, int p, const std::string& order_file, int guard_n,
                 int centered_guard, const std::string& intervals_out) {
    const Graph g = read_edge_list(input);
    if (g.n() == 0) throw InputError("centered needs a nonempty graph");
    PipelineResult pipe = run_pipeline(g, order_file, guard_n);
    const IntervalFamily fam = build_interval_graph(pipe.ad);
    if (!intervals_out.empty()) write_or_print(serialize(fam), intervals_out);
    const CenteredColoring col = p_centered_coloring(fam, p);
    const CenteredCheck chk = verify_centered(fam.h, col.colors, p + 1, centered_guard);
    json rep;
    rep["schema"] = kSchema;
    rep["command"] = "centered";
    rep["input"] = {{"path", input}, {"n", g.n()}, {"m", g.edge_count()}};
    rep["p"] = p;
    rep["palette"] = col.palette;
    rep["colors"] = col.colors;
    rep["centered"] = chk.ok;
    if (!chk.ok) rep["witness"] = chk.witness;
    emit(rep);
    return chk.ok ? 0 : 2;
}

int cmd_ramsey(const std::string& fspec, int m) {
    const Graph f = load_graph(fspec);
    const RamseyCheck chk = verify_vertex_ramsey(f, m);
    json rep;
    rep["schema"] = kSchema;
    rep["command"] = "ramsey";
    rep["f"] = {{"spec", fspec}, {"n", f.n()}, {"m", f.edge_count()}};
    rep["colors"] = m;
    long long power_order = 1;
    for (int i = 0; i < m; ++i) power_order *= f.n();
    rep["power_order"] = power_order;
    rep["ramsey"] = chk.ok;
    if (!chk.ok) rep["witness_coloring"] = chk.witness;
    emit(rep);
    return chk.ok ? 0 : 2;
}

int cmd_orderindex(const std::string& input, int guard_n, std::optional<int> cap) {
    const Graph g = load_graph(input);
    const int idx = order_index(g, guard_n, cap);
    json rep;
    rep["schema"] = kSchema;
    rep["command"] = "orderindex";
    rep["input"] = {{"spec", input}, {"n", g.n()}, {"m", g.edge_count()}};
    if (cap) rep["cap"] = *cap;
    rep["order_index"] = idx;
    emit(rep);
    return 0;
}

int cmd_encode(const std::string& input, const std::string& order_file, int guard_n,
               const std::string& out) {
    const Graph g = read_edge_list(input);
    if (g.n() == 0) throw InputError("encode needs a nonempty graph");
    PipelineResult p = run_pipeline(g, order_file, guard_n);
    write_or_print(serialize(p.labels), out);
    return 0;
}

int cmd_decode(const std::string& input, const std::string& out) {
    std::ifstream in(input);
    if (!in) throw InputError("cannot open " + input);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const Graph g = decode(parse_colored_order(text));
    write_or_print(to_edge_list(g), out);
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, uint64_t seed,
            const std::string& out) {
    const Graph g = gen_family(family, params, seed);
    write_or_print(to_edge_list(g), out);
    std::cerr << g.n() << " " << g.edge_count() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear rankwidth toolkit"};
    app.require_subcommand(1);

    std::string input, order_file, out_file, family, fspec, intervals_out;
    std::vector<std::string> params;
    int p = 1, m = 2, guard = kDefaultLrwGuard, centered_guard = kDefaultCenteredGuard;
    int oi_guard = kDefaultOrderIndexGuard;
    uint64_t seed = 0;
    bool timing = false, json_flag = false;
    std::optional<int> k_cap;

    auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    gen->add_option("family", family,
                    "halfgraph | lozin | lozin-tilde | lexpower | path | clique | empty | random")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("-o,--out", out_file, "output file (default stdout)");
    gen->add_option("--seed", seed, "seed for the random family");

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full certificate pipeline");
    analyze_cmd->add_option("input", input, "edge-list file")->required();
    analyze_cmd->add_option("--order", order_file, "use this order instead of the exact DP");
    analyze_cmd->add_option("--guard-n", guard, "exact-width guard");
    analyze_cmd->add_flag("--timing", timing, "append a timing field (non-deterministic)");

    auto* centered_cmd = app.add_subcommand("centered", "first-fit p-centered coloring + check");
    centered_cmd->add_option("input", input)->required();
    centered_cmd->add_option("p", p, "parameter p")->required();
    centered_cmd->add_option("--order", order_file);
    centered_cmd->add_option("--guard-n", guard);
    centered_cmd->add_option("--centered-guard", centered_guard,
                             "connected-subset enumeration guard");
    centered_cmd->add_option("--intervals", intervals_out,
                             "also write the interval family as 'v left right' lines");

    auto* ramsey_cmd = app.add_subcommand("ramsey", "exhaustive vertex-Ramsey check");
    ramsey_cmd->add_option("f", fspec, "edge-list file or shorthand like P4")->required();
    ramsey_cmd->add_option("m", m, "number of colors")->required();

    auto* oi_cmd = app.add_subcommand("orderindex", "largest semi-induced half-graph");
    oi_cmd->add_option("input", input, "edge-list file or shorthand")->required();
    oi_cmd->add_option("--guard-n", oi_guard);
    int cap_value = -1;
    oi_cmd->add_option("--k-cap", cap_value, "stop at this order, waiving the guard");

    auto* encode_cmd = app.add_subcommand("encode", "emit the colored-order encoding");
    encode_cmd->add_option("input", input)->required();
    encode_cmd->add_option("--order", order_file);
    encode_cmd->add_option("--guard-n", guard);
    encode_cmd->add_option("-o,--out", out_file);

    auto* decode_cmd = app.add_subcommand("decode", "rebuild the edge list from an encoding");
    decode_cmd->add_option("input", input)->required();
    decode_cmd->add_option("-o,--out", out_file);

    // reports are always JSON; the flag is accepted for interface stability
    for (auto* sub : {analyze_cmd, centered_cmd, ramsey_cmd, oi_cmd})
        sub->add_flag("--json", json_flag, "emit machine-readable output (always on)");

    CLI11_PARSE(app, argc, argv);
    (void)json_flag;

    try {
        if (gen->parsed()) return cmd_gen(family, params, seed, out_file);
        if (analyze_cmd->parsed()) return cmd_analyze(input, order_file, guard, timing);
        if (centered_cmd->parsed())
            return cmd_centered(input, p, order_file, guard, centered_guard, intervals_out);
        if (ramsey_cmd->parsed()) return cmd_ramsey(fspec, m);
        if (oi_cmd->parsed()) {
            if (cap_value >= 0) k_cap = cap_value;
            return cmd_orderindex(input, oi_guard, k_cap);
        }
        if (encode_cmd->parsed()) return cmd_encode(input, order_file, guard, out_file);
        if (decode_cmd->parsed()) return cmd_decode(input, out_file);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        json err{{"schema", kSchema}, {"error", "invariant"}, {"detail", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "contract: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 1;
    } catch (const FormatError& e) {
        std::cerr << "format: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
