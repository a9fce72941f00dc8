#include "lrw/io.hpp"

#include <fstream>
#include <sstream>

namespace lrw {

namespace {

// Strips comments and blank lines, yielding one stream of tokens.
std::vector<std::string> significant_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    const std::vector<std::string> lines = significant_lines(text);
    if (lines.empty()) throw FormatError("missing 'n m' header");
    std::istringstream head(lines[0]);
    long long n, m;
    if (!(head >> n >> m) || n < 0 || m < 0) throw FormatError("bad 'n m' header");
    std::string trail;
    if (head >> trail) throw FormatError("trailing tokens after header");
    if ((long long)lines.size() != m + 1)
        throw FormatError("expected " + std::to_string(m) + " edge lines, found " +
                          std::to_string(lines.size() - 1));
    std::vector<std::pair<int, int>> edges;
    for (long long i = 1; i <= m; ++i) {
        std::istringstream es(lines[i]);
        long long u, v;
        if (!(es >> u >> v)) throw FormatError("bad edge line: " + lines[i]);
        if (es >> trail) throw FormatError("trailing tokens on edge line: " + lines[i]);
        edges.emplace_back((int)u, (int)v);
    }
    return from_edge_list((int)n, edges);
}

Graph read_edge_list(const std::string& path) { return parse_edge_list(slurp(path)); }

std::string to_edge_list(const Graph& g) {
    const auto edges = g.edges();
    std::string s = std::to_string(g.n()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << to_edge_list(g);
}

std::vector<int> parse_order(const std::string& text, int n) {
    const std::vector<std::string> lines = significant_lines(text);
    std::vector<int> order;
    for (const std::string& line : lines) {
        std::istringstream ls(line);
        long long v;
        while (ls >> v) order.push_back((int)v);
    }
    if ((int)order.size() != n)
        throw FormatError("order has " + std::to_string(order.size()) + " entries, expected " +
                          std::to_string(n));
    return order;
}

std::vector<int> read_order(const std::string& path, int n) {
    return parse_order(slurp(path), n);
}

} // namespace lrw
