#include "hextile/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hextile {

std::string write_graph_text(const Graph& g) {
    std::string out = "hexgraph " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        auto [a, b] = std::minmax(u, v);
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
}

namespace {

bool parse_int(const std::string& s, size_t& pos, long long& out) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    long long val = 0;
    bool any = false;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        val = val * 10 + (s[pos] - '0');
        ++pos;
        any = true;
    }
    if (!any) {
        pos = start;
        return false;
    }
    out = neg ? -val : val;
    return true;
}

}  // namespace

Graph read_graph_text(const std::string& text) {
    if (text.empty() || text.back() != '\n')
        throw ParseError(static_cast<int>(1 + std::count(text.begin(), text.end(), '\n')),
                         "trailing newline required");
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (!header_seen) {
            std::istringstream ls(line);
            std::string tag;
            ls >> tag;
            if (tag != "hexgraph") throw ParseError(lineno, "expected `hexgraph <n> <m>` header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header counts");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
            header_seen = true;
            continue;
        }
        if (line.empty()) throw ParseError(lineno, "unexpected blank line");
        size_t pos = 0;
        long long u, v;
        if (!parse_int(line, pos, u)) throw ParseError(lineno, "expected edge `<u> <v>`");
        if (pos >= line.size() || line[pos] != ' ')
            throw ParseError(lineno, "expected single space between endpoints");
        ++pos;
        if (!parse_int(line, pos, v)) throw ParseError(lineno, "expected edge `<u> <v>`");
        if (pos != line.size()) throw ParseError(lineno, "trailing characters after edge");
        if (u > v) throw ParseError(lineno, "endpoints must be in ascending order");
        if (u < 0 || v >= n) throw ParseError(lineno, "endpoint out of range");
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(lineno, "more edges than declared");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (!header_seen) throw ParseError(lineno ? lineno : 1, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "fewer edges than declared");
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << write_graph_text(g);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_graph_text(ss.str());
}

}  // namespace hextile
