#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hextile/graph.hpp"

namespace hextile {

/// Parse failure for the graph text format; `line` is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

/// Text format: first line `hexgraph <n> <m>`, then m lines `<u> <v>` with
/// u <= v, 0-indexed. Lines starting with `#` are comments. A trailing
/// newline is required.
std::string write_graph_text(const Graph& g);
Graph read_graph_text(const std::string& text);

void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

}  // namespace hextile
