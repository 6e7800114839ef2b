#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hextile {

using VertexId = int;
using EdgeId = int;

/// Finite undirected multigraph on dense integer vertex ids.
/// Loops and parallel edges are representable; "simple" is a predicate,
/// not a type constraint, because edge contraction and geometric duals
/// can produce both.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<VertexId, VertexId>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    /// (neighbor, edge id) pairs in edge-insertion order. A loop at v
    /// appears twice.
    const std::vector<std::pair<VertexId, EdgeId>>& incident(VertexId v) const {
        return adj_[v];
    }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    VertexId other_end(EdgeId e, VertexId v) const {
        const auto& [a, b] = edges_[e];
        return a == v ? b : a;
    }

    /// First edge id between u and v, if any.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    bool has_loop() const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loop() && !has_parallel_edges(); }
    bool is_connected() const;
    bool is_regular(int d) const;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
};

/// Simple cycle in canonical form: vertices start at the minimum id and
/// run toward its smaller cycle-neighbor; edges[i] joins vertices[i] to
/// vertices[i+1 mod len]. Length 1 = loop, length 2 = parallel pair.
struct Cycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const Cycle& o) const { return vertices == o.vertices && edges == o.edges; }
    bool operator<(const Cycle& o) const;
};

/// Throws std::invalid_argument naming the offending pair if an endpoint
/// is out of range.
Graph make_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Length of a shortest cycle; nullopt for forests. A parallel pair is a
/// 2-cycle, a loop a 1-cycle.
std::optional<int> girth(const Graph& g);

bool is_bipartite(const Graph& g);

/// Exact chromatic number in {1,2,3,4}: 1 if edgeless, 2 if bipartite,
/// else exhaustive 3-coloring search, else 4. Intended for graphs of max
/// degree 3; requires a simple graph when edges are present.
int chromatic_number_small(const Graph& g);

/// All simple cycles of length <= max_len, each exactly once in canonical
/// form, sorted. Includes loops and parallel-pair 2-cycles on multigraphs.
std::vector<Cycle> enumerate_cycles_upto(const Graph& g, int max_len);

/// Make a canonical Cycle from a vertex sequence (edges resolved by
/// first-edge lookup; only safe on simple graphs).
Cycle cycle_from_vertices(const Graph& g, const std::vector<VertexId>& vs);

struct ContractionResult {
    Graph graph;
    std::vector<VertexId> projection;  ///< old vertex id -> new vertex id
    std::vector<EdgeId> edge_origin;   ///< new edge id -> old edge id
};

/// Quotient multigraph identifying the endpoints of every edge in
/// `contract`. Loops in `contract` are discarded; parallel edges and loops
/// arising in the quotient are retained.
ContractionResult contract_edges(const Graph& g, const std::vector<EdgeId>& contract);

struct SimplifyResult {
    Graph graph;
    std::vector<EdgeId> kept_origin;        ///< new edge id -> old edge id
    std::vector<EdgeId> removed_loops;      ///< old edge ids
    std::vector<EdgeId> removed_parallels;  ///< old edge ids (duplicates beyond the first)
};

/// Remove loops and collapse each parallel class to its first edge.
SimplifyResult simplify(const Graph& g);

std::vector<int> connected_component_ids(const Graph& g);

/// BFS distances from src; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, VertexId src);

/// All-pairs BFS distances (row-major n*n, -1 unreachable).
std::vector<int> all_pairs_distances(const Graph& g);

}  // namespace hextile
