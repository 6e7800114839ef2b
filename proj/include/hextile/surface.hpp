#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hextile/graph.hpp"
#include "hextile/snf.hpp"

namespace hextile {

/// A 2-path (e1, mid, e2): two distinct edges meeting at mid.
struct TwoPath {
    VertexId mid;
    EdgeId e1, e2;  // e1 < e2
};

/// Certified hexagonal tiling: connected simple cubic girth-6 graph with a
/// 6-cycle collection such that every 2-path lies in exactly one member.
struct HexTiling {
    Graph graph;
    std::vector<Cycle> cells;                  ///< canonical, sorted
    std::vector<std::array<int, 2>> edge_cells;  ///< per edge: its two cell ids
    bool cover_searched = false;  ///< cell collection found by exact-cover search
    std::optional<TwoPath> ambiguity_witness;  ///< a 2-path lying in >= 2 six-cycles

    int cell_count() const { return static_cast<int>(cells.size()); }
};

struct CertifyResult {
    std::optional<HexTiling> tiling;
    std::string reject_reason;  ///< empty iff accepted

    bool accepted() const { return tiling.has_value(); }
};

/// Cells are the 6-cycles of a distinguished exact cover of the 2-paths:
/// the set of all 6-cycles when that already covers each 2-path once,
/// otherwise a deterministic exact-cover solution. Rejects with the first
/// failed condition and a witness otherwise.
CertifyResult certify_tiling(const Graph& g);

/// Enumerate every exact cover of the 2-paths by 6-cycles, up to `limit`
/// solutions (diagnostic / test hook).
std::vector<std::vector<int>> enumerate_cell_covers(const Graph& g, int limit);

struct OrientationResult {
    bool orientable = false;
    std::vector<int8_t> cell_sign;        ///< per cell, +1/-1; empty if non-orientable
    std::vector<int> conflict_cells;      ///< on failure: odd cycle of cell flips
};

/// Try to orient all cells so every edge is traversed once in each
/// direction by its two cells (BFS over the cell adjacency).
OrientationResult orientation_signs(const HexTiling& t);

/// Image of a cycle in H1 = ker d1 / im d2 with the basis fixed by the
/// Smith normal form transform. Zero iff null-homologous.
struct H1Class {
    std::vector<long long> free_part;
    std::vector<std::pair<long long, long long>> torsion;  ///< (residue, modulus)

    bool is_zero() const {
        for (long long x : free_part)
            if (x != 0) return false;
        for (auto [r, m] : torsion)
            if (r != 0) return false;
        return true;
    }
};

struct H1Shape {
    int rank = 0;
    std::vector<long long> torsion_moduli;
};

struct ShortestEssentialResult {
    bool exceeded_cap = false;
    int length = 0;
    long long count = 0;
};

/// Heavy per-tiling machinery with lazy caches. Not safe to share one
/// instance across threads; create one per worker.
class SurfaceContext {
public:
    explicit SurfaceContext(const HexTiling& t);
    ~SurfaceContext();
    SurfaceContext(SurfaceContext&&) noexcept;
    SurfaceContext& operator=(SurfaceContext&&) noexcept;

    const HexTiling& tiling() const;

    bool orientable() const;
    const OrientationResult& orientation() const;

    /// +1/-1 per edge: product over a cycle is +1 iff the cycle preserves
    /// orientation. Gauge depends on per-vertex rotation choices; cycle
    /// products do not.
    const std::vector<int8_t>& edge_orientation_signs() const;
    bool cycle_preserves_orientation(const Cycle& c) const;

    H1Shape h1_shape() const;
    H1Class homology_class(const Cycle& c) const;

    /// Orientation double cover (non-orientable tilings only; throws
    /// std::invalid_argument on orientable input). Vertex (v, sheet) of the
    /// cover is vertex_lift(v, sheet); projection maps back.
    const HexTiling& double_cover() const;
    VertexId vertex_lift(VertexId v, int sheet) const;
    VertexId project(VertexId cover_vertex) const;

    /// TRUE iff c is not null-homotopic. Orientable: nonzero homology
    /// class. Non-orientable: orientation-reversing, or nonzero class of
    /// the lift in the orientation double cover.
    bool is_essential(const Cycle& c) const;

    /// Minimal essential length and the exact number of essential cycles
    /// of that length, by truncated universal-cover search.
    ShortestEssentialResult shortest_essential(int cap) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot conveniences matching the per-operation contracts.
bool is_essential(const HexTiling& t, const Cycle& c);
H1Class homology_class(const HexTiling& t, const Cycle& c);
ShortestEssentialResult shortest_essential(const HexTiling& t, int cap);
HexTiling double_cover(const HexTiling& t);

}  // namespace hextile
