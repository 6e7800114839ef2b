#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hextile/graph.hpp"
#include "hextile/surface.hpp"

namespace hextile {

enum class HexFamily { R, A, B, C, F, G, H };

/// Tag letters follow the subscript naming: R = H_{k,m,r}, A = H_{k,m,a},
/// B = H_{k,m,b}, C = H_{k,m,c}, F = H_{k,m,f}, G = H_{k,m,g}, H = H_{k,m,h}.
struct HexFamilyId {
    HexFamily family;
    int k = 0;
    int m = 0;
    int r = 0;  // family R only

    bool operator==(const HexFamilyId& o) const = default;
    bool operator<(const HexFamilyId& o) const;
};

std::string to_string(const HexFamilyId& id);                 // famspec grammar, e.g. Hr:5,4,2
std::optional<HexFamilyId> parse_hex_famspec(const std::string& s);

/// Static parameter ranges. Degenerate m=0 members of family R (and the
/// m=0 members of family F) pass here and are finally gated by
/// certification in try_build_hex.
bool hex_params_ok(const HexFamilyId& id);

/// Vertex count formula by family.
long long hex_vertex_count(const HexFamilyId& id);

/// Graph with construction coordinates and peripheral labels.
struct LabeledGraph {
    Graph graph;
    std::vector<std::pair<int, int>> coords;             // vertex -> (row, col)
    std::map<std::pair<int, int>, VertexId> vertex_at;   // (row, col) -> vertex
    std::vector<VertexId> z, x, v, w;                    // peripheral labels when defined

    VertexId at(int row, int col) const;
};

enum class BlockKind {
    Grid,
    CylinderGrid,
    Wall,
    Cylinder,
    CylinderCircuit,
    MoebiusCircuit,
    ParallelMoebius,
    Ladder,
    TwistedCylinder1,
    TwistedCylinder2,
};

/// Building blocks. Parameters: Grid/CylinderGrid take (p, q); Wall,
/// Cylinder, Ladder, TwistedCylinder1/2 take (k, m); CylinderCircuit,
/// MoebiusCircuit and ParallelMoebius take (k, ignored).
LabeledGraph build_block(BlockKind kind, int a, int b = 0);

enum class EdgeRole : uint8_t {
    Wall,       ///< interior wall/ladder/grid edge
    Wrap,       ///< wrap edge closing a wall into a cylinder (or the Klein-grid vertical wrap)
    Twist,      ///< edge added by a twisted-cylinder construction
    AddedCycle, ///< edge of an added peripheral cycle (family F)
    Closure,    ///< family closure edge between degree-2 vertices
};

struct HexBuild {
    HexFamilyId id;
    bool klein = false;  ///< built from the Klein-bottle grid presentation
    LabeledGraph labeled;
    HexTiling tiling;
    std::vector<EdgeRole> edge_role;       // per edge
    std::vector<EdgeId> exterior_edges;    // census convention (family H exclusions applied)
};

/// Native construction; throws std::invalid_argument on bad parameters and
/// std::logic_error if certification fails for a non-degenerate id.
HexBuild build_hex(const HexFamilyId& id);

/// Like build_hex but returns nullopt when parameters are invalid or when a
/// degenerate (m=0 family R) candidate fails certification.
std::optional<HexBuild> try_build_hex(const HexFamilyId& id);

/// Alternative grid-based Klein-bottle construction; families C and F only.
HexBuild klein_presentation(const HexFamilyId& id);

struct PredictedInvariants {
    long long n = 0;
    int chi = 0;
    bool vertex_transitive = false;
    std::optional<int> l_g;           // always set for valid ids
    std::optional<long long> count;   // absent where the classification leaves it open
};

/// Closed-form invariants from the classification tables.
PredictedInvariants predicted_invariants(const HexFamilyId& id);

/// All ids with hex_params_ok and vertex count <= max_n, in family/k/m/r
/// order. Degenerate m=0 candidates are included; callers certify.
std::vector<HexFamilyId> enumerate_hex_ids(long long max_n);

}  // namespace hextile
