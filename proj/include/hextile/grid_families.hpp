#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hextile/graph.hpp"
#include "hextile/hex_families.hpp"

namespace hextile {

enum class GridFamily { T, K0, K1, K2, S };

struct GridFamilyId {
    GridFamily family;
    int p = 0;
    int q = 0;
    int delta = 0;  // family T only

    bool operator==(const GridFamilyId& o) const = default;
    bool operator<(const GridFamilyId& o) const;
};

std::string to_string(const GridFamilyId& id);  // famspec grammar, e.g. T:5,5,2
std::optional<GridFamilyId> parse_grid_famspec(const std::string& s);

/// Classification parameter ranges.
bool grid_params_ok(const GridFamilyId& id);

/// Whether the edge-set formula produces a graph at all (wider than
/// grid_params_ok; used for boundary-parameter minor targets).
bool grid_formula_applicable(const GridFamilyId& id);

/// p*q vertices labeled row-major by (i, j); edge set per family formula.
LabeledGraph build_grid(const GridFamilyId& id);

struct LocallyGridCheck {
    bool ok = false;
    VertexId witness = -1;  ///< first failing vertex when !ok
};

/// 4-regular + connected + the 3x3 neighborhood condition at every vertex.
LocallyGridCheck is_locally_grid(const Graph& g);

/// Geometric dual via squares: one dual vertex per 4-cycle, one dual edge
/// per primal edge joining its two incident squares. Throws
/// std::domain_error if some edge does not lie in exactly two squares.
Graph grid_dual(const Graph& g);

struct GridIdentification {
    GridFamilyId id;
    bool canonical = false;  ///< parameters lie in the classification ranges
};

/// Search the constructible ids with p*q = |V| (classification-range ids
/// first, then boundary parameters) and return the first isomorphic one.
std::optional<GridIdentification> identify_grid(const Graph& g);

/// All classification-valid ids with p*q <= max_pq, in family/p/q/delta order.
std::vector<GridFamilyId> enumerate_grid_ids(int max_pq);

}  // namespace hextile
