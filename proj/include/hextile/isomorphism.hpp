#pragma once

#include <optional>
#include <vector>

#include "hextile/graph.hpp"

namespace hextile {

/// Stable vertex colors from iterated neighborhood refinement seeded with
/// degree, distance profile, and short-cycle participation. Invariant under
/// relabeling; equal-color is necessary for same-orbit / mappable vertices.
std::vector<int> refinement_colors(const Graph& g);

/// Adjacency- and multiplicity-preserving bijection g -> h if one exists.
/// Deterministic for fixed input ordering.
std::optional<std::vector<VertexId>> isomorphic(const Graph& g, const Graph& h);

/// Orbit partition of the automorphism group action on vertices.
/// Returns orbit id per vertex, orbit ids dense from 0.
std::vector<int> automorphism_orbits(const Graph& g);

int orbit_count(const std::vector<int>& orbit_ids);

}  // namespace hextile
