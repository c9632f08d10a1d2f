#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "poinc/minkowski.hpp"
#include "poinc/rep_objects.hpp"

namespace poinc {

/// The 60 rotations of the icosahedron, identity first.
const std::vector<Eigen::Matrix3d>& icosahedral_group();

/// Two rotations generating the group (orders 5 and 3).
const std::vector<Eigen::Matrix3d>& icosahedral_generators();

/// The 12 unit vertex directions.
const std::vector<Eigen::Vector3d>& icosahedron_vertices();

/*!
 * Finite model of an SU(2)-homogeneous fiber.
 *
 * Each point is a tuple of vectors (the transported fiber templates), and
 * `perms[g][i]` is the index of generator g applied to point i. Point fibers
 * hold one empty tuple; S^2 uses the vertices; S^3 uses the group itself.
 */
struct DiscreteFiber
{
    FiberSpace space;
    std::vector<std::vector<Eigen::Vector3d>> points;
    std::vector<std::vector<std::size_t>> perms;

    std::size_t size() const { return points.size(); }
};

/// Discretize the fiber of an irrep over a timelike or zero orbit.
DiscreteFiber discretize_fiber(const Irrep& i);

/// Orbits of the generators acting diagonally on index pairs (i, j).
std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
pair_orbits(const DiscreteFiber& a, const DiscreteFiber& b);

}  // namespace poinc
