#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace poinc {

/// Spherical Fibonacci lattice of n unit vectors, z_i = 1 - (2i + 1)/n.
std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t n);

/// Same lattice, rotated.
std::vector<Eigen::Vector3d>
fibonacci_sphere(std::size_t n, const Eigen::Matrix3d& rotation);

/// Uniformly random rotation drawn from (seed, tag).
Eigen::Matrix3d random_rotation(std::uint64_t seed, std::uint64_t tag);

/// Right-handed orthonormal pair (e1, e2) spanning the tangent plane at n.
std::pair<Eigen::Vector3d, Eigen::Vector3d> tangent_frame(const Eigen::Vector3d& n);

}  // namespace poinc
