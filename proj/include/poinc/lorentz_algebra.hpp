#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "poinc/minkowski.hpp"
#include "poinc/random.hpp"

namespace poinc {

/// so(3,1) basis as 4x4 matrices: rotations J_0..J_2 then boosts K_0..K_2.
const std::array<Eigen::Matrix4d, 6>& lorentz_generators();

/*!
 * Basis of the Lie algebra fixing every vector in `fixed`.
 *
 * Each column holds coefficients over lorentz_generators(); the basis is the
 * numerical nullspace of X -> (X v_1, ..., X v_k).
 */
Eigen::MatrixXd stabilizer_algebra(const std::vector<FourVector>& fixed,
                                   double tol = 1e-9);

/// exp of sum_k coeffs_k * generator_k
LorentzTransform exp_generator(const Eigen::Matrix<double, 6, 1>& coeffs);

/// Random element exp(X) with X drawn from the span of `algebra` columns.
LorentzTransform
random_stabilizer_element(const Eigen::MatrixXd& algebra, CounterRng& rng, double scale = 1.0);

/// Rotation taking the unit vector a onto the unit vector b.
LorentzTransform rotation_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

/// Numerical rank of a matrix, singular values above tol * max(1, sigma_max).
int numerical_rank(const Eigen::MatrixXd& m, double tol = 1e-9);

/// A transform g with act(g, seed_point(orbit_of(p))) = p.
LorentzTransform section(const FourVector& p);

}  // namespace poinc
