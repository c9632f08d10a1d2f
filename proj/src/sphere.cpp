#include "poinc/sphere.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

#include "poinc/error.hpp"
#include "poinc/random.hpp"

namespace poinc {

std::vector<Eigen::Vector3d> fibonacci_sphere(std::size_t n)
{
    return fibonacci_sphere(n, Eigen::Matrix3d::Identity());
}

std::vector<Eigen::Vector3d>
fibonacci_sphere(std::size_t n, const Eigen::Matrix3d& rotation)
{
    if (n == 0)
        throw DomainError("Fibonacci lattice needs at least one node");
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Eigen::Vector3d> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
        double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden_angle * static_cast<double>(i);
        out.push_back(rotation * Eigen::Vector3d(s * std::cos(phi), s * std::sin(phi), z));
    }
    return out;
}

Eigen::Matrix3d random_rotation(std::uint64_t seed, std::uint64_t tag)
{
    CounterRng rng(seed, tag);
    // Uniform unit quaternion from four normals
    Eigen::Quaterniond q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    q.normalize();
    return q.toRotationMatrix();
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> tangent_frame(const Eigen::Vector3d& n)
{
    Eigen::Vector3d u = n.normalized();
    Eigen::Vector3d helper = std::abs(u.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                   : Eigen::Vector3d::UnitY();
    Eigen::Vector3d e1 = (helper - helper.dot(u) * u).normalized();
    Eigen::Vector3d e2 = u.cross(e1);
    return {e1, e2};
}

}  // namespace poinc
