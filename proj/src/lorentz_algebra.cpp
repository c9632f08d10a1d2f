#include "poinc/lorentz_algebra.hpp"

#include <cmath>

#include <Eigen/Geometry>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "poinc/error.hpp"

namespace poinc {

const std::array<Eigen::Matrix4d, 6>& lorentz_generators()
{
    static const std::array<Eigen::Matrix4d, 6> gens = [] {
        std::array<Eigen::Matrix4d, 6> g;
        for (int k = 0; k < 3; ++k)
        {
            // J_k x = e_k cross x on the spatial block
            Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
            int a = (k + 1) % 3;
            int b = (k + 2) % 3;
            j(1 + b, 1 + a) = 1.0;
            j(1 + a, 1 + b) = -1.0;
            g[static_cast<std::size_t>(k)] = j;

            Eigen::Matrix4d kb = Eigen::Matrix4d::Zero();
            kb(0, 1 + k) = 1.0;
            kb(1 + k, 0) = 1.0;
            g[static_cast<std::size_t>(k + 3)] = kb;
        }
        return g;
    }();
    return gens;
}

Eigen::MatrixXd stabilizer_algebra(const std::vector<FourVector>& fixed, double tol)
{
    auto const& gens = lorentz_generators();
    Eigen::MatrixXd a(4 * static_cast<Eigen::Index>(fixed.size()), 6);
    if (fixed.empty())
        return Eigen::MatrixXd::Identity(6, 6);
    double scale = 1.0;
    for (std::size_t i = 0; i < fixed.size(); ++i)
    {
        Eigen::Vector4d v = fixed[i].to_eigen();
        scale = std::max(scale, v.cwiseAbs().maxCoeff());
        for (int k = 0; k < 6; ++k)
            a.block<4, 1>(4 * static_cast<Eigen::Index>(i), k)
                = gens[static_cast<std::size_t>(k)] * v;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    auto const& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > tol * scale)
            ++rank;
    return svd.matrixV().rightCols(6 - rank);
}

LorentzTransform exp_generator(const Eigen::Matrix<double, 6, 1>& coeffs)
{
    auto const& gens = lorentz_generators();
    Eigen::Matrix4d x = Eigen::Matrix4d::Zero();
    for (int k = 0; k < 6; ++k)
        x += coeffs[k] * gens[static_cast<std::size_t>(k)];
    Eigen::Matrix4d m = x.exp();
    return LorentzTransform::from_matrix(m, 1e-8);
}

LorentzTransform
random_stabilizer_element(const Eigen::MatrixXd& algebra, CounterRng& rng, double scale)
{
    if (algebra.rows() != 6)
        throw DomainError("stabilizer algebra must have six rows");
    Eigen::VectorXd c(algebra.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i)
        c[i] = rng.uniform(-scale, scale);
    Eigen::Matrix<double, 6, 1> coeffs = algebra * c;
    return exp_generator(coeffs);
}

LorentzTransform rotation_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b)
{
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(1, 1) = Eigen::Quaterniond::FromTwoVectors(a, b).toRotationMatrix();
    return LorentzTransform::from_matrix(m);
}

int numerical_rank(const Eigen::MatrixXd& m, double tol)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    auto const& sv = svd.singularValues();
    double cut = tol * std::max(1.0, sv.size() ? sv[0] : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > cut)
            ++rank;
    return rank;
}

LorentzTransform section(const FourVector& p)
{
    auto o = orbit_of(p);
    const Eigen::Vector3d xhat = Eigen::Vector3d::UnitX();
    Eigen::Vector3d s = p.spatial();
    double sn = s.norm();
    Eigen::Vector3d dir = sn > 0 ? Eigen::Vector3d(s / sn) : xhat;
    switch (o.cls)
    {
        case CausalClass::Zero: return {};
        case CausalClass::TimelikeFuture: return rest_frame_boost(p);
        case CausalClass::TimelikePast: return rest_frame_boost(-p);
        case CausalClass::Spacelike:
            return rotation_between(xhat, dir) * boost(xhat, std::asinh(p.t / o.radius));
        case CausalClass::NullFuture:
            return rotation_between(xhat, dir) * boost(xhat, std::log(p.t));
        case CausalClass::NullPast:
            return rotation_between(xhat, dir) * boost(xhat, -std::log(-p.t));
    }
    return {};
}

}  // namespace poinc
