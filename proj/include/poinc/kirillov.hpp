#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "poinc/minkowski.hpp"
#include "poinc/random.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
/*!
 * Real Lie algebra given by structure constants [e_i, e_j] = c^k_ij e_k.
 *
 * Construction checks antisymmetry and the Jacobi identity.
 */
class LieAlgebraBasis
{
  public:
    /// `c` is indexed (k * dim + i) * dim + j.
    LieAlgebraBasis(std::size_t dim, std::vector<double> c, std::string name = {});

    static LieAlgebraBasis su2();
    /// so(3,1) ~ sl(2,C) as a real algebra: J_0..J_2 then K_0..K_2.
    static LieAlgebraBasis sl2c();
    static LieAlgebraBasis abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }

    double c(std::size_t k, std::size_t i, std::size_t j) const
    {
        return c_[(k * dim_ + i) * dim_ + j];
    }

    /// Largest |c^k_ij + c^k_ji|.
    double antisymmetry_defect() const;
    /// Largest Jacobi-identity residual.
    double jacobi_defect() const;

  private:
    std::size_t dim_;
    std::vector<double> c_;
    std::string name_;
};

using CoadjointPoint = Eigen::VectorXd;

/// A smooth function on g* given by its value and gradient.
struct SmoothFunction
{
    std::function<double(const CoadjointPoint&)> value;
    std::function<Eigen::VectorXd(const CoadjointPoint&)> gradient;
};

/// f(X) = X_i
SmoothFunction coordinate_function(std::size_t i, std::size_t dim);

/// sum_ijk c^k_ij X_k df1/dX_i df2/dX_j
double poisson_bracket(const LieAlgebraBasis& basis,
                       const SmoothFunction& f1,
                       const SmoothFunction& f2,
                       const CoadjointPoint& p);

/// Component j is sum_k c^k_ij X_k.
Eigen::VectorXd hamiltonian_vector_field(const LieAlgebraBasis& basis,
                                         std::size_t i,
                                         const CoadjointPoint& p);

/// sum_k c^k_ij X_k
double symplectic_eval(const LieAlgebraBasis& basis,
                       std::size_t i,
                       std::size_t j,
                       const CoadjointPoint& p);

//---------------------------------------------------------------------------//
// su(2) orbits
//---------------------------------------------------------------------------//
struct FluxResult
{
    double flux{0};
    double coarse_flux{0};  //!< same integral on a quarter of the nodes
    bool converged{false};
    std::size_t nodes{0};
};

/// Integrate the orbit symplectic form over the sphere |X| = j.
FluxResult su2_flux(double j, std::size_t resolution);

struct SU2OrbitLabel
{
    double j{0};

    bool is_integral() const;
    int twice() const;
    int dimension() const { return twice() + 1; }
    bool operator==(const SU2OrbitLabel&) const = default;
};

/// Shells |j - l|, |j - l| + 1, ..., j + l.
std::vector<SU2OrbitLabel> su2_tensor_decompose(double j, double l);

//---------------------------------------------------------------------------//
// SL(2,C) coadjoint orbits
//---------------------------------------------------------------------------//
struct SL2C
{
    std::complex<double> a{1}, b{0}, c{0}, d{1};

    std::complex<double> det() const { return a * d - b * c; }
    SL2C inverse() const { return {d, -b, -c, a}; }
};

SL2C operator*(const SL2C& x, const SL2C& y);

/// Random element exp of a bounded random sl(2,C) generator.
SL2C random_sl2c(CounterRng& rng, double scale = 1.0);

/// The 3x3 action on (z0, z1, z2); checks ad - bc = 1.
Eigen::Matrix3cd sl2c_adjoint_matrix(const SL2C& g, double tol = default_tolerances.group);

/// Complex chart in which the invariant form is w0^2 + w1^2 + w2^2.
const Eigen::Matrix3cd& sl2c_chart();

/// (z0, z1, z2) -> (Re w, Im w)
Eigen::Matrix<double, 6, 1> to_real_coordinates(const Eigen::Vector3cd& z);
Eigen::Vector3cd from_real_coordinates(const Eigen::Matrix<double, 6, 1>& p);

/// Group action pushed through the real chart.
Eigen::Matrix<double, 6, 1> act_real(const SL2C& g, const Eigen::Matrix<double, 6, 1>& p);

struct OrbitInvariants
{
    double i1{0};  //!< |x|^2 - |y|^2
    double i2{0};  //!< x . y
};

OrbitInvariants orbit_invariants(const Eigen::Matrix<double, 6, 1>& p);

struct OrbitLabelSL2C
{
    double n{0};
    double rho{0};

    bool is_canonical() const { return n > 0 || (n == 0 && rho >= 0); }
    bool operator==(const OrbitLabelSL2C&) const = default;
};

/// Canonical (n, rho) with n^2 - rho^2 = I1 and n rho = I2.
OrbitLabelSL2C orbit_label_from_invariants(double i1, double i2);
OrbitInvariants label_invariants(const OrbitLabelSL2C& l);

/*!
 * Symbolic decomposition of pi_{n1 rho1} (x) pi_{n2 rho2}.
 *
 * A direct sum over m with m + n1 + n2 integral of a rho-integral with no
 * measure attached.
 */
struct SL2CTensorDescriptor
{
    double m_residue{0};  //!< admissible m are m_residue + Z, in [0, 1)
    bool rho_integral{true};

    bool admits(double m, double tol = default_tolerances.num) const;
    std::vector<double> m_values(double lo, double hi) const;
    bool operator==(const SL2CTensorDescriptor&) const = default;
};

SL2CTensorDescriptor
sl2c_tensor_decompose(const OrbitLabelSL2C& l1, const OrbitLabelSL2C& l2);

std::string to_string(const SL2CTensorDescriptor& d);

}  // namespace poinc
