#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "poinc/intertwiner.hpp"
#include "poinc/minkowski.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// Quadrature on orbits
//---------------------------------------------------------------------------//
struct QuadratureGrid
{
    std::vector<FourVector> nodes;
    std::vector<double> weights;
    std::string domain;
    std::uint64_t fingerprint{0};

    std::size_t size() const { return nodes.size(); }
    double volume() const;
};

/// Fibonacci nodes on the unit sphere with equal weights summing to `total_mass`.
QuadratureGrid sphere_grid(std::size_t n,
                           const Eigen::Matrix3d& rotation = Eigen::Matrix3d::Identity(),
                           double total_mass = 4.0 * 3.14159265358979323846);

/*!
 * Rapidity x sphere product grid on the future hyperboloid of radius r.
 *
 * The invariant measure r^3 sinh^2(eta) d(eta) d(Omega) is truncated at
 * eta = max_rapidity; rapidities are midpoints of n_rapidity cells.
 */
QuadratureGrid hyperboloid_grid(double r,
                                std::size_t n_rapidity,
                                std::size_t n_sphere,
                                double max_rapidity = 5.0);

/// Exact invariant volume of the truncated hyperboloid window.
double hyperboloid_window_volume(double r, double max_rapidity);

//---------------------------------------------------------------------------//
// 2-intertwiners
//---------------------------------------------------------------------------//
/// A scalar field on the quadrature nodes of the common support orbit.
struct TwoIntertwiner
{
    std::shared_ptr<const QuadratureGrid> grid;
    Eigen::VectorXd values;
    std::shared_ptr<const OneIntertwiner> source;  //!< may be null when unlabelled
    std::shared_ptr<const OneIntertwiner> target;

    bool is_finite() const { return values.allFinite(); }
};

TwoIntertwiner constant_field(std::shared_ptr<const QuadratureGrid> grid, double c);

/// Field values f(node) on the grid.
TwoIntertwiner sample_field(std::shared_ptr<const QuadratureGrid> grid,
                            const std::function<double(const FourVector&)>& f);

/// Pointwise product; the source of b must match the target of a.
TwoIntertwiner compose_2_vertical(const TwoIntertwiner& a, const TwoIntertwiner& b);

struct HorizontalComposite
{
    TwoIntertwiner field;        //!< integrand on the middle orbit
    double convolution{0};       //!< quadrature sum of the integrand
    double window_volume{0};     //!< quadrature volume of the truncated orbit
};

/// Convolution over the middle orbit, reported with the window it used.
HorizontalComposite compose_2_horizontal(const TwoIntertwiner& a, const TwoIntertwiner& b);

/// Quadrature sum of the field.
double integrate(const TwoIntertwiner& a);

double max_abs_difference(const TwoIntertwiner& a, const TwoIntertwiner& b);

//---------------------------------------------------------------------------//
// Interchange conditions
//---------------------------------------------------------------------------//
/*!
 * A 3x3 grid of 2-cells together with the tensor square data.
 *
 * `corner` is the claimed composite of the whole grid. The square compares
 * alpha, the before-cell, then beta against beta, the after-cell, then alpha.
 */
struct InterchangeGrid
{
    std::array<std::array<TwoIntertwiner, 3>, 3> cells;
    TwoIntertwiner corner;
    TwoIntertwiner alpha;
    TwoIntertwiner beta;
    TwoIntertwiner cell_before;
    TwoIntertwiner cell_after;
};

struct InterchangeReport
{
    bool pass{false};
    double collapse_residual{0};  //!< rows-first vs columns-first vs corner
    double square_residual{0};
};

InterchangeReport check_interchange_conditions(const InterchangeGrid& grid,
                                               double tol = default_tolerances.num);

}  // namespace poinc
