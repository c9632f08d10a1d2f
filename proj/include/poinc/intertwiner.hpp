#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Core>

#include "poinc/icosahedral.hpp"
#include "poinc/minkowski.hpp"
#include "poinc/rep_objects.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// Bridges
//---------------------------------------------------------------------------//
struct Bridge
{
    StabilizerGroup group;
    StabilizerGroup h1;
    StabilizerGroup h2;
    StabilizerGroup intersection;
    int dim{0};  //!< dim group - dim intersection
};

/// Intersection from the shipped same-axis table.
Bridge bridge(const StabilizerGroup& g,
              const StabilizerGroup& h1,
              const StabilizerGroup& h2,
              bool same_axis = true);

/// Bridge dimension as the tangent rank of the orbit map G -> G/(H1 n H2)
/// at a sampled point, from the fiber templates of both subgroups.
int numerical_bridge_dimension(const MinkowskiOrbit& base,
                               const StabilizerGroup& h1,
                               const StabilizerGroup& h2,
                               std::uint64_t seed = 0);

//---------------------------------------------------------------------------//
// Cocycles
//---------------------------------------------------------------------------//
/// Scalar field n(g, x) on group elements and orbit points.
struct CocycleField
{
    std::function<double(const LorentzTransform&, const FourVector&)> n;
    std::string name;
};

CocycleField constant_cocycle(double c);

/// Positive non-constant field 1 + sin(a.x + b.g) / 2 with random a, b.
CocycleField random_cocycle_field(std::uint64_t seed);

/// (g1, g2, x) with x on the orbit.
struct CocycleSample
{
    LorentzTransform g1;
    LorentzTransform g2;
    FourVector x;
};

std::vector<CocycleSample> sample_cocycle_triples(const MinkowskiOrbit& o,
                                                  std::size_t n,
                                                  std::uint64_t seed,
                                                  double max_rapidity = 1.5);

struct CocycleReport
{
    bool pass{false};
    double max_residual{0};
    std::size_t samples{0};
};

/*!
 * Check n(g1, x) n(g2, g1 x) = n(g1 g2, x) on every sample.
 *
 * "g1 g2" acts by g1 first, so its matrix is g2 * g1. Residuals are
 * relative to max(1, |n(g1 g2, x)|).
 */
CocycleReport cocycle_check(const CocycleField& field,
                            const std::vector<CocycleSample>& samples,
                            double tol = default_tolerances.num);

struct SelfIntertwinerReport
{
    int solution_dim{0};         //!< dimension of invariant fields on the orbit
    double normalized_value{0};  //!< the solution rescaled to mean 1
    double variation{0};         //!< max |solution - 1| over the samples
    CocycleReport constant_check;
    std::size_t samples{0};
};

/*!
 * Solve for L-invariant scalar fields on the orbit of an elementary irrep.
 *
 * Fields are expanded in polynomials of degree <= 2 in (t, x1, x2, x3); the
 * invariance condition f(g x) = f(x) on sampled pairs is a homogeneous
 * least-squares system whose solution space is returned.
 */
SelfIntertwinerReport
elementary_self_intertwiners(const Irrep& e, std::size_t n_samples = 400, std::uint64_t seed = 0);

//---------------------------------------------------------------------------//
// 1-intertwiners
//---------------------------------------------------------------------------//
/// One orbit of the diagonal action on the fiber product.
struct SupportComponent
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double invariant{1};  //!< cosine between the first template vectors
    StabilizerGroup isotropy;
    int hilbert_dim{1};
    std::vector<double> weak_labels;
};

struct OneIntertwiner
{
    Irrep source;
    Irrep target;
    std::shared_ptr<const DiscreteFiber> source_fiber;
    std::shared_ptr<const DiscreteFiber> target_fiber;
    std::vector<SupportComponent> support;
    MeasureTag measure{MeasureTag::Lebesgue};
    bool weak{false};

    bool is_zero() const { return support.empty(); }
    /// Hilbert dimension of each point pair (rows: source fiber).
    Eigen::MatrixXd dims() const;
};

/*!
 * Strong intertwiner supported on the fiber product.
 *
 * `hilbert_dims` is one dimension per component, a single value for all of
 * them, or empty for dimension 1. Different base orbits give the zero
 * intertwiner.
 */
OneIntertwiner build_strong_intertwiner(const Irrep& source,
                                        const Irrep& target,
                                        const std::vector<int>& hilbert_dims = {},
                                        MeasureTag measure = MeasureTag::Lebesgue);

OneIntertwiner identity_intertwiner(const Irrep& x);
OneIntertwiner zero_intertwiner(const Irrep& source, const Irrep& target);

/// Attach isotropy representation labels to each component: integer U(1)
/// charges or SU(2) spins. Dimensions become the sum of the label dimensions.
OneIntertwiner promote_weak(const OneIntertwiner& i,
                            const std::vector<std::vector<double>>& labels);

/// Relative product over the middle irrep, regrouped into orbits.
OneIntertwiner compose_1(const OneIntertwiner& f, const OneIntertwiner& g);

/// Multiset of (size, invariant, dim) for comparing supports.
std::vector<std::tuple<std::size_t, double, int>> support_signature(const OneIntertwiner& i);

struct TensorIntertwiner
{
    Eigen::MatrixXd order_fg;  //!< (X2 (x) g)(f (x) Y1)
    Eigen::MatrixXd order_gf;  //!< (f (x) Y2)(X1 (x) g), transported by the cell
    Eigen::MatrixXd cell;      //!< interchange 2-cell on the product support
    double strict_defect{0};   //!< difference of the two strict orders
    std::size_t components{0};
};

/// Tensor product of 1-intertwiners on the common rest frame.
TensorIntertwiner tensor_1(const OneIntertwiner& f,
                           const OneIntertwiner& g,
                           std::optional<Eigen::MatrixXd> interchange = std::nullopt);

}  // namespace poinc
