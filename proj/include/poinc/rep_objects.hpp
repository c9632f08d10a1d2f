#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poinc/minkowski.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// Stabilizers and their catalogued subgroups
//---------------------------------------------------------------------------//
enum class GroupKind
{
    SL2C,
    SU2,
    SO21,
    E2,
    U1,
    SO2,
    CyclicZn,
    Trivial,
    NonLie,
};

struct StabilizerGroup
{
    GroupKind kind{GroupKind::Trivial};
    int n{0};           //!< order of CyclicZn
    std::string label;  //!< opaque tag of NonLie

    static StabilizerGroup make(GroupKind kind) { return {kind, 0, {}}; }
    static StabilizerGroup cyclic(int n);
    static StabilizerGroup non_lie(std::string label);

    /// Real dimension; empty for NonLie.
    std::optional<int> dim() const;
    bool is_connected_lie() const;
    bool is_discrete() const { return kind == GroupKind::CyclicZn; }

    bool operator==(const StabilizerGroup&) const = default;
};

std::string to_string(const StabilizerGroup& g);

/// "SU2", "U1", "Z5", "Trivial", "NonLie:tag", ...
StabilizerGroup parse_stabilizer(std::string_view text);

/// Stabilizer of any point of the orbit.
StabilizerGroup stabilizer_of(const MinkowskiOrbit& o);

/// Whether h is in the shipped subgroup catalog of g.
bool is_catalogued_subgroup(const StabilizerGroup& g, const StabilizerGroup& h);

//---------------------------------------------------------------------------//
// Irreps
//---------------------------------------------------------------------------//
enum class FiberKind
{
    Point,
    Sphere2,
    Sphere3,
    QuotientOf,
    Opaque,
};

struct FiberSpace
{
    FiberKind kind{FiberKind::Point};
    StabilizerGroup group;     //!< G in G/H
    StabilizerGroup subgroup;  //!< H in G/H
    int dim{0};                //!< -1 for Opaque

    bool operator==(const FiberSpace&) const = default;
};

std::string to_string(const FiberSpace& f);

/// The fiber G/H for a catalogued pair.
FiberSpace fiber_for(const StabilizerGroup& g, const StabilizerGroup& h);

enum class IrrepKind
{
    Elementary,
    Lie,
    Crystallographic,
    NonHausdorff,
};

std::string to_string(IrrepKind k);

struct Irrep
{
    MinkowskiOrbit base;
    StabilizerGroup subgroup;
    FiberSpace fiber;
    IrrepKind kind{IrrepKind::Elementary};

    bool operator==(const Irrep&) const = default;
};

std::string to_string(const Irrep& i);

Irrep make_irrep(const MinkowskiOrbit& base, const StabilizerGroup& subgroup);

/// E_O: the irrep whose subgroup is the full stabilizer.
Irrep elementary(const MinkowskiOrbit& base);

IrrepKind classify_irrep(const Irrep& i);

/// Throw DomainError if the stored kind or fiber disagrees with the catalog.
void validate(const Irrep& i);

/// Reflect the base orbit through the origin.
Irrep dual(const Irrep& i);

//---------------------------------------------------------------------------//
// Tensor products of elementary irreps
//---------------------------------------------------------------------------//
enum class MeasureTag
{
    Lebesgue,
    Custom,
};

std::string to_string(MeasureTag m);

/// Family r -> (O_r, fiber) for r in `range`.
struct ContinuumFamily
{
    CausalClass cls{CausalClass::TimelikeFuture};
    RadiusRange range;
    StabilizerGroup subgroup;
    FiberSpace fiber;
    MeasureTag measure{MeasureTag::Lebesgue};

    Irrep member(double r) const;
    bool operator==(const ContinuumFamily&) const = default;
};

struct DirectIntegralDecomposition
{
    std::vector<ContinuumFamily> continuum;
    std::vector<Irrep> discrete;

    /// Smallest closed-below range covering every base radius that occurs.
    RadiusRange base_range() const;
    bool operator==(const DirectIntegralDecomposition&) const = default;
};

std::string to_string(const DirectIntegralDecomposition& d);

/// Structured report for class pairs outside the implemented domain.
struct UnsupportedTensor
{
    CausalClass first;
    CausalClass second;
    OrbitSumRange histogram;
    std::string reason;
};

using TensorResult = std::variant<DirectIntegralDecomposition, UnsupportedTensor>;

struct TensorOptions
{
    std::size_t histogram_samples{2000};
    std::uint64_t seed{0};
    MeasureTag measure{MeasureTag::Lebesgue};
};

/*!
 * Decompose E1 (x) E2 for elementary irreps.
 *
 * Future timelike radii r1, r2 give a family of S^2-fibered Lie irreps over
 * r > r1 + r2 plus the collinear term E_{r1 + r2}. E_0 is a unit on both
 * sides. Every other pair comes back as UnsupportedTensor.
 */
TensorResult elementary_tensor(const Irrep& e1, const Irrep& e2, const TensorOptions& opts = {});

//---------------------------------------------------------------------------//
// Triangle and quadrilateral fibers
//---------------------------------------------------------------------------//
enum class FiberStatus
{
    Empty,
    Collinear,
    Generic,
};

std::string to_string(FiberStatus s);

struct TriangleFiber
{
    FiberStatus status{FiberStatus::Empty};
    double time_component{0};  //!< t of every solution u
    double spatial_radius{0};  //!< |u_spatial| of every solution
    std::vector<FourVector> samples;
    int tangent_rank{-1};      //!< rank of the residual SU(2) orbit, -1 if empty
    bool transitive{false};
    double max_residual{0};
};

/*!
 * Points u on the future hyperboloid of radius r1 with (r,0,0,0) - u on the
 * future hyperboloid of radius r2.
 */
TriangleFiber
triangle_fiber(double r1, double r2, double r, std::size_t n_samples, std::uint64_t seed);

enum class Isotropy
{
    SU2,
    SO2,
    Trivial,
};

std::string to_string(Isotropy i);

/// Isotropy of a closed polygon from the rank of its edge vectors.
Isotropy quadrilateral_isotropy(const std::vector<FourVector>& edges);

struct QuadSample
{
    std::array<FourVector, 3> edges;  //!< u1 + u2 + u3 = (r,0,0,0)
    Isotropy isotropy{Isotropy::Trivial};
    double shape12{0};  //!< u1 . u2
    double shape23{0};  //!< u2 . u3
    bool measure_zero{false};
};

struct QuadShapeSpace
{
    bool empty{true};
    std::vector<QuadSample> samples;
    double max_residual{0};
};

QuadShapeSpace quadrilateral_shape_space(double r1,
                                         double r2,
                                         double r3,
                                         double r,
                                         std::size_t n_samples,
                                         std::uint64_t seed);

//---------------------------------------------------------------------------//
// Hom spaces and duality
//---------------------------------------------------------------------------//
struct HomSide
{
    std::string description;
    std::optional<RadiusRange> range;  //!< future radii r_A with a nonzero Hom
    bool nonempty{false};               //!< for the actual A
    int structure_dim{-1};              //!< dimension of the multiplicity space
};

struct HomDecomposition
{
    HomSide tensor_side;  //!< Hom(A, B (x) C)
    HomSide dual_side;    //!< Hom(A (x) B*, C)
    bool consistent{false};
    double range_gap{0};
};

HomDecomposition hom_decomposition(const Irrep& a, const Irrep& b, const Irrep& c);

//---------------------------------------------------------------------------//
// Equivariant bundle charts
//---------------------------------------------------------------------------//
/// A point of the total space: base point and transported fiber templates.
struct BundlePoint
{
    FourVector base;
    std::vector<FourVector> frame;
};

struct BundleChart
{
    std::function<BundlePoint(const FourVector&, CounterRng&)> lift;
    std::function<FourVector(const BundlePoint&)> project;
    std::function<BundlePoint(const LorentzTransform&, const BundlePoint&)> act;
};

/// Vectors at the seed point whose joint stabilizer is the subgroup.
std::vector<FourVector> fiber_templates(const MinkowskiOrbit& base, const StabilizerGroup& h);

/// Associated-bundle chart L x_H (templates).
BundleChart standard_chart(const Irrep& i);

struct EquivarianceReport
{
    bool pass{false};
    double projection_residual{0};
    double frame_residual{0};
    std::size_t samples{0};
};

EquivarianceReport check_equivariance(const Irrep& i,
                                      const BundleChart& chart,
                                      std::size_t n_samples,
                                      std::uint64_t seed);

EquivarianceReport
check_equivariance(const Irrep& i, std::size_t n_samples, std::uint64_t seed);

}  // namespace poinc
