#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "poinc/rep_objects.hpp"
#include "poinc/triangulation.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// Labellings
//---------------------------------------------------------------------------//
/// Degree <= 3 polynomial on the unit sphere, constant term first.
struct SpherePolynomial
{
    double constant{1};
    std::array<double, 19> coeffs{};

    double operator()(const Eigen::Vector3d& n) const;
};

/// Band-limited random polynomial 1 + sum c_m n^m with |c| ~ amplitude.
SpherePolynomial random_sphere_polynomial(std::uint64_t seed, double amplitude = 0.3);

/*!
 * Scalar field of a tetrahedron on the pair of its first and last triangle
 * fibers, in rank-2 separable form sum_k a_k(u) b_k(v).
 */
struct TetraField
{
    std::array<SpherePolynomial, 2> a;
    std::array<SpherePolynomial, 2> b;
    int rank{1};

    static TetraField constant(double c);
    static TetraField random(std::uint64_t seed, double amplitude = 0.3);
};

struct Labelling
{
    std::map<Edge, double> edge_colors;       //!< keyed by input labels, sorted
    std::map<Triangle, double> face_values;   //!< constant face intertwiners, default 1
    std::map<Tetrahedron, TetraField> tetra_fields;  //!< default unit
};

/*!
 * Parse a labelling file.
 *
 *     edge a b rho <real>
 *     face a b c value <real>
 *     tetra a b c d constant <real>
 *     tetra a b c d random <seed>
 */
Labelling parse_labelling(std::string_view text);
Labelling load_labelling_file(const std::string& path);

/// Status of a triangle with edge colours a, b, c in the timelike case.
FiberStatus triangle_status(double a, double b, double c);

struct TriangleCheck
{
    Triangle triangle;  //!< input labels
    std::array<double, 3> colors{};
    FiberStatus status{FiberStatus::Empty};
};

struct AdmissibilityReport
{
    bool pass{false};
    std::vector<TriangleCheck> triangles;
    std::size_t collinear{0};
};

/// Throws DomainError listing the edges without a colour.
AdmissibilityReport admissible(const Triangulation& t, const Labelling& l);

//---------------------------------------------------------------------------//
// 5j symbols
//---------------------------------------------------------------------------//
struct PentagonTrace
{
    double plus_value{0};
    double minus_value{0};
    double residual{0};
};

struct FiveJConfig
{
    std::size_t nodes{1024};  //!< Fibonacci nodes per triangle fiber
    std::uint64_t seed{0};
};

/*!
 * Both pasting orders of the five boundary tetrahedra of a 4-simplex.
 *
 * Each tetrahedron is traced over its two triangle fibers. The plus path
 * pastes tetrahedra {1,3} onto {0,2,4}; the minus path pastes them the other
 * way, through its own node sets. Collinear fibers are single points.
 */
PentagonTrace five_j(const Triangulation& t,
                     std::size_t simplex,
                     const Labelling& l,
                     const FiveJConfig& cfg = {});

struct SphericityReport
{
    double max_residual{0};
    std::vector<std::size_t> resolutions;
    std::vector<double> residual_by_resolution;  //!< max over simplices and trials
    bool monotone{false};
    std::size_t trials{0};
};

/// five_j over every 4-simplex with fresh random tetrahedron fields per trial.
SphericityReport sphericity_check(const Triangulation& t,
                                  const Labelling& l,
                                  std::size_t trials,
                                  std::uint64_t seed,
                                  const std::vector<std::size_t>& resolutions = {64, 256, 1024,
                                                                                 4096});

//---------------------------------------------------------------------------//
// Regularized state sum
//---------------------------------------------------------------------------//
enum class FaceAmplitude
{
    Unit,
    BCWeight,
    Table,
};

enum class TetraAmplitude
{
    Unit,
    Table,
};

enum class EdgeWeight
{
    Rho,
    Unit,
};

enum class Integrator
{
    Grid,
    MonteCarlo,
};

/// Where Monte Carlo colourings are drawn: the whole box or the grid's nodes.
enum class McSupport
{
    Continuum,
    Lattice,
};

struct AmplitudeConfig
{
    FaceAmplitude face_amplitude{FaceAmplitude::Unit};
    TetraAmplitude tetra_amplitude{TetraAmplitude::Unit};
    EdgeWeight edge_weight{EdgeWeight::Rho};
    std::map<std::size_t, double> face_table;   //!< by canonical triangle index
    std::map<std::size_t, double> tetra_table;  //!< by canonical tetrahedron index
    double cutoff{1.0};
    Integrator integrator{Integrator::Grid};
    std::size_t resolution{4};
    std::size_t samples{100000};
    std::uint64_t seed{0};
    McSupport mc_support{McSupport::Continuum};
    double normalization{1.0};
    std::size_t fivej_nodes{256};

    void validate() const;
};

/// Flat `key = value` lines; `#` starts a comment.
AmplitudeConfig parse_amplitude_config(std::string_view text);
AmplitudeConfig load_amplitude_config_file(const std::string& path);

/// Every key = value pair, for reports and manifests.
std::vector<std::pair<std::string, std::string>> describe(const AmplitudeConfig& c);

/// rho^2 + n^2
double bc_face_weight(double rho, double n);

/// rho of a timelike triangle face: its Minkowski area.
double triangle_area(double a, double b, double c);

struct ZResult
{
    double value{0};
    double standard_error{0};  //!< zero for the grid integrator
    double cutoff{0};
    std::size_t evaluations{0};  //!< grid cells visited or samples drawn
    std::size_t admissible{0};
    std::size_t fivej_evaluations{0};
    bool canonical{true};
};

/*!
 * Z = N * int over (0, cutoff]^edges of prod w(rho_e) prod A_f prod A_t
 * prod 5j, the integrand vanishing on inadmissible colourings.
 *
 * The grid integrator uses midpoints (k + 1/2) cutoff / R on every edge. The
 * complex is brought to canonical form first, so relabelled inputs give the
 * same bits.
 */
ZResult evaluate_Z(const Triangulation& t, const Labelling& l, const AmplitudeConfig& cfg);

}  // namespace poinc
