#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "poinc/random.hpp"

namespace poinc {

/// Numerical tolerances shared by the geometry code.
struct Tolerances
{
    double group = 1e-9;  //!< defect allowed in m^T eta m = eta
    double num = 1e-8;    //!< relative tolerance for derived quantities
};

inline constexpr Tolerances default_tolerances{};

//---------------------------------------------------------------------------//
// Points of Minkowski space, signature (+,-,-,-)
//---------------------------------------------------------------------------//
struct FourVector
{
    double t{0};
    double x1{0};
    double x2{0};
    double x3{0};

    double operator[](int i) const;
    bool is_finite() const;
    Eigen::Vector3d spatial() const { return {x1, x2, x3}; }
    Eigen::Vector4d to_eigen() const { return {t, x1, x2, x3}; }

    static FourVector from_eigen(const Eigen::Vector4d& v)
    {
        return {v[0], v[1], v[2], v[3]};
    }
    static FourVector from_parts(double t, const Eigen::Vector3d& s)
    {
        return {t, s[0], s[1], s[2]};
    }

    bool operator==(const FourVector&) const = default;
};

FourVector operator+(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a);
FourVector operator*(double s, const FourVector& a);

/// Minkowski bilinear form.
double minkowski_dot(const FourVector& a, const FourVector& b);

/// t^2 - x1^2 - x2^2 - x3^2.
double interval(const FourVector& v);

/// Sum of squared components.
double euclidean_norm2(const FourVector& v);

double max_abs_difference(const FourVector& a, const FourVector& b);

/// Parse "t,x1,x2,x3".
FourVector parse_four_vector(std::string_view text);
std::string to_string(const FourVector& v);

//---------------------------------------------------------------------------//
/*!
 * Element of the connected Lorentz group.
 *
 * Construction from a raw matrix checks m^T eta m = eta, det m = +1 and
 * m(0,0) >= 1. Products and inverses of valid transforms are not rechecked.
 */
class LorentzTransform
{
  public:
    LorentzTransform() : m_(Eigen::Matrix4d::Identity()) {}

    static LorentzTransform
    from_matrix(const Eigen::Matrix4d& m, double tol = default_tolerances.group);

    const Eigen::Matrix4d& matrix() const { return m_; }

    /// eta m^T eta
    LorentzTransform inverse() const;

    /// max |m^T eta m - eta|
    double defect() const;

    friend LorentzTransform
    operator*(const LorentzTransform& a, const LorentzTransform& b)
    {
        return LorentzTransform(a.m_ * b.m_);
    }

  private:
    explicit LorentzTransform(const Eigen::Matrix4d& m) : m_(m) {}

    Eigen::Matrix4d m_;
};

const Eigen::Matrix4d& minkowski_metric();

double max_abs_difference(const LorentzTransform& a, const LorentzTransform& b);

/// Pure boost; `direction` must be a unit 3-vector.
LorentzTransform boost(const Eigen::Vector3d& direction, double rapidity);

/// Spatial rotation about a unit axis.
LorentzTransform rotation(const Eigen::Vector3d& axis, double angle);

/// Random rotation composed with a boost of rapidity uniform on [0, max].
LorentzTransform random_lorentz(CounterRng& rng, double max_rapidity = 5.0);
LorentzTransform random_lorentz(std::uint64_t seed, double max_rapidity = 5.0);

/// Boost that carries (|w|, 0, 0, 0) to the timelike vector w.
LorentzTransform rest_frame_boost(const FourVector& w);

FourVector act(const LorentzTransform& g, const FourVector& v);

//---------------------------------------------------------------------------//
// Causal classes and orbits
//---------------------------------------------------------------------------//
enum class CausalClass
{
    Zero,
    TimelikeFuture,
    TimelikePast,
    NullFuture,
    NullPast,
    Spacelike,
};

std::string to_string(CausalClass c);
CausalClass parse_causal_class(std::string_view text);

bool is_timelike(CausalClass c);
bool is_null(CausalClass c);

/// Classify by the sign of the interval; |interval| <= tol selects the
/// null branch, and a vector of Euclidean norm^2 <= tol is Zero.
CausalClass classify(const FourVector& v, double tol = default_tolerances.num);

/*!
 * A Lorentz orbit in Minkowski space.
 *
 * Radius r >= 0 with interval +r^2 on timelike orbits and -r^2 on the
 * spacelike one. Zero and null orbits have r = 0, and only they do. The
 * t^2 - |x|^2 = r^2 sheets (the "spacelike hyperboloids" of the orbit
 * picture, with SU(2) stabilizer) carry the Timelike classes here because
 * their points are timelike vectors.
 */
struct MinkowskiOrbit
{
    CausalClass cls{CausalClass::Zero};
    double radius{0};

    static MinkowskiOrbit make(CausalClass cls, double radius);

    static MinkowskiOrbit future(double r) { return make(CausalClass::TimelikeFuture, r); }
    static MinkowskiOrbit past(double r) { return make(CausalClass::TimelikePast, r); }
    static MinkowskiOrbit zero() { return make(CausalClass::Zero, 0.0); }

    bool operator==(const MinkowskiOrbit&) const = default;
};

std::string to_string(const MinkowskiOrbit& o);

/// Distinguished point of an orbit: (r,0,0,0), (0,r,0,0), (1,1,0,0), ...
FourVector seed_point(const MinkowskiOrbit& o);

/// Classify with a tolerance relative to the vector's scale.
MinkowskiOrbit orbit_of(const FourVector& v, double tol = default_tolerances.num);

/// Rapidity window applied when sampling non-compact orbits.
struct SamplerConfig
{
    double max_rapidity = 5.0;
};

/// One point of `o` from a boosted seed point.
FourVector
sample_orbit_point(const MinkowskiOrbit& o, CounterRng& rng, const SamplerConfig& cfg = {});

/// n points of `o`; point i is drawn from stream i of `seed`.
std::vector<FourVector> sample_orbit(const MinkowskiOrbit& o,
                                     std::size_t n,
                                     std::uint64_t seed,
                                     const SamplerConfig& cfg = {});

//---------------------------------------------------------------------------//
// Orbit sums
//---------------------------------------------------------------------------//
/// Interval of radii, possibly unbounded above.
struct RadiusRange
{
    double lo{0};
    double hi{std::numeric_limits<double>::infinity()};
    bool lo_closed{true};
    bool hi_closed{false};

    bool contains(double r, double tol = default_tolerances.num) const;
    bool is_point() const { return lo == hi; }
    bool operator==(const RadiusRange&) const = default;
};

std::string to_string(const RadiusRange& r);

struct ClassRange
{
    std::size_t count{0};
    double min_radius{std::numeric_limits<double>::infinity()};
    double max_radius{-std::numeric_limits<double>::infinity()};
};

/// Empirical description of the orbit sum O1 + O2.
struct OrbitSumRange
{
    std::size_t samples{0};
    std::map<CausalClass, ClassRange> by_class;
    double min_radius{std::numeric_limits<double>::infinity()};
    double max_radius{-std::numeric_limits<double>::infinity()};
};

/// Sample pairs (u, v) from the two orbits and record orbit_of(u + v).
OrbitSumRange orbit_sum_range(const MinkowskiOrbit& o1,
                              const MinkowskiOrbit& o2,
                              std::size_t n_samples,
                              std::uint64_t seed,
                              const SamplerConfig& cfg = {});

/*!
 * Closed-form causal decomposition of O1 + O2 for timelike or zero orbits.
 *
 * Same time orientation: radii [r1 + r2, inf) in that orientation.
 * Opposite orientations with r1 > r2: timelike (0, r1 - r2] in the
 * orientation of the larger orbit, its null cone, and all spacelike radii;
 * r1 == r2 gives the origin plus all spacelike radii.
 */
std::map<CausalClass, RadiusRange>
timelike_sum_ranges(const MinkowskiOrbit& o1, const MinkowskiOrbit& o2);

}  // namespace poinc
