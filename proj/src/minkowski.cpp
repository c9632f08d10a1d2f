#include "poinc/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "poinc/error.hpp"
#include "poinc/format.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// FourVector
//---------------------------------------------------------------------------//
double FourVector::operator[](int i) const
{
    switch (i)
    {
        case 0: return t;
        case 1: return x1;
        case 2: return x2;
        case 3: return x3;
    }
    throw DomainError("four-vector index out of range");
}

bool FourVector::is_finite() const
{
    return std::isfinite(t) && std::isfinite(x1) && std::isfinite(x2)
           && std::isfinite(x3);
}

FourVector operator+(const FourVector& a, const FourVector& b)
{
    return {a.t + b.t, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

FourVector operator-(const FourVector& a, const FourVector& b)
{
    return {a.t - b.t, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

FourVector operator-(const FourVector& a)
{
    return {-a.t, -a.x1, -a.x2, -a.x3};
}

FourVector operator*(double s, const FourVector& a)
{
    return {s * a.t, s * a.x1, s * a.x2, s * a.x3};
}

double minkowski_dot(const FourVector& a, const FourVector& b)
{
    return a.t * b.t - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3;
}

double interval(const FourVector& v)
{
    return minkowski_dot(v, v);
}

double euclidean_norm2(const FourVector& v)
{
    return v.t * v.t + v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
}

double max_abs_difference(const FourVector& a, const FourVector& b)
{
    return std::max({std::abs(a.t - b.t),
                     std::abs(a.x1 - b.x1),
                     std::abs(a.x2 - b.x2),
                     std::abs(a.x3 - b.x3)});
}

FourVector parse_four_vector(std::string_view text)
{
    auto parts = split_list(std::string(text), ',');
    if (parts.size() != 4)
        throw DomainError("expected four comma-separated components, got '"
                          + std::string(text) + "'");
    return {parse_number(parts[0]),
            parse_number(parts[1]),
            parse_number(parts[2]),
            parse_number(parts[3])};
}

std::string to_string(const FourVector& v)
{
    return format_number(v.t) + "," + format_number(v.x1) + ","
           + format_number(v.x2) + "," + format_number(v.x3);
}

//---------------------------------------------------------------------------//
// LorentzTransform
//---------------------------------------------------------------------------//
const Eigen::Matrix4d& minkowski_metric()
{
    static const Eigen::Matrix4d eta
        = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
    return eta;
}

LorentzTransform LorentzTransform::from_matrix(const Eigen::Matrix4d& m, double tol)
{
    if (!m.allFinite())
        throw DomainError("Lorentz matrix has non-finite entries");
    LorentzTransform g(m);
    double d = g.defect();
    if (d > tol * std::max(1.0, m.cwiseAbs().maxCoeff()))
        throw DomainError("matrix is not a Lorentz transform (defect "
                          + format_number(d) + ")");
    if (m.determinant() <= 0)
        throw DomainError("Lorentz matrix has negative determinant");
    if (m(0, 0) < 1.0 - tol)
        throw DomainError("Lorentz matrix reverses time orientation");
    return g;
}

LorentzTransform LorentzTransform::inverse() const
{
    auto const& eta = minkowski_metric();
    return LorentzTransform(eta * m_.transpose() * eta);
}

double LorentzTransform::defect() const
{
    auto const& eta = minkowski_metric();
    return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
}

double max_abs_difference(const LorentzTransform& a, const LorentzTransform& b)
{
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

namespace {
void require_unit(const Eigen::Vector3d& v, const char* what)
{
    if (!v.allFinite() || std::abs(v.norm() - 1.0) > default_tolerances.group)
        throw DomainError(std::string(what) + " must be a unit 3-vector");
}
}  // namespace

LorentzTransform boost(const Eigen::Vector3d& direction, double rapidity)
{
    require_unit(direction, "boost direction");
    if (!std::isfinite(rapidity))
        throw DomainError("rapidity must be finite");
    double ch = std::cosh(rapidity);
    double sh = std::sinh(rapidity);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i)
    {
        m(0, i + 1) = sh * direction[i];
        m(i + 1, 0) = sh * direction[i];
        for (int j = 0; j < 3; ++j)
            m(i + 1, j + 1) += (ch - 1.0) * direction[i] * direction[j];
    }
    return LorentzTransform::from_matrix(m);
}

LorentzTransform rotation(const Eigen::Vector3d& axis, double angle)
{
    require_unit(axis, "rotation axis");
    if (!std::isfinite(angle))
        throw DomainError("rotation angle must be finite");
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, axis).toRotationMatrix();
    return LorentzTransform::from_matrix(m);
}

LorentzTransform random_lorentz(CounterRng& rng, double max_rapidity)
{
    auto a = rng.unit_vector();
    double angle = rng.uniform(0.0, 2 * std::numbers::pi);
    auto d = rng.unit_vector();
    double eta = rng.uniform(0.0, max_rapidity);
    return rotation({a[0], a[1], a[2]}, angle) * boost({d[0], d[1], d[2]}, eta);
}

LorentzTransform random_lorentz(std::uint64_t seed, double max_rapidity)
{
    CounterRng rng(seed, 0x4c6f72656e747aULL);
    return random_lorentz(rng, max_rapidity);
}

LorentzTransform rest_frame_boost(const FourVector& w)
{
    double s = interval(w);
    if (!(s > 0) || w.t <= 0)
        throw DomainError("rest-frame boost needs a future timelike vector");
    Eigen::Vector3d p = w.spatial();
    double pn = p.norm();
    if (pn == 0)
        return {};
    return boost(p / pn, std::asinh(pn / std::sqrt(s)));
}

FourVector act(const LorentzTransform& g, const FourVector& v)
{
    return FourVector::from_eigen(g.matrix() * v.to_eigen());
}

//---------------------------------------------------------------------------//
// Causal classes
//---------------------------------------------------------------------------//
std::string to_string(CausalClass c)
{
    switch (c)
    {
        case CausalClass::Zero: return "Zero";
        case CausalClass::TimelikeFuture: return "TimelikeFuture";
        case CausalClass::TimelikePast: return "TimelikePast";
        case CausalClass::NullFuture: return "NullFuture";
        case CausalClass::NullPast: return "NullPast";
        case CausalClass::Spacelike: return "Spacelike";
    }
    return "?";
}

CausalClass parse_causal_class(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    if (s == "zero")
        return CausalClass::Zero;
    if (s == "timelikefuture" || s == "future")
        return CausalClass::TimelikeFuture;
    if (s == "timelikepast" || s == "past")
        return CausalClass::TimelikePast;
    if (s == "nullfuture")
        return CausalClass::NullFuture;
    if (s == "nullpast")
        return CausalClass::NullPast;
    if (s == "spacelike")
        return CausalClass::Spacelike;
    throw DomainError("unknown causal class '" + std::string(text) + "'");
}

bool is_timelike(CausalClass c)
{
    return c == CausalClass::TimelikeFuture || c == CausalClass::TimelikePast;
}

bool is_null(CausalClass c)
{
    return c == CausalClass::NullFuture || c == CausalClass::NullPast;
}

CausalClass classify(const FourVector& v, double tol)
{
    if (!(tol > 0))
        throw DomainError("classification tolerance must be positive");
    double s = interval(v);
    if (std::abs(s) <= tol)
    {
        if (euclidean_norm2(v) <= tol)
            return CausalClass::Zero;
        return v.t > 0 ? CausalClass::NullFuture : CausalClass::NullPast;
    }
    if (s > 0)
        return v.t > 0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
    return CausalClass::Spacelike;
}

MinkowskiOrbit MinkowskiOrbit::make(CausalClass cls, double radius)
{
    if (!std::isfinite(radius) || radius < 0)
        throw DomainError("orbit radius must be finite and non-negative");
    bool radius_zero_class = cls == CausalClass::Zero || is_null(cls);
    if (radius_zero_class && radius != 0)
        throw DomainError(to_string(cls) + " orbit must have radius 0");
    if (!radius_zero_class && radius == 0)
        throw DomainError(to_string(cls) + " orbit needs a positive radius");
    return {cls, radius};
}

std::string to_string(const MinkowskiOrbit& o)
{
    return to_string(o.cls) + "(" + format_number(o.radius) + ")";
}

FourVector seed_point(const MinkowskiOrbit& o)
{
    switch (o.cls)
    {
        case CausalClass::Zero: return {};
        case CausalClass::TimelikeFuture: return {o.radius, 0, 0, 0};
        case CausalClass::TimelikePast: return {-o.radius, 0, 0, 0};
        case CausalClass::NullFuture: return {1, 1, 0, 0};
        case CausalClass::NullPast: return {-1, 1, 0, 0};
        case CausalClass::Spacelike: return {0, o.radius, 0, 0};
    }
    return {};
}

MinkowskiOrbit orbit_of(const FourVector& v, double tol)
{
    double scale = std::max(1.0, euclidean_norm2(v));
    CausalClass cls = classify(v, tol * scale);
    if (cls == CausalClass::Zero || is_null(cls))
        return {cls, 0.0};
    return {cls, std::sqrt(std::abs(interval(v)))};
}

FourVector
sample_orbit_point(const MinkowskiOrbit& o, CounterRng& rng, const SamplerConfig& cfg)
{
    if (!(cfg.max_rapidity >= 0))
        throw DomainError("max_rapidity must be non-negative");
    // Each branch is boost(n, eta) applied to the seed point rotated onto n.
    switch (o.cls)
    {
        case CausalClass::Zero: return {};
        case CausalClass::TimelikeFuture:
        case CausalClass::TimelikePast: {
            auto n = rng.unit_vector();
            double eta = rng.uniform(0.0, cfg.max_rapidity);
            double sign = o.cls == CausalClass::TimelikeFuture ? 1.0 : -1.0;
            double sh = o.radius * std::sinh(eta);
            return {sign * o.radius * std::cosh(eta), sh * n[0], sh * n[1], sh * n[2]};
        }
        case CausalClass::Spacelike: {
            auto n = rng.unit_vector();
            double eta = rng.uniform(-cfg.max_rapidity, cfg.max_rapidity);
            double ch = o.radius * std::cosh(eta);
            return {o.radius * std::sinh(eta), ch * n[0], ch * n[1], ch * n[2]};
        }
        case CausalClass::NullFuture:
        case CausalClass::NullPast: {
            auto n = rng.unit_vector();
            double scale = std::exp(rng.uniform(-cfg.max_rapidity, cfg.max_rapidity));
            double sign = o.cls == CausalClass::NullFuture ? 1.0 : -1.0;
            return {sign * scale, scale * n[0], scale * n[1], scale * n[2]};
        }
    }
    return {};
}

std::vector<FourVector> sample_orbit(const MinkowskiOrbit& o,
                                     std::size_t n,
                                     std::uint64_t seed,
                                     const SamplerConfig& cfg)
{
    if (n == 0)
        throw DomainError("sample_orbit needs n >= 1");
    std::vector<FourVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        CounterRng rng(seed, i);
        out.push_back(sample_orbit_point(o, rng, cfg));
    }
    return out;
}

//---------------------------------------------------------------------------//
// Orbit sums
//---------------------------------------------------------------------------//
bool RadiusRange::contains(double r, double tol) const
{
    bool above = lo_closed ? r >= lo - tol : r > lo + tol;
    bool below = std::isinf(hi) || (hi_closed ? r <= hi + tol : r < hi - tol);
    return above && below;
}

std::string to_string(const RadiusRange& r)
{
    if (r.is_point())
        return "{" + format_number(r.lo) + "}";
    return std::string(r.lo_closed ? "[" : "(") + format_number(r.lo) + ", "
           + format_number(r.hi) + (r.hi_closed && !std::isinf(r.hi) ? "]" : ")");
}

OrbitSumRange orbit_sum_range(const MinkowskiOrbit& o1,
                              const MinkowskiOrbit& o2,
                              std::size_t n_samples,
                              std::uint64_t seed,
                              const SamplerConfig& cfg)
{
    if (n_samples == 0)
        throw DomainError("orbit_sum_range needs at least one sample");
    OrbitSumRange out;
    out.samples = n_samples;

    auto record = [&out](const MinkowskiOrbit& o, std::size_t count) {
        auto& cr = out.by_class[o.cls];
        cr.count += count;
        cr.min_radius = std::min(cr.min_radius, o.radius);
        cr.max_radius = std::max(cr.max_radius, o.radius);
        out.min_radius = std::min(out.min_radius, o.radius);
        out.max_radius = std::max(out.max_radius, o.radius);
    };

    // E_0 is the unit for orbit addition; report the other orbit exactly.
    if (o1.cls == CausalClass::Zero || o2.cls == CausalClass::Zero)
    {
        record(o1.cls == CausalClass::Zero ? o2 : o1, n_samples);
        return out;
    }

    for (std::size_t i = 0; i < n_samples; ++i)
    {
        CounterRng rng(seed, i);
        FourVector u = sample_orbit_point(o1, rng, cfg);
        FourVector v = sample_orbit_point(o2, rng, cfg);
        record(orbit_of(u + v), 1);
    }
    return out;
}

std::map<CausalClass, RadiusRange>
timelike_sum_ranges(const MinkowskiOrbit& o1, const MinkowskiOrbit& o2)
{
    auto supported = [](const MinkowskiOrbit& o) {
        return o.cls == CausalClass::Zero || is_timelike(o.cls);
    };
    if (!supported(o1) || !supported(o2))
        throw UnsupportedError("closed-form orbit sums cover timelike and zero orbits only");

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::map<CausalClass, RadiusRange> out;
    if (o1.cls == CausalClass::Zero || o2.cls == CausalClass::Zero)
    {
        auto const& other = o1.cls == CausalClass::Zero ? o2 : o1;
        out[other.cls] = {other.radius, other.radius, true, true};
        return out;
    }
    if (o1.cls == o2.cls)
    {
        out[o1.cls] = {o1.radius + o2.radius, inf, true, false};
        return out;
    }

    double d = o1.radius - o2.radius;
    double scale = std::max({1.0, o1.radius, o2.radius});
    out[CausalClass::Spacelike] = {0.0, inf, false, false};
    if (std::abs(d) <= default_tolerances.num * scale)
    {
        out[CausalClass::Zero] = {0.0, 0.0, true, true};
        return out;
    }
    CausalClass big = d > 0 ? o1.cls : o2.cls;
    out[big] = {0.0, std::abs(d), false, true};
    CausalClass cone = big == CausalClass::TimelikeFuture ? CausalClass::NullFuture
                                                          : CausalClass::NullPast;
    out[cone] = {0.0, 0.0, true, true};
    return out;
}

}  // namespace poinc
