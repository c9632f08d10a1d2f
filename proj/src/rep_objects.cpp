#include "poinc/rep_objects.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "poinc/error.hpp"
#include "poinc/format.hpp"
#include "poinc/lorentz_algebra.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// Stabilizer groups
//---------------------------------------------------------------------------//
StabilizerGroup StabilizerGroup::cyclic(int n)
{
    if (n < 2)
        throw DomainError("cyclic stabilizer needs n >= 2");
    return {GroupKind::CyclicZn, n, {}};
}

StabilizerGroup StabilizerGroup::non_lie(std::string label)
{
    return {GroupKind::NonLie, 0, std::move(label)};
}

std::optional<int> StabilizerGroup::dim() const
{
    switch (kind)
    {
        case GroupKind::SL2C: return 6;
        case GroupKind::SU2:
        case GroupKind::SO21:
        case GroupKind::E2: return 3;
        case GroupKind::U1:
        case GroupKind::SO2: return 1;
        case GroupKind::CyclicZn:
        case GroupKind::Trivial: return 0;
        case GroupKind::NonLie: return std::nullopt;
    }
    return std::nullopt;
}

bool StabilizerGroup::is_connected_lie() const
{
    return kind != GroupKind::CyclicZn && kind != GroupKind::NonLie;
}

std::string to_string(const StabilizerGroup& g)
{
    switch (g.kind)
    {
        case GroupKind::SL2C: return "SL2C";
        case GroupKind::SU2: return "SU2";
        case GroupKind::SO21: return "SO21";
        case GroupKind::E2: return "E2";
        case GroupKind::U1: return "U1";
        case GroupKind::SO2: return "SO2";
        case GroupKind::CyclicZn: return "Z" + std::to_string(g.n);
        case GroupKind::Trivial: return "Trivial";
        case GroupKind::NonLie: return "NonLie:" + g.label;
    }
    return "?";
}

StabilizerGroup parse_stabilizer(std::string_view text)
{
    std::string s = trim(std::string(text));
    static const std::pair<const char*, GroupKind> names[] = {
        {"SL2C", GroupKind::SL2C}, {"SU2", GroupKind::SU2},   {"SO21", GroupKind::SO21},
        {"E2", GroupKind::E2},     {"U1", GroupKind::U1},     {"SO2", GroupKind::SO2},
        {"Trivial", GroupKind::Trivial},
    };
    for (auto const& [name, kind] : names)
        if (s == name)
            return StabilizerGroup::make(kind);
    if (s.rfind("NonLie", 0) == 0)
    {
        auto colon = s.find(':');
        return StabilizerGroup::non_lie(colon == std::string::npos ? "" : s.substr(colon + 1));
    }
    if (s.size() > 1 && s[0] == 'Z')
    {
        int n = 0;
        try
        {
            std::size_t used = 0;
            n = std::stoi(s.substr(1), &used);
            if (used != s.size() - 1)
                n = 0;
        }
        catch (const std::exception&)
        {
            n = 0;
        }
        if (n >= 2)
            return StabilizerGroup::cyclic(n);
    }
    throw DomainError("unknown stabilizer group '" + s + "'");
}

StabilizerGroup stabilizer_of(const MinkowskiOrbit& o)
{
    switch (o.cls)
    {
        case CausalClass::Zero: return StabilizerGroup::make(GroupKind::SL2C);
        case CausalClass::TimelikeFuture:
        case CausalClass::TimelikePast: return StabilizerGroup::make(GroupKind::SU2);
        case CausalClass::Spacelike: return StabilizerGroup::make(GroupKind::SO21);
        case CausalClass::NullFuture:
        case CausalClass::NullPast: return StabilizerGroup::make(GroupKind::E2);
    }
    return {};
}

bool is_catalogued_subgroup(const StabilizerGroup& g, const StabilizerGroup& h)
{
    if (h.kind == GroupKind::NonLie || h == g || h.kind == GroupKind::Trivial)
        return g.kind != GroupKind::NonLie;
    switch (g.kind)
    {
        case GroupKind::SU2:
            return h.kind == GroupKind::U1 || h.kind == GroupKind::CyclicZn;
        case GroupKind::SO21:
        case GroupKind::E2:
            return h.kind == GroupKind::SO2 || h.kind == GroupKind::CyclicZn;
        case GroupKind::SL2C: return h.kind == GroupKind::SU2;
        default: return false;
    }
}

//---------------------------------------------------------------------------//
// Fibers and irreps
//---------------------------------------------------------------------------//
std::string to_string(const FiberSpace& f)
{
    switch (f.kind)
    {
        case FiberKind::Point: return "Point";
        case FiberKind::Sphere2: return "S2";
        case FiberKind::Sphere3: return "S3";
        case FiberKind::QuotientOf:
            return to_string(f.group) + "/" + to_string(f.subgroup);
        case FiberKind::Opaque: return "Opaque";
    }
    return "?";
}

FiberSpace fiber_for(const StabilizerGroup& g, const StabilizerGroup& h)
{
    if (!is_catalogued_subgroup(g, h))
        throw DomainError(to_string(h) + " is not a catalogued subgroup of " + to_string(g));
    if (h == g)
        return {FiberKind::Point, g, h, 0};
    if (h.kind == GroupKind::NonLie)
        return {FiberKind::Opaque, g, h, -1};
    int d = *g.dim() - *h.dim();
    if (g.kind == GroupKind::SU2 && h.kind == GroupKind::U1)
        return {FiberKind::Sphere2, g, h, d};
    if (g.kind == GroupKind::SU2 && h.kind == GroupKind::Trivial)
        return {FiberKind::Sphere3, g, h, d};
    return {FiberKind::QuotientOf, g, h, d};
}

std::string to_string(IrrepKind k)
{
    switch (k)
    {
        case IrrepKind::Elementary: return "Elementary";
        case IrrepKind::Lie: return "Lie";
        case IrrepKind::Crystallographic: return "Crystallographic";
        case IrrepKind::NonHausdorff: return "NonHausdorff";
    }
    return "?";
}

std::string to_string(const Irrep& i)
{
    if (i.kind == IrrepKind::Elementary)
        return "E[" + to_string(i.base) + "]";
    return "(" + to_string(i.base) + ", " + to_string(i.subgroup) + ", "
           + to_string(i.fiber) + ")";
}

namespace {
IrrepKind kind_for(const StabilizerGroup& g, const StabilizerGroup& h)
{
    if (h == g)
        return IrrepKind::Elementary;
    if (h.kind == GroupKind::NonLie)
        return IrrepKind::NonHausdorff;
    if (h.kind == GroupKind::CyclicZn)
        return IrrepKind::Crystallographic;
    return IrrepKind::Lie;
}
}  // namespace

Irrep make_irrep(const MinkowskiOrbit& base, const StabilizerGroup& subgroup)
{
    auto o = MinkowskiOrbit::make(base.cls, base.radius);
    auto g = stabilizer_of(o);
    return {o, subgroup, fiber_for(g, subgroup), kind_for(g, subgroup)};
}

Irrep elementary(const MinkowskiOrbit& base)
{
    return make_irrep(base, stabilizer_of(base));
}

IrrepKind classify_irrep(const Irrep& i)
{
    return kind_for(stabilizer_of(i.base), i.subgroup);
}

void validate(const Irrep& i)
{
    auto expected = make_irrep(i.base, i.subgroup);
    if (expected.fiber != i.fiber)
        throw DomainError("irrep fiber disagrees with its subgroup");
    if (expected.kind != i.kind)
        throw DomainError("irrep kind disagrees with its subgroup");
}

Irrep dual(const Irrep& i)
{
    Irrep out = i;
    switch (i.base.cls)
    {
        case CausalClass::TimelikeFuture: out.base.cls = CausalClass::TimelikePast; break;
        case CausalClass::TimelikePast: out.base.cls = CausalClass::TimelikeFuture; break;
        case CausalClass::NullFuture: out.base.cls = CausalClass::NullPast; break;
        case CausalClass::NullPast: out.base.cls = CausalClass::NullFuture; break;
        default: break;
    }
    return out;
}

//---------------------------------------------------------------------------//
// Tensor products
//---------------------------------------------------------------------------//
std::string to_string(MeasureTag m)
{
    return m == MeasureTag::Lebesgue ? "Lebesgue" : "custom";
}

Irrep ContinuumFamily::member(double r) const
{
    if (!range.contains(r))
        throw DomainError("radius " + format_number(r) + " lies outside " + to_string(range));
    return make_irrep(MinkowskiOrbit::make(cls, r), subgroup);
}

RadiusRange DirectIntegralDecomposition::base_range() const
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    RadiusRange out{inf, -inf, false, false};
    auto widen = [&out](double lo, bool lo_closed, double hi, bool hi_closed) {
        if (lo < out.lo)
            out.lo = lo, out.lo_closed = lo_closed;
        else if (lo == out.lo)
            out.lo_closed = out.lo_closed || lo_closed;
        if (hi > out.hi)
            out.hi = hi, out.hi_closed = hi_closed;
        else if (hi == out.hi)
            out.hi_closed = out.hi_closed || hi_closed;
    };
    for (auto const& f : continuum)
        widen(f.range.lo, f.range.lo_closed, f.range.hi, f.range.hi_closed);
    for (auto const& d : discrete)
        widen(d.base.radius, true, d.base.radius, true);
    if (out.hi < out.lo)
        throw DomainError("empty decomposition has no base range");
    return out;
}

std::string to_string(const DirectIntegralDecomposition& d)
{
    std::ostringstream os;
    bool first = true;
    for (auto const& f : d.continuum)
    {
        os << (first ? "" : " + ") << "integral over r in " << to_string(f.range) << " of ("
           << to_string(f.cls) << "(r), " << to_string(f.fiber) << ")";
        first = false;
    }
    for (auto const& i : d.discrete)
    {
        os << (first ? "" : " + ") << to_string(i);
        first = false;
    }
    return os.str();
}

TensorResult elementary_tensor(const Irrep& e1, const Irrep& e2, const TensorOptions& opts)
{
    auto unsupported = [&](std::string reason) -> TensorResult {
        UnsupportedTensor u{e1.base.cls, e2.base.cls, {}, std::move(reason)};
        u.histogram = orbit_sum_range(e1.base, e2.base, opts.histogram_samples, opts.seed);
        return u;
    };
    if (e1.kind != IrrepKind::Elementary || e2.kind != IrrepKind::Elementary)
        return unsupported("tensor products are implemented for elementary irreps only");

    DirectIntegralDecomposition d;
    if (e1.base.cls == CausalClass::Zero)
    {
        d.discrete.push_back(e2);
        return d;
    }
    if (e2.base.cls == CausalClass::Zero)
    {
        d.discrete.push_back(e1);
        return d;
    }
    if (e1.base.cls != CausalClass::TimelikeFuture || e2.base.cls != CausalClass::TimelikeFuture)
        return unsupported("only future timelike pairs are decomposed in closed form");

    double r = e1.base.radius + e2.base.radius;
    auto su2 = StabilizerGroup::make(GroupKind::SU2);
    auto u1 = StabilizerGroup::make(GroupKind::U1);
    d.continuum.push_back({CausalClass::TimelikeFuture,
                           {r, std::numeric_limits<double>::infinity(), false, false},
                           u1,
                           fiber_for(su2, u1),
                           opts.measure});
    d.discrete.push_back(elementary(MinkowskiOrbit::future(r)));
    return d;
}

//---------------------------------------------------------------------------//
// Triangle fiber
//---------------------------------------------------------------------------//
std::string to_string(FiberStatus s)
{
    switch (s)
    {
        case FiberStatus::Empty: return "empty";
        case FiberStatus::Collinear: return "collinear";
        case FiberStatus::Generic: return "generic";
    }
    return "?";
}

namespace {
double orbit_residual(const FourVector& u, double radius)
{
    double bad_orientation = u.t > 0 ? 0.0 : 1.0;
    return std::abs(interval(u) - radius * radius) / std::max(1.0, radius * radius)
           + bad_orientation;
}

/// Rank of the span of J_k u over the spatial rotation generators.
int rotation_orbit_rank(const FourVector& u)
{
    auto const& gens = lorentz_generators();
    Eigen::MatrixXd m(4, 3);
    for (int k = 0; k < 3; ++k)
        m.col(k) = gens[static_cast<std::size_t>(k)] * u.to_eigen();
    return numerical_rank(m, 1e-9);
}
}  // namespace

TriangleFiber
triangle_fiber(double r1, double r2, double r, std::size_t n_samples, std::uint64_t seed)
{
    if (!(r1 > 0) || !(r2 > 0) || !(r > 0) || !std::isfinite(r1 + r2 + r))
        throw DomainError("triangle fiber needs positive finite radii");
    if (n_samples == 0)
        throw DomainError("triangle fiber needs at least one sample");

    TriangleFiber out;
    double scale = std::max(1.0, r);
    double u0 = (r * r + r1 * r1 - r2 * r2) / (2 * r);
    bool collinear = std::abs(r - (r1 + r2)) <= default_tolerances.num * scale;
    double s2 = u0 * u0 - r1 * r1;
    if (!collinear && (r < r1 + r2 || s2 < 0 || r - u0 <= 0))
        return out;

    out.status = collinear ? FiberStatus::Collinear : FiberStatus::Generic;
    out.time_component = collinear ? r1 : u0;
    out.spatial_radius = collinear ? 0.0 : std::sqrt(s2);
    const FourVector target{r, 0, 0, 0};

    out.samples.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i)
    {
        CounterRng rng(seed, i);
        auto n = rng.unit_vector();
        double s = out.spatial_radius;
        FourVector u{out.time_component, s * n[0], s * n[1], s * n[2]};
        out.max_residual = std::max({out.max_residual,
                                     orbit_residual(u, r1),
                                     orbit_residual(target - u, r2)});
        out.samples.push_back(u);
    }

    out.tangent_rank = collinear ? rotation_orbit_rank({r1, 0, 0, 0})
                                 : rotation_orbit_rank(out.samples.front());

    // Every sample must be reached from the first by a rotation fixing the target
    out.transitive = true;
    auto const& u_ref = out.samples.front();
    for (auto const& u : out.samples)
    {
        LorentzTransform g;
        if (out.spatial_radius > 0)
            g = rotation_between(u_ref.spatial().normalized(), u.spatial().normalized());
        double miss = std::max(max_abs_difference(act(g, u_ref), u),
                               max_abs_difference(act(g, target), target));
        if (miss > 1e-9 * scale)
            out.transitive = false;
    }
    return out;
}

//---------------------------------------------------------------------------//
// Quadrilaterals
//---------------------------------------------------------------------------//
std::string to_string(Isotropy i)
{
    switch (i)
    {
        case Isotropy::SU2: return "SU2";
        case Isotropy::SO2: return "SO2";
        case Isotropy::Trivial: return "Trivial";
    }
    return "?";
}

Isotropy quadrilateral_isotropy(const std::vector<FourVector>& edges)
{
    if (edges.empty())
        throw DomainError("polygon needs at least one edge");
    Eigen::MatrixXd m(4, static_cast<Eigen::Index>(edges.size()));
    for (std::size_t k = 0; k < edges.size(); ++k)
        m.col(static_cast<Eigen::Index>(k)) = edges[k].to_eigen();
    // A timelike line is fixed by SU(2), a timelike plane by the rotations
    // about its orthogonal complement, a 3-space only by the identity.
    switch (numerical_rank(m, 1e-8))
    {
        case 0:
        case 1: return Isotropy::SU2;
        case 2: return Isotropy::SO2;
        default: return Isotropy::Trivial;
    }
}

QuadShapeSpace quadrilateral_shape_space(double r1,
                                         double r2,
                                         double r3,
                                         double r,
                                         std::size_t n_samples,
                                         std::uint64_t seed)
{
    for (double x : {r1, r2, r3, r})
        if (!(x > 0) || !std::isfinite(x))
            throw DomainError("quadrilateral needs positive finite radii");
    if (n_samples == 0)
        throw DomainError("quadrilateral needs at least one sample");

    QuadShapeSpace out;
    double r23 = r2 + r3;
    double scale = std::max(1.0, r);
    if (r < r1 + r23 - default_tolerances.num * scale)
        return out;
    out.empty = false;

    const FourVector target{r, 0, 0, 0};
    double cosh_max = std::max(1.0, (r * r + r1 * r1 - r23 * r23) / (2 * r * r1));
    double eta_max = std::acosh(cosh_max);
    for (std::size_t i = 0; i < n_samples; ++i)
    {
        CounterRng rng(seed, i);
        auto n = rng.unit_vector();
        double eta = rng.uniform(0.0, eta_max);
        double sh = r1 * std::sinh(eta);
        FourVector u1{r1 * std::cosh(eta), sh * n[0], sh * n[1], sh * n[2]};
        FourVector w = target - u1;
        double rw = std::sqrt(std::max(0.0, interval(w)));

        FourVector u2;
        if (rw <= r23 * (1 + default_tolerances.num))
        {
            u2 = (r2 / rw) * w;
        }
        else
        {
            auto tri = triangle_fiber(r2, r3, rw, 1, derive_seed(seed, i));
            u2 = act(rest_frame_boost(w), tri.samples.front());
        }
        FourVector u3 = w - u2;

        QuadSample q;
        q.edges = {u1, u2, u3};
        q.isotropy = quadrilateral_isotropy({u1, u2, u3});
        q.shape12 = minkowski_dot(u1, u2);
        q.shape23 = minkowski_dot(u2, u3);
        q.measure_zero = q.isotropy != Isotropy::Trivial;
        out.max_residual = std::max({out.max_residual,
                                     orbit_residual(u1, r1),
                                     orbit_residual(u2, r2),
                                     orbit_residual(u3, r3),
                                     max_abs_difference(u1 + u2 + u3, target) / scale});
        out.samples.push_back(q);
    }
    return out;
}

//---------------------------------------------------------------------------//
// Hom spaces
//---------------------------------------------------------------------------//
namespace {
void require_hom_domain(const Irrep& i)
{
    if (i.kind != IrrepKind::Elementary
        || (i.base.cls != CausalClass::Zero && i.base.cls != CausalClass::TimelikeFuture))
        throw UnsupportedError("Hom decomposition needs elementary irreps over future "
                               "timelike or zero orbits, got "
                               + to_string(i));
}

bool sum_contains(const MinkowskiOrbit& a, const MinkowskiOrbit& bstar, const MinkowskiOrbit& c)
{
    auto ranges = timelike_sum_ranges(a, bstar);
    auto it = ranges.find(c.cls);
    return it != ranges.end() && it->second.contains(c.radius, 0.0);
}

bool decomposition_contains(const DirectIntegralDecomposition& d,
                            const MinkowskiOrbit& a,
                            int* structure_dim)
{
    for (auto const& i : d.discrete)
        if (i.base.cls == a.cls
            && std::abs(i.base.radius - a.radius)
                   <= default_tolerances.num * std::max(1.0, a.radius))
        {
            *structure_dim = 0;
            return true;
        }
    for (auto const& f : d.continuum)
        if (f.cls == a.cls && f.range.contains(a.radius, 0.0))
        {
            *structure_dim = f.fiber.dim;
            return true;
        }
    *structure_dim = -1;
    return false;
}
}  // namespace

HomDecomposition hom_decomposition(const Irrep& a, const Irrep& b, const Irrep& c)
{
    require_hom_domain(a);
    require_hom_domain(b);
    require_hom_domain(c);
    constexpr double inf = std::numeric_limits<double>::infinity();
    HomDecomposition out;

    // Hom(A, B (x) C): where does A occur in the decomposition of B (x) C
    {
        auto& side = out.tensor_side;
        side.description = "Hom(" + to_string(a) + ", " + to_string(b) + " (x) " + to_string(c) + ")";
        auto d = std::get<DirectIntegralDecomposition>(elementary_tensor(b, c));
        DirectIntegralDecomposition future_part;
        for (auto const& f : d.continuum)
            if (f.cls == CausalClass::TimelikeFuture)
                future_part.continuum.push_back(f);
        for (auto const& i : d.discrete)
            if (i.base.cls == CausalClass::TimelikeFuture)
                future_part.discrete.push_back(i);
        if (!future_part.continuum.empty() || !future_part.discrete.empty())
            side.range = future_part.base_range();
        side.nonempty = decomposition_contains(d, a.base, &side.structure_dim);
    }

    // Hom(A (x) B*, C): for which future radii does C occur in O_A + O_B*
    {
        auto& side = out.dual_side;
        Irrep bstar = dual(b);
        side.description = "Hom(" + to_string(a) + " (x) " + to_string(bstar) + ", "
                           + to_string(c) + ")";
        auto contains_at = [&](double ra) {
            return sum_contains(MinkowskiOrbit::future(ra), bstar.base, c.base);
        };
        bool b_zero = b.base.cls == CausalClass::Zero;
        bool c_zero = c.base.cls == CausalClass::Zero;
        if (b_zero && !c_zero)
        {
            if (contains_at(c.base.radius))
                side.range = RadiusRange{c.base.radius, c.base.radius, true, true};
        }
        else if (c_zero && !b_zero)
        {
            if (contains_at(b.base.radius))
                side.range = RadiusRange{b.base.radius, b.base.radius, true, true};
        }
        else if (!b_zero && !c_zero)
        {
            double big = 1e6 * (1 + b.base.radius + c.base.radius);
            if (contains_at(big))
            {
                // Membership is monotone in r_A; bisect for the threshold
                double lo = 0;
                double hi = big;
                for (int it = 0; it < 200 && hi - lo > 0; ++it)
                {
                    double mid = 0.5 * (lo + hi);
                    if (mid <= lo || mid >= hi)
                        break;
                    (mid > 0 && contains_at(mid) ? hi : lo) = mid;
                }
                side.range = RadiusRange{hi, inf, true, false};
            }
        }
        side.nonempty = sum_contains(a.base, bstar.base, c.base);
        if (side.nonempty)
        {
            if (a.base.cls == CausalClass::Zero || b_zero || c_zero)
            {
                side.structure_dim = 0;
            }
            else
            {
                auto tri = triangle_fiber(c.base.radius, b.base.radius, a.base.radius, 8, 0);
                side.structure_dim = tri.status == FiberStatus::Empty ? -1 : tri.tangent_rank;
            }
        }
    }

    auto const& l = out.tensor_side.range;
    auto const& r = out.dual_side.range;
    bool ranges_match = l.has_value() == r.has_value();
    if (l && r)
    {
        out.range_gap = std::abs(l->lo - r->lo);
        if (!(std::isinf(l->hi) && std::isinf(r->hi)))
            out.range_gap = std::max(out.range_gap, std::abs(l->hi - r->hi));
        ranges_match = out.range_gap <= 1e-9 * std::max(1.0, l->lo)
                       && l->is_point() == r->is_point();
    }
    out.consistent = ranges_match && out.tensor_side.nonempty == out.dual_side.nonempty
                     && out.tensor_side.structure_dim == out.dual_side.structure_dim;
    return out;
}

//---------------------------------------------------------------------------//
// Bundle charts
//---------------------------------------------------------------------------//
std::vector<FourVector> fiber_templates(const MinkowskiOrbit& base, const StabilizerGroup& h)
{
    auto g = stabilizer_of(base);
    if (!is_catalogued_subgroup(g, h))
        throw DomainError(to_string(h) + " is not a catalogued subgroup of " + to_string(g));
    if (h.kind == GroupKind::NonLie)
        throw UnsupportedError("non-Lie subgroups have no bundle chart");
    if (h == g)
        return {};
    const FourVector e0{1, 0, 0, 0}, e1{0, 1, 0, 0}, e2{0, 0, 1, 0}, e3{0, 0, 0, 1};
    // Crystallographic fibers are charted through their Trivial cover.
    bool full_frame = h.kind == GroupKind::Trivial || h.kind == GroupKind::CyclicZn;
    switch (base.cls)
    {
        case CausalClass::TimelikeFuture:
        case CausalClass::TimelikePast:
            if (full_frame)
                return {e1, e2, e3};
            return {e3};
        case CausalClass::Spacelike:
        case CausalClass::NullFuture:
        case CausalClass::NullPast:
            if (full_frame)
                return {e0, e2, e3};
            return {e0};
        case CausalClass::Zero:
            if (full_frame)
                return {e0, e1, e2, e3};
            return {e0};
    }
    return {};
}

BundleChart standard_chart(const Irrep& i)
{
    auto templates = fiber_templates(i.base, i.subgroup);
    auto algebra = stabilizer_algebra({seed_point(i.base)});
    BundleChart chart;
    chart.lift = [templates, algebra](const FourVector& p, CounterRng& rng) {
        LorentzTransform g = section(p) * random_stabilizer_element(algebra, rng, 1.0);
        BundlePoint bp{p, {}};
        for (auto const& t : templates)
            bp.frame.push_back(act(g, t));
        return bp;
    };
    chart.project = [](const BundlePoint& bp) { return bp.base; };
    chart.act = [](const LorentzTransform& g, const BundlePoint& bp) {
        BundlePoint out{act(g, bp.base), {}};
        for (auto const& v : bp.frame)
            out.frame.push_back(act(g, v));
        return out;
    };
    return chart;
}

namespace {
Eigen::MatrixXd gram(const FourVector& base, const std::vector<FourVector>& frame)
{
    std::vector<FourVector> all{base};
    all.insert(all.end(), frame.begin(), frame.end());
    auto n = static_cast<Eigen::Index>(all.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = minkowski_dot(all[static_cast<std::size_t>(i)],
                                    all[static_cast<std::size_t>(j)]);
    return m;
}
}  // namespace

EquivarianceReport check_equivariance(const Irrep& i,
                                      const BundleChart& chart,
                                      std::size_t n_samples,
                                      std::uint64_t seed)
{
    if (classify_irrep(i) == IrrepKind::NonHausdorff)
        throw UnsupportedError("equivariance checks need a smooth irrep");
    EquivarianceReport rep;
    rep.samples = n_samples;
    auto templates = fiber_templates(i.base, i.subgroup);
    Eigen::MatrixXd reference = gram(seed_point(i.base), templates);
    SamplerConfig cfg{2.0};
    for (std::size_t k = 0; k < n_samples; ++k)
    {
        CounterRng rng(seed, k);
        FourVector p = sample_orbit_point(i.base, rng, cfg);
        BundlePoint bp = chart.lift(p, rng);
        LorentzTransform g = random_lorentz(rng, cfg.max_rapidity);
        BundlePoint moved = chart.act(g, bp);

        FourVector down = act(g, chart.project(bp));
        double scale = std::max(1.0, std::sqrt(euclidean_norm2(down)));
        rep.projection_residual = std::max(
            rep.projection_residual, max_abs_difference(chart.project(moved), down) / scale);

        for (auto const* q : {&bp, &moved})
        {
            if (q->frame.size() != templates.size())
            {
                rep.frame_residual = std::numeric_limits<double>::infinity();
                continue;
            }
            Eigen::MatrixXd gq = gram(q->base, q->frame);
            double gs = std::max(1.0, reference.cwiseAbs().maxCoeff());
            rep.frame_residual
                = std::max(rep.frame_residual, (gq - reference).cwiseAbs().maxCoeff() / gs);
        }
    }
    rep.pass = rep.projection_residual <= default_tolerances.num
               && rep.frame_residual <= default_tolerances.num;
    return rep;
}

EquivarianceReport
check_equivariance(const Irrep& i, std::size_t n_samples, std::uint64_t seed)
{
    return check_equivariance(i, standard_chart(i), n_samples, seed);
}

}  // namespace poinc
