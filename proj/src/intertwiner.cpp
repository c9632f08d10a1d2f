#include "poinc/intertwiner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/SVD>

#include "poinc/error.hpp"
#include "poinc/kirillov.hpp"
#include "poinc/lorentz_algebra.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// Bridges
//---------------------------------------------------------------------------//
namespace {
bool is_circle(const StabilizerGroup& g)
{
    return g.kind == GroupKind::U1 || g.kind == GroupKind::SO2;
}

StabilizerGroup intersect_same_axis(const StabilizerGroup& g,
                                    const StabilizerGroup& a,
                                    const StabilizerGroup& b)
{
    if (a == g)
        return b;
    if (b == g || a == b)
        return a;
    if (a.kind == GroupKind::Trivial || b.kind == GroupKind::Trivial)
        return StabilizerGroup::make(GroupKind::Trivial);
    if (is_circle(a) && b.is_discrete())
        return b;
    if (is_circle(b) && a.is_discrete())
        return a;
    if (a.is_discrete() && b.is_discrete())
    {
        int n = std::gcd(a.n, b.n);
        return n >= 2 ? StabilizerGroup::cyclic(n) : StabilizerGroup::make(GroupKind::Trivial);
    }
    throw DomainError("no intersection entry for " + to_string(a) + " and " + to_string(b));
}
}  // namespace

Bridge bridge(const StabilizerGroup& g,
              const StabilizerGroup& h1,
              const StabilizerGroup& h2,
              bool same_axis)
{
    for (auto const* h : {&h1, &h2})
    {
        if (h->kind == GroupKind::NonLie)
            throw UnsupportedError("bridges over non-Lie subgroups are not tabulated");
        if (!is_catalogued_subgroup(g, *h))
            throw DomainError(to_string(*h) + " is not a catalogued subgroup of " + to_string(g));
    }
    if (!same_axis)
        throw UnsupportedError("only the same-axis intersection table is shipped");
    Bridge b{g, h1, h2, intersect_same_axis(g, h1, h2), 0};
    b.dim = *g.dim() - *b.intersection.dim();
    return b;
}

int numerical_bridge_dimension(const MinkowskiOrbit& base,
                               const StabilizerGroup& h1,
                               const StabilizerGroup& h2,
                               std::uint64_t seed)
{
    auto templates = fiber_templates(base, h1);
    auto more = fiber_templates(base, h2);
    templates.insert(templates.end(), more.begin(), more.end());
    Eigen::MatrixXd algebra = stabilizer_algebra({seed_point(base)});

    // Work at a generic point of the bridge rather than the origin coset.
    CounterRng rng(seed, 0);
    LorentzTransform g = random_stabilizer_element(algebra, rng, 1.0);
    for (auto& t : templates)
        t = act(g, t);

    auto const& gens = lorentz_generators();
    Eigen::MatrixXd tangent(4 * std::max<std::size_t>(templates.size(), 1), algebra.cols());
    tangent.setZero();
    for (Eigen::Index c = 0; c < algebra.cols(); ++c)
    {
        Eigen::Matrix4d x = Eigen::Matrix4d::Zero();
        for (int k = 0; k < 6; ++k)
            x += algebra(k, c) * gens[k];
        for (std::size_t i = 0; i < templates.size(); ++i)
            tangent.block<4, 1>(4 * i, c) = x * templates[i].to_eigen();
    }
    return numerical_rank(tangent, 1e-8);
}

//---------------------------------------------------------------------------//
// Cocycles
//---------------------------------------------------------------------------//
CocycleField constant_cocycle(double c)
{
    return {[c](const LorentzTransform&, const FourVector&) { return c; },
            "constant " + std::to_string(c)};
}

CocycleField random_cocycle_field(std::uint64_t seed)
{
    CounterRng rng(seed, 0);
    Eigen::Vector4d a;
    Eigen::Matrix4d b;
    for (int i = 0; i < 4; ++i)
        a[i] = rng.uniform(-1, 1);
    for (int i = 0; i < 16; ++i)
        b(i) = rng.uniform(-0.5, 0.5);
    return {[a, b](const LorentzTransform& g, const FourVector& x) {
                return 1.0 + 0.5 * std::sin(a.dot(x.to_eigen()) + b.cwiseProduct(g.matrix()).sum());
            },
            "random " + std::to_string(seed)};
}

std::vector<CocycleSample> sample_cocycle_triples(const MinkowskiOrbit& o,
                                                  std::size_t n,
                                                  std::uint64_t seed,
                                                  double max_rapidity)
{
    std::vector<CocycleSample> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        CounterRng rng(seed, i);
        CocycleSample s;
        s.g1 = random_lorentz(rng, max_rapidity);
        s.g2 = random_lorentz(rng, max_rapidity);
        s.x = sample_orbit_point(o, rng, {max_rapidity});
        out.push_back(s);
    }
    return out;
}

CocycleReport
cocycle_check(const CocycleField& field, const std::vector<CocycleSample>& samples, double tol)
{
    CocycleReport r;
    r.samples = samples.size();
    for (auto const& s : samples)
    {
        double lhs = field.n(s.g1, s.x) * field.n(s.g2, act(s.g1, s.x));
        double rhs = field.n(s.g2 * s.g1, s.x);
        double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        if (!std::isfinite(res))
            res = std::numeric_limits<double>::infinity();
        r.max_residual = std::max(r.max_residual, res);
    }
    r.pass = r.max_residual <= tol;
    return r;
}

namespace {
// 1, t, x1, x2, x3, then the 10 quadratic monomials
Eigen::Matrix<double, 1, 15> monomials(const FourVector& p)
{
    Eigen::Matrix<double, 1, 15> m;
    Eigen::Vector4d v = p.to_eigen();
    m(0) = 1;
    for (int i = 0; i < 4; ++i)
        m(1 + i) = v[i];
    int k = 5;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            m(k++) = v[i] * v[j];
    return m;
}
}  // namespace

SelfIntertwinerReport
elementary_self_intertwiners(const Irrep& e, std::size_t n_samples, std::uint64_t seed)
{
    if (classify_irrep(e) != IrrepKind::Elementary)
        throw DomainError("self-intertwiner analysis needs an Elementary irrep, got " + to_string(e));
    const double rap = 1.5;
    const auto n = static_cast<Eigen::Index>(n_samples);

    Eigen::MatrixXd invariance(n, 15);
    Eigen::MatrixXd eval(n, 15);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        FourVector x = sample_orbit_point(e.base, rng, {rap});
        LorentzTransform g = random_lorentz(rng, rap);
        invariance.row(i) = monomials(act(g, x)) - monomials(x);
        eval.row(i) = monomials(x);
    }
    // Equilibrate columns so the rank cut does not depend on units.
    Eigen::VectorXd scale = eval.colwise().norm().transpose();
    for (Eigen::Index c = 0; c < 15; ++c)
    {
        double s = scale[c] > 0 ? 1.0 / scale[c] : 1.0;
        invariance.col(c) *= s;
        eval.col(c) *= s;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(invariance, Eigen::ComputeFullV);
    auto const& sv = svd.singularValues();
    double cut = 1e-9 * std::max(1.0, sv.size() ? sv[0] : 0.0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > cut)
        ++rank;
    Eigen::MatrixXd null = svd.matrixV().rightCols(15 - rank);

    SelfIntertwinerReport r;
    r.samples = n_samples;
    Eigen::MatrixXd values = eval * null;
    r.solution_dim = null.cols() ? numerical_rank(values, 1e-8) : 0;

    if (r.solution_dim > 0)
    {
        // Dominant left singular direction is the field on the samples.
        Eigen::JacobiSVD<Eigen::MatrixXd> fsvd(values, Eigen::ComputeThinU);
        Eigen::VectorXd f = fsvd.matrixU().col(0);
        double mean = f.mean();
        f /= mean;
        r.normalized_value = f.mean();
        r.variation = (f.array() - 1.0).abs().maxCoeff();
    }
    auto triples = sample_cocycle_triples(e.base, n_samples, derive_seed(seed, 1), rap);
    r.constant_check = cocycle_check(constant_cocycle(1.0), triples);
    return r;
}

//---------------------------------------------------------------------------//
// 1-intertwiners
//---------------------------------------------------------------------------//
namespace {
StabilizerGroup pair_isotropy(const DiscreteFiber& a,
                              const DiscreteFiber& b,
                              std::pair<std::size_t, std::size_t> p)
{
    std::vector<FourVector> vs;
    for (auto const& v : a.points[p.first])
        vs.push_back(FourVector::from_parts(0, v));
    for (auto const& v : b.points[p.second])
        vs.push_back(FourVector::from_parts(0, v));
    // Rotations only: the rank of J_k acting on the vectors.
    auto const& gens = lorentz_generators();
    Eigen::MatrixXd tangent = Eigen::MatrixXd::Zero(4 * std::max<std::size_t>(vs.size(), 1), 3);
    for (int k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < vs.size(); ++i)
            tangent.block<4, 1>(4 * i, k) = gens[k] * vs[i].to_eigen();
    switch (numerical_rank(tangent, 1e-8))
    {
        case 0: return StabilizerGroup::make(GroupKind::SU2);
        case 2: return StabilizerGroup::make(GroupKind::U1);
        default: return StabilizerGroup::make(GroupKind::Trivial);
    }
}

double pair_invariant(const DiscreteFiber& a,
                      const DiscreteFiber& b,
                      std::pair<std::size_t, std::size_t> p)
{
    auto const& u = a.points[p.first];
    auto const& v = b.points[p.second];
    if (u.empty() || v.empty())
        return 1.0;
    double c = u.front().dot(v.front());
    return std::abs(c) < 1e-12 ? 0.0 : c;
}

std::shared_ptr<const DiscreteFiber> fiber_model(const Irrep& i)
{
    return std::make_shared<const DiscreteFiber>(discretize_fiber(i));
}

// Orbits of a fiber pair, each tagged with its invariant and isotropy.
std::vector<SupportComponent> orbit_components(const DiscreteFiber& a, const DiscreteFiber& b)
{
    std::vector<SupportComponent> out;
    for (auto& orbit : pair_orbits(a, b))
    {
        SupportComponent c;
        c.invariant = pair_invariant(a, b, orbit.front());
        c.isotropy = pair_isotropy(a, b, orbit.front());
        c.pairs = std::move(orbit);
        out.push_back(std::move(c));
    }
    return out;
}

MeasureTag compose_measure(MeasureTag a, MeasureTag b)
{
    return (a == MeasureTag::Lebesgue && b == MeasureTag::Lebesgue) ? MeasureTag::Lebesgue
                                                                      : MeasureTag::Custom;
}
}  // namespace

Eigen::MatrixXd OneIntertwiner::dims() const
{
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(source_fiber ? source_fiber->size() : 1),
        static_cast<Eigen::Index>(target_fiber ? target_fiber->size() : 1));
    for (auto const& c : support)
        for (auto [i, j] : c.pairs)
            d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c.hilbert_dim;
    return d;
}

OneIntertwiner zero_intertwiner(const Irrep& source, const Irrep& target)
{
    OneIntertwiner z;
    z.source = source;
    z.target = target;
    return z;
}

OneIntertwiner build_strong_intertwiner(const Irrep& source,
                                        const Irrep& target,
                                        const std::vector<int>& hilbert_dims,
                                        MeasureTag measure)
{
    validate(source);
    validate(target);
    if (!(source.base == target.base))
    {
        auto z = zero_intertwiner(source, target);
        z.measure = measure;
        return z;
    }
    OneIntertwiner f;
    f.source = source;
    f.target = target;
    f.measure = measure;
    f.source_fiber = fiber_model(source);
    f.target_fiber = fiber_model(target);
    f.support = orbit_components(*f.source_fiber, *f.target_fiber);

    if (hilbert_dims.size() > 1 && hilbert_dims.size() != f.support.size())
        throw DomainError("expected " + std::to_string(f.support.size())
                          + " Hilbert dimensions, got " + std::to_string(hilbert_dims.size()));
    for (std::size_t k = 0; k < f.support.size(); ++k)
    {
        int d = hilbert_dims.empty() ? 1 : hilbert_dims[hilbert_dims.size() == 1 ? 0 : k];
        if (d < 0)
            throw DomainError("Hilbert dimensions must be nonnegative");
        f.support[k].hilbert_dim = d;
    }
    std::erase_if(f.support, [](const SupportComponent& c) { return c.hilbert_dim == 0; });
    return f;
}

OneIntertwiner identity_intertwiner(const Irrep& x)
{
    auto f = build_strong_intertwiner(x, x);
    std::erase_if(f.support, [](const SupportComponent& c) {
        return std::none_of(c.pairs.begin(), c.pairs.end(),
                            [](auto const& p) { return p.first == p.second; });
    });
    return f;
}

OneIntertwiner promote_weak(const OneIntertwiner& i,
                            const std::vector<std::vector<double>>& labels)
{
    if (labels.size() != i.support.size())
        throw DomainError("expected one label list per support component ("
                          + std::to_string(i.support.size()) + "), got "
                          + std::to_string(labels.size()));
    OneIntertwiner w = i;
    w.weak = true;
    for (std::size_t k = 0; k < labels.size(); ++k)
    {
        auto& c = w.support[k];
        int dim = 0;
        switch (c.isotropy.kind)
        {
            case GroupKind::U1:
                for (double q : labels[k])
                {
                    if (q != std::round(q))
                        throw DomainError("U1 charges must be integers");
                    ++dim;
                }
                break;
            case GroupKind::SU2:
                for (double j : labels[k])
                {
                    SU2OrbitLabel s{j};
                    if (j < 0 || 2 * j != s.twice())
                        throw DomainError("SU2 spins must be nonnegative half-integers");
                    dim += s.dimension();
                }
                break;
            default:
                if (!labels[k].empty())
                    throw DomainError("component with " + to_string(c.isotropy)
                                      + " isotropy takes no labels");
                dim = c.hilbert_dim;
        }
        c.weak_labels = labels[k];
        c.hilbert_dim = dim;
    }
    std::erase_if(w.support, [](const SupportComponent& c) { return c.hilbert_dim == 0; });
    return w;
}

OneIntertwiner compose_1(const OneIntertwiner& f, const OneIntertwiner& g)
{
    if (!(f.target == g.source))
        throw DomainError("cannot compose: " + to_string(f.target) + " != " + to_string(g.source));
    OneIntertwiner h = zero_intertwiner(f.source, g.target);
    h.measure = compose_measure(f.measure, g.measure);
    h.weak = f.weak || g.weak;
    if (f.is_zero() || g.is_zero())
        return h;

    h.source_fiber = f.source_fiber;
    h.target_fiber = g.target_fiber;
    Eigen::MatrixXd d = f.dims() * g.dims();
    for (auto& c : orbit_components(*h.source_fiber, *h.target_fiber))
    {
        auto [i0, j0] = c.pairs.front();
        double v = d(static_cast<Eigen::Index>(i0), static_cast<Eigen::Index>(j0));
        for (auto [i, j] : c.pairs)
            if (d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != v)
                throw Error("relative product is not invariant on a support orbit");
        if (v == 0)
            continue;
        c.hilbert_dim = static_cast<int>(v);
        h.support.push_back(std::move(c));
    }
    return h;
}

std::vector<std::tuple<std::size_t, double, int>> support_signature(const OneIntertwiner& i)
{
    std::vector<std::tuple<std::size_t, double, int>> sig;
    for (auto const& c : i.support)
        sig.emplace_back(c.pairs.size(), c.invariant, c.hilbert_dim);
    std::sort(sig.begin(), sig.end());
    return sig;
}

namespace {
constexpr std::size_t max_product_fiber = 1024;

DiscreteFiber product_fiber(const DiscreteFiber& a, const DiscreteFiber& b)
{
    DiscreteFiber p;
    p.space = a.space;
    for (auto const& u : a.points)
        for (auto const& v : b.points)
        {
            auto pt = u;
            pt.insert(pt.end(), v.begin(), v.end());
            p.points.push_back(std::move(pt));
        }
    for (std::size_t g = 0; g < a.perms.size(); ++g)
    {
        std::vector<std::size_t> perm(p.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                perm[i * b.size() + j] = a.perms[g][i] * b.size() + b.perms[g][j];
        p.perms.push_back(std::move(perm));
    }
    return p;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    Eigen::MatrixXd k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

Eigen::MatrixXd identity_dims(const Irrep& x)
{
    return identity_intertwiner(x).dims();
}
}  // namespace

TensorIntertwiner tensor_1(const OneIntertwiner& f,
                           const OneIntertwiner& g,
                           std::optional<Eigen::MatrixXd> interchange)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("tensor_1 needs nonzero intertwiners");
    std::size_t rows = f.source_fiber->size() * g.source_fiber->size();
    std::size_t cols = f.target_fiber->size() * g.target_fiber->size();
    if (rows > max_product_fiber || cols > max_product_fiber)
        throw UnsupportedError("product fiber exceeds " + std::to_string(max_product_fiber)
                               + " points");

    Eigen::MatrixXd df = f.dims();
    Eigen::MatrixXd dg = g.dims();
    // (X2 (x) g)(f (x) Y1) and (f (x) Y2)(X1 (x) g) as relative products
    Eigen::MatrixXd fg = kron(df, identity_dims(g.source)) * kron(identity_dims(f.target), dg);
    Eigen::MatrixXd gf = kron(identity_dims(f.source), dg) * kron(df, identity_dims(g.target));

    TensorIntertwiner t;
    t.strict_defect = (fg - gf).cwiseAbs().maxCoeff();
    t.cell = interchange.value_or(Eigen::MatrixXd::Ones(fg.rows(), fg.cols()));
    if (t.cell.rows() != fg.rows() || t.cell.cols() != fg.cols())
        throw DomainError("interchange cell has the wrong shape");

    auto src = product_fiber(*f.source_fiber, *g.source_fiber);
    auto tgt = product_fiber(*f.target_fiber, *g.target_fiber);
    for (auto const& orbit : pair_orbits(src, tgt))
    {
        auto [i0, j0] = orbit.front();
        if (fg(static_cast<Eigen::Index>(i0), static_cast<Eigen::Index>(j0)) == 0)
            continue;
        ++t.components;
        double c0 = t.cell(static_cast<Eigen::Index>(i0), static_cast<Eigen::Index>(j0));
        if (c0 == 0)
            throw DomainError("interchange cell vanishes on the support");
        for (auto [i, j] : orbit)
            if (std::abs(t.cell(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - c0)
                > default_tolerances.num * std::max(1.0, std::abs(c0)))
                throw DomainError("interchange cell is not invariant on a support orbit");
    }
    t.order_fg = fg;
    t.order_gf = gf.cwiseProduct(t.cell);
    return t;
}

}  // namespace poinc
