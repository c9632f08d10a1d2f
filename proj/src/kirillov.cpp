#include "poinc/kirillov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "poinc/error.hpp"
#include "poinc/format.hpp"
#include "poinc/sphere.hpp"

namespace poinc {

namespace {
int levi_civita(std::size_t i, std::size_t j, std::size_t k)
{
    if (i == j || j == k || i == k)
        return 0;
    return ((i + 1) % 3 == j) ? 1 : -1;
}

bool is_half_integer(double x)
{
    return std::isfinite(x) && x >= 0 && 2 * x == std::round(2 * x);
}
}  // namespace

//---------------------------------------------------------------------------//
// LieAlgebraBasis
//---------------------------------------------------------------------------//
LieAlgebraBasis::LieAlgebraBasis(std::size_t dim, std::vector<double> c, std::string name)
    : dim_(dim), c_(std::move(c)), name_(std::move(name))
{
    if (dim_ == 0)
        throw DomainError("Lie algebra dimension must be positive");
    if (c_.size() != dim_ * dim_ * dim_)
        throw DomainError("structure constant array has wrong size");
    for (double v : c_)
        if (!std::isfinite(v))
            throw DomainError("structure constants must be finite");
    double scale = 1.0;
    for (double v : c_)
        scale = std::max(scale, std::abs(v));
    if (antisymmetry_defect() > default_tolerances.num * scale)
        throw DomainError("structure constants are not antisymmetric");
    if (jacobi_defect() > default_tolerances.num * scale * scale)
        throw DomainError("structure constants violate the Jacobi identity");
}

LieAlgebraBasis LieAlgebraBasis::su2()
{
    std::vector<double> c(27, 0.0);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                c[(k * 3 + i) * 3 + j] = levi_civita(i, j, k);
    return {3, std::move(c), "su2"};
}

LieAlgebraBasis LieAlgebraBasis::sl2c()
{
    std::vector<double> c(216, 0.0);
    auto set = [&c](std::size_t k, std::size_t i, std::size_t j, double v) {
        c[(k * 6 + i) * 6 + j] = v;
    };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
            {
                double e = levi_civita(i, j, k);
                if (e == 0)
                    continue;
                set(k, i, j, e);              // [J_i, J_j] = e J_k
                set(k + 3, i, j + 3, e);      // [J_i, K_j] = e K_k
                set(k + 3, i + 3, j, e);      // [K_i, J_j] = e K_k
                set(k, i + 3, j + 3, -e);     // [K_i, K_j] = -e J_k
            }
    return {6, std::move(c), "sl2c"};
}

LieAlgebraBasis LieAlgebraBasis::abelian(std::size_t dim)
{
    return {dim, std::vector<double>(dim * dim * dim, 0.0), "abelian"};
}

double LieAlgebraBasis::antisymmetry_defect() const
{
    double worst = 0;
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                worst = std::max(worst, std::abs(c(k, i, j) + c(k, j, i)));
    return worst;
}

double LieAlgebraBasis::jacobi_defect() const
{
    double worst = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t n = 0; n < dim_; ++n)
                {
                    double sum = 0;
                    for (std::size_t m = 0; m < dim_; ++m)
                        sum += c(m, i, j) * c(n, m, k) + c(m, j, k) * c(n, m, i)
                               + c(m, k, i) * c(n, m, j);
                    worst = std::max(worst, std::abs(sum));
                }
    return worst;
}

//---------------------------------------------------------------------------//
// Brackets
//---------------------------------------------------------------------------//
namespace {
void check_point(const LieAlgebraBasis& basis, const CoadjointPoint& p)
{
    if (static_cast<std::size_t>(p.size()) != basis.dim())
        throw DomainError("coadjoint point has dimension "
                          + std::to_string(p.size()) + ", expected "
                          + std::to_string(basis.dim()));
    if (!p.allFinite())
        throw DomainError("coadjoint point must be finite");
}

void check_index(const LieAlgebraBasis& basis, std::size_t i)
{
    if (i >= basis.dim())
        throw DomainError("basis index " + std::to_string(i) + " out of range");
}
}  // namespace

SmoothFunction coordinate_function(std::size_t i, std::size_t dim)
{
    if (i >= dim)
        throw DomainError("coordinate index out of range");
    return {[i](const CoadjointPoint& p) { return p[static_cast<Eigen::Index>(i)]; },
            [i, dim](const CoadjointPoint&) {
                Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
                g[static_cast<Eigen::Index>(i)] = 1.0;
                return g;
            }};
}

double poisson_bracket(const LieAlgebraBasis& basis,
                       const SmoothFunction& f1,
                       const SmoothFunction& f2,
                       const CoadjointPoint& p)
{
    check_point(basis, p);
    Eigen::VectorXd g1 = f1.gradient(p);
    Eigen::VectorXd g2 = f2.gradient(p);
    auto n = basis.dim();
    if (static_cast<std::size_t>(g1.size()) != n || static_cast<std::size_t>(g2.size()) != n)
        throw DomainError("gradient has the wrong dimension");
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sum += symplectic_eval(basis, i, j, p) * g1[static_cast<Eigen::Index>(i)]
                   * g2[static_cast<Eigen::Index>(j)];
    return sum;
}

Eigen::VectorXd hamiltonian_vector_field(const LieAlgebraBasis& basis,
                                         std::size_t i,
                                         const CoadjointPoint& p)
{
    check_point(basis, p);
    check_index(basis, i);
    auto n = basis.dim();
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j)
    {
        double s = 0;
        for (std::size_t k = 0; k < n; ++k)
            s += basis.c(k, i, j) * p[static_cast<Eigen::Index>(k)];
        v[static_cast<Eigen::Index>(j)] = s;
    }
    return v;
}

double symplectic_eval(const LieAlgebraBasis& basis,
                       std::size_t i,
                       std::size_t j,
                       const CoadjointPoint& p)
{
    check_point(basis, p);
    check_index(basis, i);
    check_index(basis, j);
    double s = 0;
    for (std::size_t k = 0; k < basis.dim(); ++k)
        s += basis.c(k, i, j) * p[static_cast<Eigen::Index>(k)];
    return s;
}

//---------------------------------------------------------------------------//
// su(2)
//---------------------------------------------------------------------------//
namespace {
double flux_sum(const LieAlgebraBasis& su2, double j, std::size_t n)
{
    auto nodes = fibonacci_sphere(n);
    const double area = 4 * std::numbers::pi * j * j / static_cast<double>(n);
    double total = 0;
    for (auto const& u : nodes)
    {
        Eigen::Vector3d x = j * u;
        auto [e1, e2] = tangent_frame(u);
        // Tangent vector e = X x xi for xi = (e x X) / j^2
        Eigen::Vector3d xi1 = e1.cross(x) / (j * j);
        Eigen::Vector3d xi2 = e2.cross(x) / (j * j);
        double omega = 0;
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b)
                    omega += su2.c(k, a, b) * x[k] * xi1[a] * xi2[b];
        total += omega * area;
    }
    return total;
}
}  // namespace

FluxResult su2_flux(double j, std::size_t resolution)
{
    if (!(j > 0) || !std::isfinite(j))
        throw DomainError("flux needs j > 0");
    if (resolution < 16)
        throw DomainError("flux resolution must be at least 16 nodes");
    auto su2 = LieAlgebraBasis::su2();
    FluxResult r;
    r.nodes = resolution;
    r.flux = flux_sum(su2, j, resolution);
    r.coarse_flux = flux_sum(su2, j, std::max<std::size_t>(4, resolution / 4));
    r.converged = std::abs(r.flux - r.coarse_flux) <= 1e-6 * std::abs(r.flux);
    return r;
}

bool SU2OrbitLabel::is_integral() const
{
    return is_half_integer(j);
}

int SU2OrbitLabel::twice() const
{
    if (!is_integral())
        throw DomainError("spin " + format_number(j) + " is not a half-integer");
    return static_cast<int>(std::lround(2 * j));
}

std::vector<SU2OrbitLabel> su2_tensor_decompose(double j, double l)
{
    if (!is_half_integer(j) || !is_half_integer(l))
        throw DomainError("SU(2) labels must be non-negative half-integers");
    int tj = static_cast<int>(std::lround(2 * j));
    int tl = static_cast<int>(std::lround(2 * l));
    std::vector<SU2OrbitLabel> out;
    for (int t = std::abs(tj - tl); t <= tj + tl; t += 2)
        out.push_back({t / 2.0});
    return out;
}

//---------------------------------------------------------------------------//
// SL(2,C)
//---------------------------------------------------------------------------//
SL2C operator*(const SL2C& x, const SL2C& y)
{
    return {x.a * y.a + x.b * y.c,
            x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

SL2C random_sl2c(CounterRng& rng, double scale)
{
    using cd = std::complex<double>;
    // Traceless X = [[p, q], [r, -p]], exp X = cosh(s) + sinh(s)/s X, s^2 = p^2 + qr
    cd p{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
    cd q{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
    cd r{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
    cd s = std::sqrt(p * p + q * r);
    cd ch = std::cosh(s);
    cd shc = std::abs(s) < 1e-8 ? cd(1.0) + s * s / 6.0 : std::sinh(s) / s;
    SL2C g{ch + shc * p, shc * q, shc * r, ch - shc * p};
    cd root = std::sqrt(g.det());
    return {g.a / root, g.b / root, g.c / root, g.d / root};
}

Eigen::Matrix3cd sl2c_adjoint_matrix(const SL2C& g, double tol)
{
    double scale = std::max({1.0, std::norm(g.a), std::norm(g.b), std::norm(g.c),
                             std::norm(g.d)});
    if (!(std::abs(g.det() - 1.0) <= tol * scale))
        throw DomainError("SL(2,C) element must satisfy ad - bc = 1");
    auto const& [a, b, c, d] = g;
    Eigen::Matrix3cd m;
    m << d * d, c * d, c * c,
        2.0 * b * d, a * d + b * c, 2.0 * a * c,
        b * b, a * b, a * a;
    return m;
}

const Eigen::Matrix3cd& sl2c_chart()
{
    static const Eigen::Matrix3cd chart = [] {
        using cd = std::complex<double>;
        const cd i{0, 1};
        Eigen::Matrix3cd m;
        m << 0.0, 1.0, 0.0,
            1.0, 0.0, -1.0,
            i, 0.0, i;
        return m;
    }();
    return chart;
}

Eigen::Matrix<double, 6, 1> to_real_coordinates(const Eigen::Vector3cd& z)
{
    Eigen::Vector3cd w = sl2c_chart() * z;
    Eigen::Matrix<double, 6, 1> p;
    p << w.real(), w.imag();
    return p;
}

Eigen::Vector3cd from_real_coordinates(const Eigen::Matrix<double, 6, 1>& p)
{
    static const Eigen::Matrix3cd inv = sl2c_chart().inverse();
    Eigen::Vector3cd w;
    for (int k = 0; k < 3; ++k)
        w[k] = {p[k], p[k + 3]};
    return inv * w;
}

Eigen::Matrix<double, 6, 1> act_real(const SL2C& g, const Eigen::Matrix<double, 6, 1>& p)
{
    return to_real_coordinates(sl2c_adjoint_matrix(g) * from_real_coordinates(p));
}

OrbitInvariants orbit_invariants(const Eigen::Matrix<double, 6, 1>& p)
{
    auto x = p.head<3>();
    auto y = p.tail<3>();
    return {x.squaredNorm() - y.squaredNorm(), x.dot(y)};
}

OrbitLabelSL2C orbit_label_from_invariants(double i1, double i2)
{
    if (!std::isfinite(i1) || !std::isfinite(i2))
        throw DomainError("orbit invariants must be finite");
    // (n + i rho)^2 = I1 + 2 i I2
    std::complex<double> z = std::sqrt(std::complex<double>(i1, 2 * i2));
    double n = z.real();
    double rho = z.imag();
    if (n < 0 || (n == 0 && rho < 0))
    {
        n = -n;
        rho = -rho;
    }
    return {n + 0.0, rho + 0.0};
}

OrbitInvariants label_invariants(const OrbitLabelSL2C& l)
{
    return {l.n * l.n - l.rho * l.rho, l.n * l.rho};
}

bool SL2CTensorDescriptor::admits(double m, double tol) const
{
    double f = m - m_residue;
    return std::abs(f - std::round(f)) <= tol;
}

std::vector<double> SL2CTensorDescriptor::m_values(double lo, double hi) const
{
    std::vector<double> out;
    for (double m = std::ceil(lo - m_residue) + m_residue; m <= hi; m += 1.0)
        out.push_back(m);
    return out;
}

SL2CTensorDescriptor
sl2c_tensor_decompose(const OrbitLabelSL2C& l1, const OrbitLabelSL2C& l2)
{
    if (!l1.is_canonical() || !l2.is_canonical())
        throw DomainError("SL(2,C) labels must be canonical");
    // Literal reading of the index rule: m + n1 + n2 integral
    double s = -(l1.n + l2.n);
    double frac = s - std::floor(s);
    if (std::abs(frac) <= default_tolerances.num || std::abs(frac - 1) <= default_tolerances.num)
        frac = 0;
    return {frac, true};
}

std::string to_string(const SL2CTensorDescriptor& d)
{
    return "sum over m in " + format_number(d.m_residue) + " + Z of integral over rho";
}

}  // namespace poinc
