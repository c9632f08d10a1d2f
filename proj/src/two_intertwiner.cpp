#include "poinc/two_intertwiner.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "poinc/error.hpp"
#include "poinc/random.hpp"
#include "poinc/sphere.hpp"

namespace poinc {

namespace {
std::uint64_t fingerprint_of(const QuadratureGrid& g)
{
    std::uint64_t h = mix64(g.size());
    auto feed = [&h](double v) { h = mix64(h ^ std::bit_cast<std::uint64_t>(v)); };
    for (std::size_t i = 0; i < g.size(); ++i)
    {
        for (int k = 0; k < 4; ++k)
            feed(g.nodes[i][k]);
        feed(g.weights[i]);
    }
    return h;
}

void require_same_grid(const TwoIntertwiner& a, const TwoIntertwiner& b)
{
    if (!a.grid || !b.grid)
        throw DomainError("2-intertwiner without a quadrature grid");
    if (a.grid->fingerprint != b.grid->fingerprint)
        throw ResampleError("fields live on different node sets (" + a.grid->domain + " vs "
                            + b.grid->domain + "); resample one of them");
}

bool same_one_intertwiner(const OneIntertwiner& a, const OneIntertwiner& b)
{
    return a.source == b.source && a.target == b.target
           && support_signature(a) == support_signature(b);
}
}  // namespace

double QuadratureGrid::volume() const
{
    double v = 0;
    for (double w : weights)
        v += w;
    return v;
}

QuadratureGrid sphere_grid(std::size_t n, const Eigen::Matrix3d& rotation, double total_mass)
{
    if (n == 0)
        throw DomainError("sphere grid needs at least one node");
    QuadratureGrid g;
    for (auto const& v : fibonacci_sphere(n, rotation))
        g.nodes.push_back(FourVector::from_parts(0, v));
    g.weights.assign(n, total_mass / static_cast<double>(n));
    g.domain = "S2[" + std::to_string(n) + "]";
    g.fingerprint = fingerprint_of(g);
    return g;
}

QuadratureGrid
hyperboloid_grid(double r, std::size_t n_rapidity, std::size_t n_sphere, double max_rapidity)
{
    if (!(r > 0) || n_rapidity == 0 || n_sphere == 0 || !(max_rapidity > 0))
        throw DomainError("hyperboloid grid needs r > 0, a positive window and nonzero sizes");
    QuadratureGrid g;
    double h = max_rapidity / static_cast<double>(n_rapidity);
    auto dirs = fibonacci_sphere(n_sphere);
    double solid = 4 * std::numbers::pi / static_cast<double>(n_sphere);
    for (std::size_t k = 0; k < n_rapidity; ++k)
    {
        double eta = (static_cast<double>(k) + 0.5) * h;
        double w = r * r * r * std::sinh(eta) * std::sinh(eta) * h * solid;
        for (auto const& d : dirs)
        {
            g.nodes.push_back(FourVector::from_parts(r * std::cosh(eta), r * std::sinh(eta) * d));
            g.weights.push_back(w);
        }
    }
    g.domain = "H3[r=" + std::to_string(r) + ", " + std::to_string(n_rapidity) + "x"
               + std::to_string(n_sphere) + ", eta<=" + std::to_string(max_rapidity) + "]";
    g.fingerprint = fingerprint_of(g);
    return g;
}

double hyperboloid_window_volume(double r, double max_rapidity)
{
    double m = max_rapidity;
    return r * r * r * 4 * std::numbers::pi * (std::sinh(2 * m) / 4 - m / 2);
}

TwoIntertwiner constant_field(std::shared_ptr<const QuadratureGrid> grid, double c)
{
    TwoIntertwiner t;
    t.values = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(grid->size()), c);
    t.grid = std::move(grid);
    return t;
}

TwoIntertwiner sample_field(std::shared_ptr<const QuadratureGrid> grid,
                            const std::function<double(const FourVector&)>& f)
{
    TwoIntertwiner t;
    t.values.resize(static_cast<Eigen::Index>(grid->size()));
    for (std::size_t i = 0; i < grid->size(); ++i)
        t.values[static_cast<Eigen::Index>(i)] = f(grid->nodes[i]);
    if (!t.is_finite())
        throw DomainError("field values must be finite");
    t.grid = std::move(grid);
    return t;
}

TwoIntertwiner compose_2_vertical(const TwoIntertwiner& a, const TwoIntertwiner& b)
{
    require_same_grid(a, b);
    if (a.target && b.source && !same_one_intertwiner(*a.target, *b.source))
        throw DomainError("vertical composition needs target(a) == source(b)");
    TwoIntertwiner c;
    c.grid = a.grid;
    c.values = a.values.cwiseProduct(b.values);
    c.source = a.source;
    c.target = b.target;
    return c;
}

double integrate(const TwoIntertwiner& a)
{
    double s = 0;
    for (std::size_t i = 0; i < a.grid->size(); ++i)
        s += a.grid->weights[i] * a.values[static_cast<Eigen::Index>(i)];
    return s;
}

HorizontalComposite compose_2_horizontal(const TwoIntertwiner& a, const TwoIntertwiner& b)
{
    require_same_grid(a, b);
    HorizontalComposite h;
    h.field.grid = a.grid;
    h.field.values = a.values.cwiseProduct(b.values);
    h.field.source = a.source;
    h.field.target = b.target;
    h.convolution = integrate(h.field);
    h.window_volume = a.grid->volume();
    return h;
}

double max_abs_difference(const TwoIntertwiner& a, const TwoIntertwiner& b)
{
    require_same_grid(a, b);
    return (a.values - b.values).cwiseAbs().maxCoeff();
}

InterchangeReport check_interchange_conditions(const InterchangeGrid& g, double tol)
{
    auto const& c = g.cells;
    for (auto const& row : c)
        for (auto const& cell : row)
            require_same_grid(cell, g.corner);

    // Paste rows first, then columns first.
    TwoIntertwiner by_rows;
    TwoIntertwiner by_cols;
    for (int i = 0; i < 3; ++i)
    {
        auto row = compose_2_horizontal(compose_2_horizontal(c[i][0], c[i][1]).field, c[i][2]).field;
        by_rows = i == 0 ? row : compose_2_vertical(by_rows, row);
        auto col = compose_2_vertical(compose_2_vertical(c[0][i], c[1][i]), c[2][i]);
        by_cols = i == 0 ? col : compose_2_horizontal(by_cols, col).field;
    }
    auto scale = [](const TwoIntertwiner& t) {
        return std::max(1.0, t.values.cwiseAbs().maxCoeff());
    };
    InterchangeReport r;
    r.collapse_residual = std::max({max_abs_difference(by_rows, by_cols),
                                    max_abs_difference(by_rows, g.corner)})
                          / scale(g.corner);

    auto lhs = compose_2_vertical(compose_2_vertical(g.alpha, g.cell_before), g.beta);
    auto rhs = compose_2_vertical(compose_2_vertical(g.beta, g.cell_after), g.alpha);
    r.square_residual = max_abs_difference(lhs, rhs) / scale(rhs);
    r.pass = r.collapse_residual <= tol && r.square_residual <= tol;
    return r;
}

}  // namespace poinc
