#include <cmath>
#include <numbers>

#include "doctest.h"
#include "poinc/error.hpp"
#include "poinc/intertwiner.hpp"
#include "poinc/sphere.hpp"
#include "poinc/two_intertwiner.hpp"

using namespace poinc;

namespace {
const auto SU2 = StabilizerGroup::make(GroupKind::SU2);
const auto U1 = StabilizerGroup::make(GroupKind::U1);
const auto Triv = StabilizerGroup::make(GroupKind::Trivial);

Irrep sphere_irrep(double r)
{
    return make_irrep(MinkowskiOrbit::future(r), U1);
}
}  // namespace

TEST_CASE("bridge table")
{
    auto b = bridge(SU2, SU2, SU2);
    CHECK(b.intersection == SU2);
    CHECK(b.dim == 0);

    b = bridge(SU2, U1, U1);
    CHECK(b.intersection == U1);
    CHECK(b.dim == 2);

    b = bridge(SU2, U1, Triv);
    CHECK(b.intersection == Triv);
    CHECK(b.dim == 3);

    CHECK(bridge(SU2, U1, StabilizerGroup::cyclic(6)).intersection == StabilizerGroup::cyclic(6));
    CHECK(bridge(SU2, StabilizerGroup::cyclic(4), StabilizerGroup::cyclic(6)).intersection
          == StabilizerGroup::cyclic(2));
    CHECK(bridge(SU2, StabilizerGroup::cyclic(3), StabilizerGroup::cyclic(5)).intersection
          == Triv);
    CHECK(bridge(StabilizerGroup::make(GroupKind::SL2C), SU2, SU2).dim == 3);

    CHECK_THROWS_AS(bridge(SU2, StabilizerGroup::non_lie("x"), U1), UnsupportedError);
    CHECK_THROWS_AS(bridge(SU2, U1, U1, false), UnsupportedError);
    CHECK_THROWS_AS(bridge(SU2, StabilizerGroup::make(GroupKind::SO2), U1), DomainError);
}

TEST_CASE("bridge dimension matches the tangent rank")
{
    auto o = MinkowskiOrbit::future(1.3);
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        CHECK(numerical_bridge_dimension(o, U1, U1, s) == bridge(SU2, U1, U1).dim);
        CHECK(numerical_bridge_dimension(o, U1, Triv, s) == bridge(SU2, U1, Triv).dim);
        CHECK(numerical_bridge_dimension(o, SU2, SU2, s) == 0);
    }
    auto sl = StabilizerGroup::make(GroupKind::SL2C);
    CHECK(numerical_bridge_dimension(MinkowskiOrbit::zero(), sl, SU2) == bridge(sl, sl, SU2).dim);
}

TEST_CASE("icosahedral fiber model")
{
    CHECK(icosahedral_group().size() == 60);
    auto s2 = discretize_fiber(sphere_irrep(1));
    CHECK(s2.size() == 12);
    // equal, antipodal, adjacent and the remaining pairs
    CHECK(pair_orbits(s2, s2).size() == 4);
    auto s3 = discretize_fiber(make_irrep(MinkowskiOrbit::future(1), Triv));
    CHECK(s3.size() == 60);
    CHECK(pair_orbits(s3, s3).size() == 60);
    CHECK(pair_orbits(s2, s3).size() == 12);
    CHECK_THROWS_AS(discretize_fiber(make_irrep(MinkowskiOrbit::make(CausalClass::Spacelike, 1),
                                                StabilizerGroup::make(GroupKind::SO2))),
                    UnsupportedError);
}

TEST_CASE("cocycle condition")
{
    auto o = MinkowskiOrbit::future(1.0);
    auto triples = sample_cocycle_triples(o, 200, 7);

    auto one = cocycle_check(constant_cocycle(1.0), triples);
    CHECK(one.pass);
    CHECK(one.max_residual == 0.0);
    CHECK(one.samples == 200);

    auto two = cocycle_check(constant_cocycle(2.0), triples);
    CHECK_FALSE(two.pass);
    CHECK(two.max_residual == doctest::Approx(1.0));

    // a genuine coboundary f(gx)/f(x) does satisfy the condition
    CocycleField cob{[](const LorentzTransform& g, const FourVector& x) {
                         return act(g, x).t / x.t;
                     },
                     "coboundary"};
    CHECK(cocycle_check(cob, triples, 1e-10).pass);

    double weakest = 1e300;
    for (std::uint64_t s = 0; s < 100; ++s)
    {
        auto r = cocycle_check(random_cocycle_field(s), triples);
        CHECK_FALSE(r.pass);
        weakest = std::min(weakest, r.max_residual);
    }
    CHECK(weakest > 1e-3);
}

TEST_CASE("elementary self-intertwiners are the constants")
{
    for (double r : {0.5, 1.0, 3.0})
    {
        auto rep = elementary_self_intertwiners(elementary(MinkowskiOrbit::future(r)));
        CHECK(rep.solution_dim == 1);
        CHECK(rep.normalized_value == doctest::Approx(1.0));
        CHECK(rep.variation < 1e-9);
        CHECK(rep.constant_check.pass);
        CHECK(rep.constant_check.max_residual == 0.0);
    }
    CHECK(elementary_self_intertwiners(elementary(MinkowskiOrbit::zero())).solution_dim == 1);
    CHECK_THROWS_AS(elementary_self_intertwiners(sphere_irrep(1)), DomainError);
}

TEST_CASE("strong intertwiners")
{
    auto e = elementary(MinkowskiOrbit::future(2));
    auto f = build_strong_intertwiner(e, e);
    REQUIRE(f.support.size() == 1);
    CHECK(f.support[0].hilbert_dim == 1);
    CHECK(f.support[0].isotropy == SU2);

    auto s = build_strong_intertwiner(sphere_irrep(2), sphere_irrep(2), {1, 2, 3, 4});
    REQUIRE(s.support.size() == 4);
    std::vector<double> inv;
    for (auto const& c : s.support)
    {
        inv.push_back(c.invariant);
        auto [i, j] = c.pairs.front();
        CHECK(std::abs(c.invariant) == doctest::Approx(std::abs(
                  s.source_fiber->points[i][0].dot(s.target_fiber->points[j][0]))));
        bool collinear = std::abs(std::abs(c.invariant) - 1) < 1e-12;
        CHECK(c.isotropy == (collinear ? U1 : Triv));
    }
    std::sort(inv.begin(), inv.end());
    CHECK(inv.front() == doctest::Approx(-1));
    CHECK(inv.back() == doctest::Approx(1));

    CHECK(build_strong_intertwiner(e, elementary(MinkowskiOrbit::future(3))).is_zero());
    CHECK(build_strong_intertwiner(sphere_irrep(1), sphere_irrep(2)).is_zero());
    CHECK_THROWS_AS(build_strong_intertwiner(sphere_irrep(2), sphere_irrep(2), {1, 2}), DomainError);
}

TEST_CASE("weak promotion")
{
    auto s = build_strong_intertwiner(sphere_irrep(1), sphere_irrep(1));
    std::vector<std::vector<double>> labels;
    for (auto const& c : s.support)
        labels.push_back(c.isotropy == U1 ? std::vector<double>{-1, 0, 2} : std::vector<double>{});
    auto w = promote_weak(s, labels);
    CHECK(w.weak);
    for (auto const& c : w.support)
        CHECK(c.hilbert_dim == (c.isotropy == U1 ? 3 : 1));

    labels[0] = {0.5};
    if (s.support[0].isotropy == U1)
        CHECK_THROWS_AS(promote_weak(s, labels), DomainError);

    auto e = elementary(MinkowskiOrbit::future(1));
    auto ee = build_strong_intertwiner(e, e);
    auto we = promote_weak(ee, {{0, 0.5, 1}});
    CHECK(we.support[0].hilbert_dim == 1 + 2 + 3);
    CHECK_THROWS_AS(promote_weak(ee, {{0.3}}), DomainError);
    CHECK_THROWS_AS(promote_weak(ee, {}), DomainError);
}

TEST_CASE("composition of 1-intertwiners")
{
    auto x = sphere_irrep(1.5);
    auto id = identity_intertwiner(x);
    REQUIRE(id.support.size() == 1);
    CHECK(id.dims() == Eigen::MatrixXd::Identity(12, 12));

    auto f = build_strong_intertwiner(x, x, {1, 2, 3, 5});
    CHECK(support_signature(compose_1(f, id)) == support_signature(f));
    CHECK(support_signature(compose_1(id, f)) == support_signature(f));

    auto g = build_strong_intertwiner(x, x, {2, 1, 1, 1});
    auto h = build_strong_intertwiner(x, x, {1, 0, 4, 1});
    auto left = compose_1(compose_1(f, g), h);
    auto right = compose_1(f, compose_1(g, h));
    CHECK(support_signature(left) == support_signature(right));
    CHECK(left.dims() == right.dims());
    CHECK(left.dims() == f.dims() * g.dims() * h.dims());

    auto e = elementary(MinkowskiOrbit::future(1));
    auto c = compose_1(build_strong_intertwiner(e, e, {2}), build_strong_intertwiner(e, e, {3}));
    REQUIRE(c.support.size() == 1);
    CHECK(c.support[0].hilbert_dim == 6);

    auto z = zero_intertwiner(x, x);
    CHECK(compose_1(f, z).is_zero());
    CHECK(compose_1(z, f).is_zero());
    CHECK_THROWS_AS(compose_1(f, build_strong_intertwiner(e, e)), DomainError);

    // composites of smooth irreps stay smooth
    auto t = make_irrep(MinkowskiOrbit::future(1.5), Triv);
    auto m = compose_1(build_strong_intertwiner(x, t), build_strong_intertwiner(t, x));
    CHECK(m.source.kind != IrrepKind::NonHausdorff);
    CHECK(m.target.kind != IrrepKind::NonHausdorff);
    CHECK(m.support.size() == 4);
}

TEST_CASE("tensor of 1-intertwiners")
{
    auto x = sphere_irrep(1);
    auto e = elementary(MinkowskiOrbit::future(2));
    auto idx = identity_intertwiner(x);
    auto ide = identity_intertwiner(e);

    auto t = tensor_1(idx, idx);
    CHECK(t.strict_defect == 0);
    CHECK(t.order_fg == Eigen::MatrixXd::Identity(144, 144));
    CHECK(t.order_gf == t.order_fg);
    CHECK(tensor_1(idx, ide).order_fg == Eigen::MatrixXd::Identity(12, 12));

    auto f = build_strong_intertwiner(x, x, {1, 2, 1, 3});
    auto g = build_strong_intertwiner(e, e, {4});
    auto strict = tensor_1(f, g);
    CHECK(strict.strict_defect == 0);
    CHECK(strict.order_gf == strict.order_fg);

    // an invariant cell: a function of the source-target cosine
    Eigen::MatrixXd cell(12, 12);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            cell(i, j) = 2 + icosahedron_vertices()[i].dot(icosahedron_vertices()[j]);
    auto weak = tensor_1(f, g, cell);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            if (weak.order_fg(i, j) != 0)
                CHECK(weak.order_gf(i, j) / weak.order_fg(i, j) == doctest::Approx(cell(i, j)));

    Eigen::MatrixXd bad = cell;
    bad(0, 0) += 1;
    CHECK_THROWS_AS(tensor_1(f, g, bad), DomainError);
    auto s3 = identity_intertwiner(make_irrep(MinkowskiOrbit::future(1), Triv));
    CHECK_THROWS_AS(tensor_1(s3, s3), UnsupportedError);
}

TEST_CASE("quadrature grids")
{
    auto s = sphere_grid(256);
    CHECK(s.volume() == doctest::Approx(4 * std::numbers::pi));
    CHECK(s.fingerprint != sphere_grid(256, random_rotation(1, 0)).fingerprint);
    CHECK(s.fingerprint == sphere_grid(256).fingerprint);

    for (double r : {0.5, 1.0, 2.0})
    {
        auto h = hyperboloid_grid(r, 400, 64, 3.0);
        double exact = hyperboloid_window_volume(r, 3.0);
        CHECK(std::abs(h.volume() - exact) / exact < 1e-4);
        for (auto const& n : h.nodes)
            CHECK(std::sqrt(interval(n)) == doctest::Approx(r));
    }
}

TEST_CASE("2-intertwiner compositions")
{
    auto grid = std::make_shared<const QuadratureGrid>(hyperboloid_grid(1.0, 40, 64, 2.0));
    auto field = [&](double a, double b) {
        return sample_field(grid, [a, b](const FourVector& x) {
            return 1 + 0.3 * std::sin(a * x.x1 + b * x.x3) / (1 + x.t);
        });
    };
    auto a = field(1, 2);
    auto b = field(-0.5, 1);
    auto c = field(2, 0.3);
    auto unit = constant_field(grid, 1.0);

    CHECK(max_abs_difference(compose_2_vertical(a, unit), a) == 0);
    CHECK(max_abs_difference(compose_2_vertical(unit, a), a) == 0);
    CHECK(max_abs_difference(compose_2_vertical(compose_2_vertical(a, b), c),
                             compose_2_vertical(a, compose_2_vertical(b, c)))
          <= 1e-15);

    auto h = compose_2_horizontal(constant_field(grid, 2.0), constant_field(grid, 3.0));
    CHECK(h.convolution == doctest::Approx(6 * h.window_volume).epsilon(1e-12));
    CHECK(h.window_volume == doctest::Approx(grid->volume()));
    CHECK(std::abs(h.window_volume - hyperboloid_window_volume(1.0, 2.0))
          / hyperboloid_window_volume(1.0, 2.0) < 1e-3);

    double hl = compose_2_horizontal(compose_2_horizontal(a, b).field, c).convolution;
    double hr = compose_2_horizontal(a, compose_2_horizontal(b, c).field).convolution;
    CHECK(std::abs(hl - hr) <= 1e-12 * std::abs(hl));

    // (a v b) h (c v d) against (a h c) v (b h d)
    auto d = field(0.7, -1.1);
    auto lhs = compose_2_horizontal(compose_2_vertical(a, b), compose_2_vertical(c, d));
    auto rhs_field = compose_2_vertical(compose_2_horizontal(a, c).field,
                                        compose_2_horizontal(b, d).field);
    CHECK(std::abs(lhs.convolution - integrate(rhs_field)) <= 1e-10 * std::abs(lhs.convolution));

    auto zero = constant_field(grid, 0.0);
    CHECK(compose_2_vertical(a, zero).values.isZero());
    CHECK(compose_2_horizontal(zero, a).convolution == 0);

    auto other = std::make_shared<const QuadratureGrid>(hyperboloid_grid(1.0, 41, 64, 2.0));
    CHECK_THROWS_AS(compose_2_vertical(a, constant_field(other, 1)), ResampleError);
    CHECK_THROWS_AS(compose_2_horizontal(a, constant_field(other, 1)), ResampleError);

    auto x = sphere_irrep(1);
    auto f = std::make_shared<const OneIntertwiner>(identity_intertwiner(x));
    auto g = std::make_shared<const OneIntertwiner>(build_strong_intertwiner(x, x));
    auto af = a;
    af.target = f;
    auto bg = b;
    bg.source = g;
    CHECK_THROWS_AS(compose_2_vertical(af, bg), DomainError);
    bg.source = f;
    CHECK_NOTHROW(compose_2_vertical(af, bg));
}

TEST_CASE("interchange conditions")
{
    auto grid = std::make_shared<const QuadratureGrid>(sphere_grid(128));
    InterchangeGrid ig;
    auto unit = constant_field(grid, 1.0);
    for (auto& row : ig.cells)
        row.fill(unit);
    ig.corner = ig.alpha = ig.beta = ig.cell_before = ig.cell_after = unit;
    auto r = check_interchange_conditions(ig);
    CHECK(r.pass);
    CHECK(r.collapse_residual == 0);
    CHECK(r.square_residual == 0);

    double corner = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
        {
            double v = 1 + 0.1 * (3 * i + j);
            ig.cells[i][j] = constant_field(grid, v);
            corner *= v;
        }
    ig.corner = constant_field(grid, corner);
    ig.alpha = constant_field(grid, 1.7);
    ig.beta = constant_field(grid, 0.4);
    ig.cell_before = ig.cell_after = constant_field(grid, 2.5);
    r = check_interchange_conditions(ig);
    CHECK(r.pass);
    CHECK(r.collapse_residual <= default_tolerances.num);

    auto bumped = ig;
    bumped.cells[1][2].values[5] += 1e-3;
    CHECK_FALSE(check_interchange_conditions(bumped).pass);
    bumped = ig;
    bumped.cell_after.values[0] *= 1.01;
    CHECK_FALSE(check_interchange_conditions(bumped).pass);

    bumped = ig;
    bumped.cells[0][0] = constant_field(std::make_shared<const QuadratureGrid>(sphere_grid(64)), 1);
    CHECK_THROWS_AS(check_interchange_conditions(bumped), ResampleError);
}
