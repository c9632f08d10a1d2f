#include <cmath>

#include "doctest.h"
#include "poinc/error.hpp"
#include "poinc/lorentz_algebra.hpp"
#include "poinc/rep_objects.hpp"

using namespace poinc;

namespace {
StabilizerGroup grp(GroupKind k)
{
    return StabilizerGroup::make(k);
}

Irrep E(double r)
{
    return r == 0 ? elementary(MinkowskiOrbit::zero()) : elementary(MinkowskiOrbit::future(r));
}

const DirectIntegralDecomposition& as_decomposition(const TensorResult& t)
{
    REQUIRE(std::holds_alternative<DirectIntegralDecomposition>(t));
    return std::get<DirectIntegralDecomposition>(t);
}
}  // namespace

TEST_CASE("make_irrep examples")
{
    auto base = MinkowskiOrbit::future(1.5);
    auto e = make_irrep(base, grp(GroupKind::SU2));
    CHECK(e.kind == IrrepKind::Elementary);
    CHECK(e.fiber.kind == FiberKind::Point);

    auto s2 = make_irrep(base, grp(GroupKind::U1));
    CHECK(s2.kind == IrrepKind::Lie);
    CHECK(s2.fiber.kind == FiberKind::Sphere2);
    CHECK(s2.fiber.dim == 2);

    auto s3 = make_irrep(base, grp(GroupKind::Trivial));
    CHECK(s3.kind == IrrepKind::Lie);
    CHECK(s3.fiber.kind == FiberKind::Sphere3);
    CHECK(s3.fiber.dim == 3);

    CHECK_THROWS_AS(make_irrep(base, grp(GroupKind::SO2)), DomainError);
    CHECK_THROWS_AS(make_irrep(MinkowskiOrbit::make(CausalClass::Spacelike, 1),
                               grp(GroupKind::U1)),
                    DomainError);
    CHECK_THROWS_AS(StabilizerGroup::cyclic(1), DomainError);
}

TEST_CASE("classify_irrep examples and totality")
{
    CHECK(classify_irrep(E(2)) == IrrepKind::Elementary);
    CHECK(classify_irrep(make_irrep(MinkowskiOrbit::future(1), StabilizerGroup::cyclic(5)))
          == IrrepKind::Crystallographic);
    auto nh = make_irrep(MinkowskiOrbit::make(CausalClass::Spacelike, 2),
                         StabilizerGroup::non_lie("fuchsian"));
    CHECK(classify_irrep(nh) == IrrepKind::NonHausdorff);
    CHECK(nh.fiber.kind == FiberKind::Opaque);

    std::vector<MinkowskiOrbit> bases{MinkowskiOrbit::zero(), MinkowskiOrbit::future(1),
                                      MinkowskiOrbit::past(1),
                                      MinkowskiOrbit::make(CausalClass::Spacelike, 1),
                                      MinkowskiOrbit::make(CausalClass::NullFuture, 0),
                                      MinkowskiOrbit::make(CausalClass::NullPast, 0)};
    std::vector<StabilizerGroup> candidates{
        grp(GroupKind::SL2C), grp(GroupKind::SU2), grp(GroupKind::SO21), grp(GroupKind::E2),
        grp(GroupKind::U1),   grp(GroupKind::SO2), StabilizerGroup::cyclic(3),
        grp(GroupKind::Trivial), StabilizerGroup::non_lie("x")};
    int catalogued = 0;
    for (auto const& b : bases)
        for (auto const& h : candidates)
        {
            if (!is_catalogued_subgroup(stabilizer_of(b), h))
                continue;
            ++catalogued;
            auto i = make_irrep(b, h);
            CHECK_NOTHROW(validate(i));
            auto k = classify_irrep(i);
            CHECK((k == IrrepKind::Elementary) == (i.fiber.kind == FiberKind::Point));
            CHECK((k == IrrepKind::NonHausdorff) == (i.fiber.kind == FiberKind::Opaque));
            if (k == IrrepKind::Lie)
                CHECK(h.is_connected_lie());
        }
    CHECK(catalogued == 5 * 5 + 4);
}

TEST_CASE("stabilizer parsing")
{
    CHECK(parse_stabilizer("U1") == grp(GroupKind::U1));
    CHECK(parse_stabilizer("Z7") == StabilizerGroup::cyclic(7));
    CHECK(parse_stabilizer("NonLie:abc").label == "abc");
    CHECK_THROWS_AS(parse_stabilizer("Z1"), DomainError);
    CHECK_THROWS_AS(parse_stabilizer("Z3x"), DomainError);
    CHECK_THROWS_AS(parse_stabilizer("Spin7"), DomainError);
}

TEST_CASE("fiber templates have the catalogued stabilizer")
{
    std::vector<MinkowskiOrbit> bases{MinkowskiOrbit::zero(), MinkowskiOrbit::future(2),
                                      MinkowskiOrbit::past(1),
                                      MinkowskiOrbit::make(CausalClass::Spacelike, 1.5),
                                      MinkowskiOrbit::make(CausalClass::NullFuture, 0),
                                      MinkowskiOrbit::make(CausalClass::NullPast, 0)};
    for (auto const& b : bases)
    {
        auto g = stabilizer_of(b);
        for (auto h : {g, grp(GroupKind::U1), grp(GroupKind::SO2), grp(GroupKind::SU2),
                       grp(GroupKind::Trivial)})
        {
            if (!is_catalogued_subgroup(g, h))
                continue;
            CAPTURE(to_string(b));
            CAPTURE(to_string(h));
            auto fixed = fiber_templates(b, h);
            fixed.push_back(seed_point(b));
            CHECK(stabilizer_algebra(fixed).cols() == *h.dim());
        }
    }
}

TEST_CASE("equivariance of the standard charts")
{
    std::vector<Irrep> irreps{
        E(2),
        make_irrep(MinkowskiOrbit::future(1), grp(GroupKind::U1)),
        make_irrep(MinkowskiOrbit::past(1), grp(GroupKind::Trivial)),
        make_irrep(MinkowskiOrbit::future(1), StabilizerGroup::cyclic(4)),
        make_irrep(MinkowskiOrbit::make(CausalClass::Spacelike, 1), grp(GroupKind::SO2)),
        make_irrep(MinkowskiOrbit::make(CausalClass::NullFuture, 0), grp(GroupKind::Trivial)),
        make_irrep(MinkowskiOrbit::zero(), grp(GroupKind::SU2)),
    };
    for (auto const& i : irreps)
    {
        CAPTURE(to_string(i));
        auto rep = check_equivariance(i, 200, 4);
        CHECK(rep.pass);
        CHECK(rep.projection_residual <= 1e-8);
        CHECK(rep.frame_residual <= 1e-8);
    }

    auto nh = make_irrep(MinkowskiOrbit::future(1), StabilizerGroup::non_lie("x"));
    CHECK_THROWS_AS(check_equivariance(nh, 10, 1), UnsupportedError);
}

TEST_CASE("a broken chart fails the equivariance check")
{
    auto i = make_irrep(MinkowskiOrbit::future(1), grp(GroupKind::U1));
    auto chart = standard_chart(i);
    auto good_act = chart.act;
    // Transport the frame but forget to move the base point
    chart.act = [good_act](const LorentzTransform& g, const BundlePoint& p) {
        auto q = good_act(g, p);
        q.base = p.base;
        return q;
    };
    auto rep = check_equivariance(i, 50, 2);
    CHECK(rep.pass);
    auto bad = check_equivariance(i, chart, 50, 2);
    CHECK(!bad.pass);
    CHECK(bad.projection_residual > 1e-3);
}

TEST_CASE("elementary tensor products")
{
    auto d = as_decomposition(elementary_tensor(E(1), E(2)));
    REQUIRE(d.continuum.size() == 1);
    REQUIRE(d.discrete.size() == 1);
    CHECK(d.continuum[0].range.lo == 3);
    CHECK(!d.continuum[0].range.lo_closed);
    CHECK(d.continuum[0].fiber.kind == FiberKind::Sphere2);
    CHECK(d.continuum[0].subgroup == grp(GroupKind::U1));
    CHECK(d.discrete[0] == E(3));
    CHECK(d.continuum[0].member(4.5).kind == IrrepKind::Lie);
    CHECK_THROWS_AS(d.continuum[0].member(3.0), DomainError);

    CHECK(as_decomposition(elementary_tensor(E(2), E(1))) == d);

    auto id = as_decomposition(elementary_tensor(E(0), E(1.7)));
    CHECK(id.continuum.empty());
    CHECK(id.discrete == std::vector<Irrep>{E(1.7)});
    CHECK(as_decomposition(elementary_tensor(E(1.7), E(0))) == id);
    auto sp = elementary(MinkowskiOrbit::make(CausalClass::Spacelike, 1));
    CHECK(as_decomposition(elementary_tensor(E(0), sp)).discrete == std::vector<Irrep>{sp});

    auto un = elementary_tensor(E(1), sp);
    REQUIRE(std::holds_alternative<UnsupportedTensor>(un));
    auto const& u = std::get<UnsupportedTensor>(un);
    CHECK(u.histogram.samples == 2000);
    CHECK(!u.histogram.by_class.empty());
    CHECK(!u.reason.empty());

    auto lie = make_irrep(MinkowskiOrbit::future(1), grp(GroupKind::U1));
    CHECK(std::holds_alternative<UnsupportedTensor>(elementary_tensor(lie, E(1))));
}

TEST_CASE("tensor range law against sampling")
{
    for (auto [r1, r2] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}})
    {
        auto d = as_decomposition(elementary_tensor(E(r1), E(r2)));
        auto s = orbit_sum_range(MinkowskiOrbit::future(r1), MinkowskiOrbit::future(r2),
                                 200000, 12, {1.0});
        CHECK(d.continuum[0].range.lo == r1 + r2);
        CHECK(s.min_radius >= r1 + r2 - 1e-6);
        CHECK(s.min_radius - (r1 + r2) <= 1e-3);
    }
}

TEST_CASE("associativity at orbit level")
{
    for (auto [a, b, c] : {std::tuple{1.0, 2.0, 0.5}, {0.3, 0.3, 4.0}})
    {
        // (E_a (x) E_b) (x) E_c: every member r >= a + b tensored with E_c
        auto ab = as_decomposition(elementary_tensor(E(a), E(b))).base_range();
        auto ab_c = as_decomposition(elementary_tensor(E(ab.lo), E(c))).base_range();
        auto bc = as_decomposition(elementary_tensor(E(b), E(c))).base_range();
        auto a_bc = as_decomposition(elementary_tensor(E(a), E(bc.lo))).base_range();
        CHECK(ab.lo_closed);
        CHECK(std::isinf(ab.hi));
        CHECK(ab_c.lo == doctest::Approx(a + b + c).epsilon(1e-15));
        CHECK(a_bc.lo == doctest::Approx(a + b + c).epsilon(1e-15));
        CHECK(ab_c.lo_closed == a_bc.lo_closed);
        CHECK(std::isinf(ab_c.hi));
        CHECK(std::isinf(a_bc.hi));
    }
}

TEST_CASE("triangle fiber examples")
{
    auto generic = triangle_fiber(1, 2, 4, 64, 3);
    CHECK(generic.status == FiberStatus::Generic);
    CHECK(generic.tangent_rank == 2);
    CHECK(generic.transitive);
    CHECK(generic.max_residual <= 1e-12);
    CHECK(generic.samples.size() == 64);

    auto col = triangle_fiber(1, 2, 3, 16, 3);
    CHECK(col.status == FiberStatus::Collinear);
    CHECK(col.tangent_rank == 0);
    CHECK(col.samples.front() == FourVector{1, 0, 0, 0});

    auto empty = triangle_fiber(1, 1, 1.5, 16, 3);
    CHECK(empty.status == FiberStatus::Empty);
    CHECK(empty.samples.empty());
    CHECK(triangle_fiber(3, 1, 1.5, 4, 1).status == FiberStatus::Empty);
    CHECK_THROWS_AS(triangle_fiber(0, 1, 2, 4, 1), DomainError);
}

TEST_CASE("triangle fiber dimension on a parameter grid")
{
    int n = 0;
    for (double r1 : {0.5, 1.0, 2.0, 3.5})
        for (double r2 : {0.25, 1.0, 2.5, 4.0, 6.0})
        {
            ++n;
            double r = r1 + r2;
            CHECK(triangle_fiber(r1, r2, r * 1.3, 32, n).tangent_rank == 2);
            CHECK(triangle_fiber(r1, r2, r, 4, n).tangent_rank == 0);
            CHECK(triangle_fiber(r1, r2, r * 0.9, 4, n).status == FiberStatus::Empty);
        }
    CHECK(n == 20);
}

TEST_CASE("quadrilateral shape space")
{
    auto q = quadrilateral_shape_space(1, 1, 1, 3.5, 200, 8);
    REQUIRE(!q.empty);
    CHECK(q.max_residual <= 1e-10);
    int trivial = 0;
    for (auto const& s : q.samples)
        trivial += s.isotropy == Isotropy::Trivial;
    CHECK(trivial == 200);

    CHECK(quadrilateral_shape_space(1, 1, 1, 2.9, 10, 8).empty);

    // Planar fixture: all edges in the (t, x1) plane
    double eta = 0.4;
    FourVector u1{std::cosh(eta), std::sinh(eta), 0, 0};
    FourVector u2{std::cosh(eta), -std::sinh(eta), 0, 0};
    FourVector u3{1.5, 0, 0, 0};
    CHECK(quadrilateral_isotropy({u1, u2, u3}) == Isotropy::SO2);

    // Fully collinear fixture
    CHECK(quadrilateral_isotropy({{1, 0, 0, 0}, {2, 0, 0, 0}, {0.5, 0, 0, 0}}) == Isotropy::SU2);
    auto deg = quadrilateral_shape_space(1, 1, 1, 3, 5, 1);
    REQUIRE(!deg.empty);
    for (auto const& s : deg.samples)
    {
        CHECK(s.isotropy == Isotropy::SU2);
        CHECK(s.measure_zero);
    }
}

TEST_CASE("dual")
{
    auto e = E(2);
    CHECK(dual(dual(e)) == e);
    CHECK(dual(E(0)) == E(0));
    CHECK(dual(e).base.cls == CausalClass::TimelikePast);
    CHECK(dual(e).kind == IrrepKind::Elementary);
    auto lie = make_irrep(MinkowskiOrbit::make(CausalClass::NullFuture, 0), grp(GroupKind::SO2));
    CHECK(dual(lie).base.cls == CausalClass::NullPast);
    CHECK(dual(dual(lie)) == lie);
}

TEST_CASE("hom decomposition")
{
    auto h = hom_decomposition(E(2), E(2), E(0));
    CHECK(h.consistent);
    CHECK(h.tensor_side.nonempty);
    CHECK(h.dual_side.nonempty);
    CHECK(h.tensor_side.range->is_point());
    CHECK(h.tensor_side.range->lo == 2);

    auto off = hom_decomposition(E(3), E(2), E(0));
    CHECK(off.consistent);
    CHECK(!off.tensor_side.nonempty);

    auto g = hom_decomposition(E(4), E(1), E(2));
    CHECK(g.consistent);
    CHECK(g.tensor_side.structure_dim == 2);
    CHECK(g.dual_side.structure_dim == 2);
    CHECK(g.range_gap <= 1e-9);

    auto b = hom_decomposition(E(3), E(1), E(2));
    CHECK(b.consistent);
    CHECK(b.tensor_side.structure_dim == 0);

    auto below = hom_decomposition(E(2.5), E(1), E(2));
    CHECK(below.consistent);
    CHECK(!below.tensor_side.nonempty);

    CHECK(hom_decomposition(E(0), E(1), E(2)).consistent);
    CHECK(hom_decomposition(E(1), E(0), E(1)).consistent);
    CHECK(hom_decomposition(E(0), E(0), E(0)).consistent);

    auto lie = make_irrep(MinkowskiOrbit::future(1), grp(GroupKind::U1));
    CHECK_THROWS_AS(hom_decomposition(lie, E(1), E(1)), UnsupportedError);
}
