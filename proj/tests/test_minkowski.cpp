#include <cmath>
#include <numbers>

#include "doctest.h"
#include "poinc/error.hpp"
#include "poinc/minkowski.hpp"

using namespace poinc;

namespace {
const Eigen::Vector3d xhat{1, 0, 0};
const Eigen::Vector3d zhat{0, 0, 1};
}  // namespace

TEST_CASE("interval examples")
{
    CHECK(interval({1, 0, 0, 0}) == 1.0);
    CHECK(interval({1, 1, 0, 0}) == 0.0);
    CHECK(interval({0.3, 1.2, -0.5, 2.0}) == doctest::Approx(-5.60).epsilon(1e-14));
}

TEST_CASE("classify examples")
{
    CHECK(classify({2, 0, 0, 0}) == CausalClass::TimelikeFuture);
    CHECK(classify({-2, 0, 0, 0}) == CausalClass::TimelikePast);
    CHECK(classify({0, 1, 0, 0}) == CausalClass::Spacelike);
    CHECK(classify({-1, 1, 0, 0}) == CausalClass::NullPast);
    CHECK(classify({1, 0, 1, 0}) == CausalClass::NullFuture);
    CHECK(classify({0, 0, 0, 0}) == CausalClass::Zero);
    CHECK_THROWS_AS(classify({1, 0, 0, 0}, 0.0), DomainError);
}

TEST_CASE("boost and rotation")
{
    CHECK(max_abs_difference(boost(xhat, 0), LorentzTransform{}) == 0);
    CHECK(max_abs_difference(rotation(zhat, 2 * std::numbers::pi), LorentzTransform{})
          <= 1e-9);
    auto v = act(boost(xhat, 0.7), {1, 0, 0, 0});
    CHECK(interval(v) == doctest::Approx(1.0).epsilon(1e-14));
    auto w = act(boost(xhat, 1.0), {1, 0, 0, 0});
    CHECK(w.t == doctest::Approx(std::cosh(1.0)));
    CHECK(w.x1 == doctest::Approx(std::sinh(1.0)));
    CHECK(w.x2 == 0);
    CHECK_THROWS_AS(boost({1, 1, 0}, 0.3), DomainError);
    CHECK_THROWS_AS(rotation({0, 0, 2}, 0.3), DomainError);
}

TEST_CASE("from_matrix validation")
{
    Eigen::Matrix4d parity = Eigen::Vector4d(1, -1, 1, 1).asDiagonal();
    CHECK_THROWS_AS(LorentzTransform::from_matrix(parity), DomainError);
    Eigen::Matrix4d reversal = Eigen::Vector4d(-1, -1, 1, 1).asDiagonal();
    CHECK_THROWS_AS(LorentzTransform::from_matrix(reversal), DomainError);
    Eigen::Matrix4d scaled = 2 * Eigen::Matrix4d::Identity();
    CHECK_THROWS_AS(LorentzTransform::from_matrix(scaled), DomainError);
    auto g = random_lorentz(11);
    CHECK(g.defect() <= 1e-9 * g.matrix().cwiseAbs().maxCoeff());
    CHECK(max_abs_difference(g * g.inverse(), LorentzTransform{}) <= 1e-9);
}

TEST_CASE("act basics")
{
    FourVector v{0.4, -1, 2, 0.5};
    CHECK(act(LorentzTransform{}, v) == v);
    CHECK(act(random_lorentz(3), FourVector{}) == FourVector{});
}

TEST_CASE("isometry and group law over random samples")
{
    double worst_iso = 0;
    double worst_law = 0;
    int class_flips = 0;
    for (std::uint64_t i = 0; i < 10000; ++i)
    {
        CounterRng rng(2024, i);
        auto g1 = random_lorentz(rng);
        auto g2 = random_lorentz(rng, 2.0);
        FourVector v{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3),
                     rng.uniform(-3, 3)};
        double s = interval(v);
        FourVector gv = act(g1, v);
        double scale = std::max(1.0, euclidean_norm2(gv));
        worst_iso = std::max(worst_iso, std::abs(interval(gv) - s) / scale / (1 + std::abs(s)));
        FourVector a = act(g1 * g2, v);
        FourVector b = act(g1, act(g2, v));
        worst_law = std::max(worst_law, max_abs_difference(a, b) / std::sqrt(scale));
        if (classify(act(g2, v), 1e-8 * std::max(1.0, euclidean_norm2(act(g2, v))))
            != classify(v, 1e-8 * std::max(1.0, euclidean_norm2(v))))
            ++class_flips;
    }
    CHECK(worst_iso <= 1e-8);
    CHECK(worst_law <= 1e-8);
    CHECK(class_flips == 0);
}

TEST_CASE("orbit_of examples")
{
    CHECK(orbit_of({2, 0, 0, 0}) == MinkowskiOrbit{CausalClass::TimelikeFuture, 2});
    CHECK(orbit_of({0, 0, 0, 0}) == MinkowskiOrbit::zero());
    CHECK(orbit_of({5, 3, 0, 4}) == MinkowskiOrbit{CausalClass::NullFuture, 0});
    CHECK(orbit_of({0, 0, 3, 4}) == MinkowskiOrbit{CausalClass::Spacelike, 5});
}

TEST_CASE("orbit construction rules")
{
    CHECK_THROWS_AS(MinkowskiOrbit::make(CausalClass::Zero, 1), DomainError);
    CHECK_THROWS_AS(MinkowskiOrbit::make(CausalClass::NullPast, 1), DomainError);
    CHECK_THROWS_AS(MinkowskiOrbit::make(CausalClass::Spacelike, 0), DomainError);
    CHECK_THROWS_AS(MinkowskiOrbit::make(CausalClass::TimelikeFuture, -1), DomainError);
    CHECK(parse_causal_class("future") == CausalClass::TimelikeFuture);
    CHECK(parse_four_vector("1, 2,3 ,4") == FourVector{1, 2, 3, 4});
    CHECK_THROWS_AS(parse_four_vector("1,2,3"), DomainError);
}

TEST_CASE("sample_orbit stays on the orbit")
{
    std::vector<MinkowskiOrbit> orbits{MinkowskiOrbit::future(1),
                                       MinkowskiOrbit::past(2.5),
                                       MinkowskiOrbit::make(CausalClass::Spacelike, 0.7),
                                       MinkowskiOrbit::make(CausalClass::NullFuture, 0),
                                       MinkowskiOrbit::make(CausalClass::NullPast, 0)};
    for (auto const& o : orbits)
    {
        CAPTURE(to_string(o));
        auto pts = sample_orbit(o, 500, 9);
        for (auto const& p : pts)
        {
            auto q = orbit_of(p);
            CHECK(q.cls == o.cls);
            CHECK(std::abs(q.radius - o.radius) <= 1e-8 * std::max(1.0, o.radius));
        }
    }
    auto z = sample_orbit(MinkowskiOrbit::zero(), 4, 1);
    CHECK(z.size() == 4);
    CHECK(z[3] == FourVector{});
    CHECK_THROWS_AS(sample_orbit(MinkowskiOrbit::future(1), 0, 1), DomainError);
}

TEST_CASE("sampling is deterministic and t stays above the radius")
{
    auto a = sample_orbit(MinkowskiOrbit::future(1), 100, 77);
    auto b = sample_orbit(MinkowskiOrbit::future(1), 100, 77);
    CHECK(a == b);
    double mean_t = 0;
    for (auto const& p : a)
    {
        CHECK(p.t >= 1.0);
        mean_t += p.t / a.size();
    }
    CHECK(mean_t >= 1.0);
}

TEST_CASE("rest frame boost")
{
    FourVector w{3, 1, -2, 0.5};
    auto g = rest_frame_boost(w);
    auto r = std::sqrt(interval(w));
    CHECK(max_abs_difference(act(g, {r, 0, 0, 0}), w) <= 1e-12);
    CHECK_THROWS_AS(rest_frame_boost({-3, 0, 0, 0}), DomainError);
}

TEST_CASE("orbit sums")
{
    auto s = orbit_sum_range(MinkowskiOrbit::future(1), MinkowskiOrbit::future(2), 20000, 5);
    CHECK(s.by_class.size() == 1);
    CHECK(s.by_class.count(CausalClass::TimelikeFuture) == 1);
    CHECK(s.min_radius >= 3 - 1e-6);
    CHECK(s.max_radius > 10);

    auto z = orbit_sum_range(MinkowskiOrbit::zero(), MinkowskiOrbit::future(1.5), 10, 5);
    CHECK(z.by_class.size() == 1);
    CHECK(z.min_radius == 1.5);
    CHECK(z.max_radius == 1.5);

    auto m = orbit_sum_range(MinkowskiOrbit::future(1), MinkowskiOrbit::past(1), 20000, 5);
    CHECK(m.by_class.count(CausalClass::Spacelike) == 1);
    CHECK(m.min_radius < 0.1);
}

TEST_CASE("closed-form timelike sums")
{
    auto same = timelike_sum_ranges(MinkowskiOrbit::future(1), MinkowskiOrbit::future(2));
    REQUIRE(same.size() == 1);
    CHECK(same.at(CausalClass::TimelikeFuture).lo == 3);
    CHECK(std::isinf(same.at(CausalClass::TimelikeFuture).hi));

    auto opp = timelike_sum_ranges(MinkowskiOrbit::future(1), MinkowskiOrbit::past(3));
    CHECK(opp.at(CausalClass::TimelikePast).hi == 2);
    CHECK(opp.count(CausalClass::NullPast) == 1);
    CHECK(opp.count(CausalClass::Spacelike) == 1);

    auto eq = timelike_sum_ranges(MinkowskiOrbit::future(2), MinkowskiOrbit::past(2));
    CHECK(eq.count(CausalClass::Zero) == 1);
    CHECK(eq.count(CausalClass::Spacelike) == 1);

    auto id = timelike_sum_ranges(MinkowskiOrbit::zero(), MinkowskiOrbit::past(2));
    CHECK(id.at(CausalClass::TimelikePast).is_point());

    CHECK_THROWS_AS(timelike_sum_ranges(MinkowskiOrbit::make(CausalClass::Spacelike, 1),
                                        MinkowskiOrbit::future(1)),
                    UnsupportedError);
}

TEST_CASE("radius range containment")
{
    RadiusRange open{3, std::numeric_limits<double>::infinity(), false, false};
    CHECK(!open.contains(3));
    CHECK(open.contains(3.1));
    RadiusRange closed{0, 2, false, true};
    CHECK(closed.contains(2));
    CHECK(!closed.contains(2.1));
    CHECK(to_string(closed) == "(0, 2]");
}
