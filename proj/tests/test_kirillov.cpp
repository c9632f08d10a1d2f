#include <cmath>
#include <map>

#include "doctest.h"
#include "poinc/error.hpp"
#include "poinc/kirillov.hpp"
#include "support/oracles.hpp"

using namespace poinc;

using Vec6 = Eigen::Matrix<double, 6, 1>;

TEST_CASE("shipped structure constants")
{
    for (auto const& b : {LieAlgebraBasis::su2(), LieAlgebraBasis::sl2c(),
                          LieAlgebraBasis::abelian(4)})
    {
        CAPTURE(b.name());
        CHECK(b.antisymmetry_defect() == 0);
        CHECK(b.jacobi_defect() <= 1e-12);
    }
    std::vector<double> bad(27, 0.0);
    bad[(2 * 3 + 0) * 3 + 1] = 1.0;  // c^2_01 without c^2_10 = -1
    CHECK_THROWS_AS(LieAlgebraBasis(3, bad), DomainError);
    CHECK_THROWS_AS(LieAlgebraBasis(3, std::vector<double>(8)), DomainError);
}

TEST_CASE("poisson bracket examples")
{
    auto su2 = LieAlgebraBasis::su2();
    CoadjointPoint p(3);
    p << 0, 0, 1;
    auto x1 = coordinate_function(0, 3);
    auto x2 = coordinate_function(1, 3);
    CHECK(poisson_bracket(su2, x1, x2, p) == 1.0);
    CHECK(poisson_bracket(su2, x2, x1, p) == -1.0);
    CHECK(poisson_bracket(su2, x1, x1, p) == 0.0);

    SmoothFunction quad{[](const CoadjointPoint& q) { return q.squaredNorm(); },
                        [](const CoadjointPoint& q) { return Eigen::VectorXd(2 * q); }};
    CoadjointPoint r(3);
    r << 0.3, -1.1, 0.7;
    CHECK(poisson_bracket(su2, quad, quad, r) == doctest::Approx(0.0));
    // Casimir |X|^2 Poisson-commutes with everything
    CHECK(std::abs(poisson_bracket(su2, quad, x1, r)) <= 1e-14);

    auto ab = LieAlgebraBasis::abelian(3);
    CHECK(poisson_bracket(ab, x1, x2, r) == 0.0);
}

TEST_CASE("hamiltonian vector field")
{
    auto su2 = LieAlgebraBasis::su2();
    CoadjointPoint zero = CoadjointPoint::Zero(3);
    CHECK(hamiltonian_vector_field(su2, 1, zero).norm() == 0);
    CoadjointPoint p(3);
    p << 1, 0, 0;
    auto v = hamiltonian_vector_field(su2, 2, p);
    CHECK(v[2] == 0);
    CHECK(v.norm() == doctest::Approx(1.0));
    CHECK(hamiltonian_vector_field(LieAlgebraBasis::abelian(3), 0, p).norm() == 0);
    CHECK_THROWS_AS(hamiltonian_vector_field(su2, 3, p), DomainError);
    CHECK_THROWS_AS(hamiltonian_vector_field(su2, 0, CoadjointPoint::Zero(2)), DomainError);
}

TEST_CASE("symplectic form matches brackets of coordinates")
{
    auto su2 = LieAlgebraBasis::su2();
    CoadjointPoint p(3);
    p << 0, 0, 2.5;
    CHECK(symplectic_eval(su2, 0, 1, p) == 2.5);
    CHECK(symplectic_eval(su2, 1, 1, p) == 0.0);

    for (auto const& basis : {LieAlgebraBasis::su2(), LieAlgebraBasis::sl2c()})
    {
        auto n = basis.dim();
        double worst = 0;
        for (std::uint64_t s = 0; s < 1000; ++s)
        {
            CounterRng rng(31, s);
            CoadjointPoint q(static_cast<Eigen::Index>(n));
            for (std::size_t k = 0; k < n; ++k)
                q[static_cast<Eigen::Index>(k)] = rng.uniform(-5, 5);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                {
                    double a = poisson_bracket(basis, coordinate_function(i, n),
                                               coordinate_function(j, n), q);
                    double b = symplectic_eval(basis, i, j, q);
                    worst = std::max(worst, std::abs(a - b));
                    worst = std::max(worst, std::abs(b + symplectic_eval(basis, j, i, q)));
                }
        }
        CHECK(worst == 0);
    }
}

TEST_CASE("su2 flux")
{
    auto half = su2_flux(0.5, 10000);
    CHECK(half.flux > 0);
    CHECK(half.converged);
    CHECK(su2_flux(1.0, 10000).flux / half.flux == doctest::Approx(2.0).epsilon(1e-10));
    for (int tj = 1; tj <= 8; ++tj)
    {
        double ratio = su2_flux(tj / 2.0, 10000).flux / half.flux;
        CHECK(std::abs(ratio - tj) <= 1e-4);
    }
    double odd = su2_flux(0.3, 10000).flux / half.flux;
    CHECK(std::abs(odd - std::round(odd)) > 1e-4);
    CHECK_THROWS_AS(su2_flux(0.0, 1000), DomainError);
    CHECK_THROWS_AS(su2_flux(1.0, 8), DomainError);
}

TEST_CASE("su2 tensor decomposition")
{
    auto shells = su2_tensor_decompose(0.5, 0.5);
    REQUIRE(shells.size() == 2);
    CHECK(shells[0].j == 0);
    CHECK(shells[1].j == 1);
    CHECK(su2_tensor_decompose(1.5, 0) == std::vector<SU2OrbitLabel>{{1.5}});
    int dims = 0;
    for (auto s : su2_tensor_decompose(1, 2))
        dims += s.dimension();
    CHECK(dims == 15);
    CHECK_THROWS_AS(su2_tensor_decompose(0.3, 1), DomainError);
    CHECK_THROWS_AS(su2_tensor_decompose(-1, 1), DomainError);
}

TEST_CASE("su2 decomposition matches weight multiplicities")
{
    for (int tj = 0; tj <= 8; ++tj)
        for (int tl = 0; tl <= 8; ++tl)
        {
            std::map<int, int> got;
            for (auto s : su2_tensor_decompose(tj / 2.0, tl / 2.0))
                ++got[s.twice()];
            CHECK(got == testing::clebsch_gordan_by_weights(tj, tl));
        }
}

TEST_CASE("sl2c adjoint matrix is a homomorphism")
{
    auto id = sl2c_adjoint_matrix({});
    CHECK((id - Eigen::Matrix3cd::Identity()).norm() == 0);
    double worst = 0;
    for (std::uint64_t s = 0; s < 200; ++s)
    {
        CounterRng rng(5, s);
        auto g1 = random_sl2c(rng);
        auto g2 = random_sl2c(rng);
        Eigen::Matrix3cd lhs = sl2c_adjoint_matrix(g1) * sl2c_adjoint_matrix(g2);
        Eigen::Matrix3cd rhs = sl2c_adjoint_matrix(g1 * g2);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / (1 + rhs.cwiseAbs().maxCoeff()));
        Eigen::Matrix3cd unit = sl2c_adjoint_matrix(g1) * sl2c_adjoint_matrix(g1.inverse());
        worst = std::max(worst, (unit - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-8);
    CHECK_THROWS_AS(sl2c_adjoint_matrix({2, 0, 0, 1}), DomainError);
}

TEST_CASE("orbit invariants")
{
    Vec6 e0 = Vec6::Zero();
    e0[0] = 1;
    CHECK(orbit_invariants(e0).i1 == 1);
    CHECK(orbit_invariants(e0).i2 == 0);
    CHECK(orbit_invariants(Vec6::Zero()).i1 == 0);

    Vec6 p;
    p << 0.3, -1.2, 0.8, 0.5, 0.1, -0.9;
    CHECK((to_real_coordinates(from_real_coordinates(p)) - p).norm() <= 1e-14);

    double worst = 0;
    for (std::uint64_t s = 0; s < 1000; ++s)
    {
        CounterRng rng(17, s);
        Vec6 q;
        for (int k = 0; k < 6; ++k)
            q[k] = rng.uniform(-2, 2);
        auto before = orbit_invariants(q);
        Vec6 cur = q;
        for (int step = 0; step < 5; ++step)
            cur = act_real(random_sl2c(rng, 0.4), cur);
        auto after = orbit_invariants(cur);
        double scale = std::max(1.0, std::hypot(before.i1, before.i2));
        worst = std::max(worst, std::abs(after.i1 - before.i1) / scale);
        worst = std::max(worst, std::abs(after.i2 - before.i2) / scale);
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("orbit labels")
{
    CHECK(orbit_label_from_invariants(1, 0) == OrbitLabelSL2C{1, 0});
    CHECK(orbit_label_from_invariants(-1, 0) == OrbitLabelSL2C{0, 1});
    CHECK(orbit_label_from_invariants(0, 0) == OrbitLabelSL2C{0, 0});
    auto neg = orbit_label_from_invariants(-4, -0.0);
    CHECK(neg.is_canonical());
    CHECK(neg.rho == 2);

    for (std::uint64_t s = 0; s < 1000; ++s)
    {
        CounterRng rng(8, s);
        OrbitLabelSL2C l{rng.uniform(0, 4), rng.uniform(-4, 4)};
        if (s % 10 == 0)
            l.n = 0, l.rho = std::abs(l.rho);
        auto inv = label_invariants(l);
        auto back = orbit_label_from_invariants(inv.i1, inv.i2);
        CHECK(back.is_canonical());
        CHECK(std::abs(back.n - l.n) <= 1e-9 * (1 + l.n));
        CHECK(std::abs(back.rho - l.rho) <= 1e-9 * (1 + std::abs(l.rho)));
    }
}

TEST_CASE("sl2c tensor descriptor")
{
    auto d00 = sl2c_tensor_decompose({0, 0.5}, {0, 1.5});
    CHECK(d00.m_residue == 0);
    CHECK(d00.admits(3));
    CHECK(!d00.admits(0.5));
    auto dhh = sl2c_tensor_decompose({0.5, 0}, {0.5, 2});
    CHECK(dhh.m_residue == 0);
    CHECK(dhh.m_values(-1, 1) == std::vector<double>{-1, 0, 1});
    auto dh = sl2c_tensor_decompose({0.5, 0}, {1, 0});
    CHECK(dh.m_residue == 0.5);
    CHECK(dh.admits(-1.5));
    CHECK(dh == sl2c_tensor_decompose({1, 0}, {0.5, 0}));
    CHECK_THROWS_AS(sl2c_tensor_decompose({-1, 0}, {1, 0}), DomainError);
}
