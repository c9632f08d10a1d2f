#include "poinc/icosahedral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Geometry>

#include "poinc/error.hpp"

namespace poinc {

namespace {
bool same_matrix(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b)
{
    return (a - b).cwiseAbs().maxCoeff() < 1e-9;
}

std::size_t find_point(const std::vector<std::vector<Eigen::Vector3d>>& pts,
                       const std::vector<Eigen::Vector3d>& q)
{
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        bool match = true;
        for (std::size_t k = 0; k < q.size() && match; ++k)
            match = (pts[i][k] - q[k]).cwiseAbs().maxCoeff() < 1e-9;
        if (match)
            return i;
    }
    throw Error("discrete fiber is not closed under the group action");
}
}  // namespace

const std::vector<Eigen::Vector3d>& icosahedron_vertices()
{
    static const std::vector<Eigen::Vector3d> verts = [] {
        const double phi = (1 + std::sqrt(5.0)) / 2;
        std::vector<Eigen::Vector3d> v;
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0})
            {
                v.emplace_back(0, s1, s2 * phi);
                v.emplace_back(s1, s2 * phi, 0);
                v.emplace_back(s2 * phi, 0, s1);
            }
        for (auto& x : v)
            x.normalize();
        return v;
    }();
    return verts;
}

const std::vector<Eigen::Matrix3d>& icosahedral_generators()
{
    static const std::vector<Eigen::Matrix3d> gens = [] {
        auto const& v = icosahedron_vertices();
        // v[0] = (0,1,phi) and v[1] = (1,phi,0) are adjacent; the face
        // (v0, v1, v2) has a 3-fold axis through its center
        Eigen::Vector3d face = (v[0] + v[1] + v[2]).normalized();
        Eigen::Matrix3d a = Eigen::AngleAxisd(2 * std::numbers::pi / 5, v[0]).toRotationMatrix();
        Eigen::Matrix3d b = Eigen::AngleAxisd(2 * std::numbers::pi / 3, face).toRotationMatrix();
        return std::vector<Eigen::Matrix3d>{a, b};
    }();
    return gens;
}

const std::vector<Eigen::Matrix3d>& icosahedral_group()
{
    static const std::vector<Eigen::Matrix3d> group = [] {
        std::vector<Eigen::Matrix3d> g{Eigen::Matrix3d::Identity()};
        for (std::size_t head = 0; head < g.size(); ++head)
            for (auto const& s : icosahedral_generators())
            {
                Eigen::Matrix3d next = s * g[head];
                if (std::none_of(g.begin(), g.end(),
                                 [&](const Eigen::Matrix3d& m) { return same_matrix(m, next); }))
                    g.push_back(next);
            }
        if (g.size() != 60)
            throw Error("icosahedral closure produced " + std::to_string(g.size()) + " elements");
        return g;
    }();
    return group;
}

DiscreteFiber discretize_fiber(const Irrep& i)
{
    bool timelike = is_timelike(i.base.cls);
    DiscreteFiber f;
    f.space = i.fiber;
    switch (i.fiber.kind)
    {
        case FiberKind::Point: f.points = {{}}; break;
        case FiberKind::Sphere2:
            if (!timelike)
                throw UnsupportedError("S^2 fibers are discretized over timelike orbits only");
            for (auto const& v : icosahedron_vertices())
                f.points.push_back({v});
            break;
        case FiberKind::Sphere3:
            if (!timelike)
                throw UnsupportedError("S^3 fibers are discretized over timelike orbits only");
            for (auto const& g : icosahedral_group())
                f.points.push_back({g.col(0), g.col(1)});
            break;
        default:
            throw UnsupportedError("no discrete model for the fiber " + to_string(i.fiber));
    }
    for (auto const& g : icosahedral_generators())
    {
        std::vector<std::size_t> perm(f.size());
        for (std::size_t k = 0; k < f.size(); ++k)
        {
            std::vector<Eigen::Vector3d> moved;
            for (auto const& v : f.points[k])
                moved.push_back(g * v);
            perm[k] = find_point(f.points, moved);
        }
        f.perms.push_back(std::move(perm));
    }
    return f;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
pair_orbits(const DiscreteFiber& a, const DiscreteFiber& b)
{
    std::size_t na = a.size();
    std::size_t nb = b.size();
    std::vector<std::size_t> parent(na * nb);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t g = 0; g < a.perms.size(); ++g)
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j)
            {
                std::size_t u = find(i * nb + j);
                std::size_t v = find(a.perms[g][i] * nb + b.perms[g][j]);
                if (u != v)
                    parent[std::max(u, v)] = std::min(u, v);
            }
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> orbits;
    std::vector<std::size_t> slot(na * nb, SIZE_MAX);
    for (std::size_t k = 0; k < na * nb; ++k)
    {
        std::size_t r = find(k);
        if (slot[r] == SIZE_MAX)
        {
            slot[r] = orbits.size();
            orbits.emplace_back();
        }
        orbits[slot[r]].emplace_back(k / nb, k % nb);
    }
    return orbits;
}

}  // namespace poinc
