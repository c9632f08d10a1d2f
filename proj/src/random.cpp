#include "poinc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace poinc {

double CounterRng::normal() noexcept
{
    // 1 - u keeps the log argument in (0, 1]
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

std::array<double, 3> CounterRng::unit_vector() noexcept
{
    double z = uniform(-1.0, 1.0);
    double phi = uniform(0.0, 2 * std::numbers::pi);
    double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace poinc
