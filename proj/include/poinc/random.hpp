#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace poinc {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive an independent seed from a parent seed and a tag.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept
{
    return mix64(seed ^ mix64(tag + 0x632be59bd9b4e019ULL));
}

//---------------------------------------------------------------------------//
/*!
 * Counter-based generator keyed by (seed, stream).
 *
 * The k-th output of a stream is a pure function of (seed, stream, k), so a
 * sample indexed by i can be drawn from stream i in any order or on any
 * thread and still reproduce a serial run bit for bit.
 */
class CounterRng
{
  public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(derive_seed(seed, stream))
    {
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept { return next_u64(); }

    std::uint64_t next_u64() noexcept
    {
        return mix64(key_ ^ mix64(counter_++ * 0xd1b54a32d192ed03ULL));
    }

    /// Uniform on [0, 1).
    double uniform() noexcept
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept
    {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal deviate (Box-Muller, one value per call).
    double normal() noexcept;

    /// Uniformly distributed point on the unit 2-sphere.
    std::array<double, 3> unit_vector() noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_{0};
};

}  // namespace poinc
