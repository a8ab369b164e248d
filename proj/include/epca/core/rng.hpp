#ifndef EPCA_CORE_RNG_HPP
#define EPCA_CORE_RNG_HPP

#include <cstdint>
#include <random>

namespace epca {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/**
 * Portable seeded generator.
 *
 * Engine: std::mt19937_64, whose output sequence is fixed by the C++
 * standard. Stream i of seed s is seeded with
 * splitmix64(s ^ splitmix64(i + 0x9E3779B97F4A7C15)). Uniforms use the top 53
 * bits of one draw; normals use the Box-Muller cosine branch on two uniforms.
 * No standard distribution objects are involved, so sequences are identical
 * across standard libraries.
 */
class Rng
{
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform();

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal();
    double normal(double mean, double sigma) { return mean + sigma * normal(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace epca

#endif
