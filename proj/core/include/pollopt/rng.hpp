#ifndef POLLOPT_RNG_HPP
#define POLLOPT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace pollopt {

/// Stateless counter-based generator: every variate is a pure function of
/// (seed, stream, counter), so substreams can be consumed in any order and
/// runs parallelize without shared state. The simulator assigns one
/// substream per regeneration cycle and lane (arrivals / services /
/// routing), which keeps common-random-number comparisons synchronized by
/// construction.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
        std::uint64_t h = mix(seed_ ^ 0x9e3779b97f4a7c15ULL);
        h = mix(h ^ stream);
        h = mix(h ^ counter);
        return mix(h + (stream << 1) + counter);
    }

    /// Uniform on (0, 1].
    double uniform(std::uint64_t stream, std::uint64_t counter) const {
        return (static_cast<double>(bits(stream, counter) >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Exponential with the given rate, by inverse transform (monotone in
    /// the underlying uniform, which preserves common-random-number
    /// couplings).
    double exponential(std::uint64_t stream, std::uint64_t counter, double rate) const {
        return -std::log(uniform(stream, counter)) / rate;
    }

    std::uint64_t seed() const { return seed_; }

  private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

}  // namespace pollopt

#endif
