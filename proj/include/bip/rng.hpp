#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bip {

namespace detail {

// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Seeded random stream: mt19937_64 plus deterministic samplers.
///
/// Substreams are derived from the root seed and a tag via SplitMix64, so a
/// child stream depends only on (seed, tag), never on how much the parent has
/// consumed. All conversions from raw 64-bit output to doubles are done by
/// hand, which keeps results identical across standard library versions.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), gen_(detail::mix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    /// Child stream keyed by (this stream's seed, tag). Distinct tags give
    /// independent streams; consumption order of the parent is irrelevant.
    RandomStream split(std::uint64_t tag) const {
        return RandomStream(detail::mix64(seed_ ^ detail::mix64(tag)));
    }

    RandomStream split(std::uint64_t tag1, std::uint64_t tag2) const {
        return split(tag1).split(tag2);
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer on {lo, ..., hi} inclusive, by rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    /// Standard normal via Box-Muller (pairs cached per stream).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(theta);
        have_spare_ = true;
        return radius * std::cos(theta);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    bool bernoulli(double prob) { return uniform() < prob; }

    /// Random sign, +1 or -1 with equal probability.
    double random_sign() { return (gen_() & 1ULL) ? 1.0 : -1.0; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace bip
