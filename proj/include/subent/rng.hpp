#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace subent {

/// Deterministic 64-bit generator (splitmix64 chain). Streams derived from
/// (seed, index) are independent, which keeps parallel sampling reproducible
/// regardless of worker count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Derive the generator for sample `index` of a seeded run.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        mix.next();
        return Rng(mix.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1).
    double uniform01() {
        // 53-bit mantissa; offset keeps the value strictly positive.
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (second value cached).
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Uniform point on the probability simplex (flat Dirichlet).
inline std::vector<double> sample_simplex(Rng& rng, int d) {
    std::vector<double> x(static_cast<std::size_t>(d));
    double sum = 0.0;
    for (auto& v : x) {
        v = -std::log(rng.uniform01());
        sum += v;
    }
    for (auto& v : x) v /= sum;
    return x;
}

}  // namespace subent
