#ifndef LEAPP_RNG_HPP
#define LEAPP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace leapp::rng {

/// Counter-based random stream. Each (seed, label, index) triple names an
/// independent stream whose draws are a pure function of its counter, so a
/// generator component (gamma, sigma, U, ...) can be reproduced without
/// replaying the others.
class Stream {
public:
    Stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) {
        // FNV-1a over (seed, label, index) picks the stream key.
        std::uint64_t h = 1469598103934665603ull;
        auto mix_byte = [&h](unsigned char b) {
            h ^= b;
            h *= 1099511628211ull;
        };
        for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(seed >> (8 * i)));
        for (char c : label) mix_byte(static_cast<unsigned char>(c));
        for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(index >> (8 * i)));
        key_ = h;
    }

    std::uint64_t next_u64() {
        // splitmix64 applied to key + counter.
        std::uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

    /// Standard normal via Box-Muller (second value cached).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    /// Gamma(shape, scale 1) for shape >= 1, Marsaglia-Tsang squeeze.
    double gamma(double shape) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        shuffle_span(v.data(), v.size());
    }

    template <typename T>
    void shuffle_span(T* data, std::size_t n) {
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(data[i - 1], data[j]);
        }
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace leapp::rng

#endif
