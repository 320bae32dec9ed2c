// Seeded randomness with explicit streams.
//
// Every stochastic operation in the library draws from a RandomSource that is
// passed in explicitly; nothing touches global state.  Rng is the Monte Carlo
// implementation.  Child streams are derived with a counter-based splitmix64
// chain, so adding experiment cells or trials never perturbs sibling streams.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace qseal {

// Abstract source of discrete/continuous randomness.  Protocol and attack
// code draws only through this interface, which lets the exact oracle swap in
// a branch enumerator (see oracle.hpp) for the same code path.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    // true with probability p.  p outside [0,1] is clamped.
    virtual bool bernoulli(double p) = 0;

    // uniform on {0, 1, ..., n-1}, n >= 1
    virtual std::uint64_t uniform_index(std::uint64_t n) = 0;

    // uniform on [a, b)
    virtual double uniform_real(double a, double b) = 0;

    int bit() { return static_cast<int>(uniform_index(2)); }

    // n uniform bits packed little-endian (bit i of the result = i-th draw)
    std::uint64_t bits(int n) {
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(bit()) << i;
        return v;
    }
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

// Monte Carlo random stream backed by mt19937_64.
class Rng final : public RandomSource {
public:
    explicit Rng(std::uint64_t seed) : engine_(detail::splitmix64(seed)), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Child stream at (this seed, id).  derive(i) != derive(j) for i != j.
    Rng derive(std::uint64_t id) const {
        return Rng(detail::splitmix64(seed_ ^ detail::splitmix64(id + 1)));
    }
    Rng derive(std::uint64_t a, std::uint64_t b) const { return derive(a).derive(b); }

    bool bernoulli(double p) override {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    std::uint64_t uniform_index(std::uint64_t n) override {
        if (n == 0) throw std::invalid_argument("uniform_index: n == 0");
        if (n == 1) return 0;
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    double uniform_real(double a, double b) override { return a + (b - a) * uniform01(); }

private:
    // 53-bit mantissa uniform in [0,1); independent of library distributions
    // so streams are reproducible across standard library implementations.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace qseal
