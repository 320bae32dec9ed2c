#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qseal/seal_string.hpp"
#include "qseal/stats.hpp"

using namespace qseal;
using qseal::testing::ProbeRng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("seal parameter validation") {
    REQUIRE_NOTHROW((SealParams{kPi / 8.0, 0.25, 64}).validate());
    REQUIRE_THROWS_AS((SealParams{0.0, 0.25, 8}).validate(), std::invalid_argument);
    REQUIRE_THROWS_AS((SealParams{kPi / 4.0, 0.25, 8}).validate(), std::invalid_argument);
    REQUIRE_THROWS_AS((SealParams{kPi / 8.0, 0.5, 8}).validate(), std::invalid_argument);
    REQUIRE_THROWS_AS((SealParams{kPi / 8.0, -0.1, 8}).validate(), std::invalid_argument);
    REQUIRE_THROWS_AS((SealParams{kPi / 8.0, 0.25, 0}).validate(), std::invalid_argument);
}

TEST_CASE("sealing construction") {
    Rng rng(1);

    // near-zero wobble: the qubit is essentially the basis state
    const SealParams tiny{1e-12, 0.25, 1};
    auto [regs1, rec1] = seal({1}, tiny, rng);
    REQUIRE(std::abs(regs1.qubit(0).amp1()) >= 1.0 - 1e-12);

    // bits recorded verbatim, every wobble inside the allowed interval
    const SealParams p4{kPi / 8.0, 0.25, 4};
    auto [regs4, rec4] = seal({1, 0, 1, 0}, p4, rng);
    REQUIRE(rec4.bits == std::vector<std::uint8_t>{1, 0, 1, 0});
    const double bound4 = p4.theta_bound();
    for (double t : rec4.thetas) REQUIRE(std::abs(t) <= bound4);
    for (int i = 0; i < 4; ++i)
        REQUIRE(regs4.qubit(i).same_ray(PureQubit::sealed(rec4.bits[static_cast<std::size_t>(i)],
                                                          rec4.thetas[static_cast<std::size_t>(i)])));

    REQUIRE_THROWS_AS(seal({1, 0}, p4, rng), std::invalid_argument);
    REQUIRE_THROWS_AS(seal({1, 0, 2, 0}, p4, rng), std::invalid_argument);
}

TEST_CASE("wobble angles are uniform on the allowed interval") {
    Rng rng(2);
    const SealParams params{kPi / 8.0, 0.25, 10};
    const double bound = params.theta_bound();
    std::vector<double> samples;
    for (int i = 0; i < 10000; ++i) {
        auto [regs, rec] = seal(std::vector<std::uint8_t>(10, 0), params, rng);
        for (double t : rec.thetas) samples.push_back(t);
    }
    REQUIRE(stats::ks_statistic_uniform(samples, -bound, bound) <= stats::ks_threshold(samples.size()));
}

TEST_CASE("reading error stays under the maximum and tracks the mean") {
    Rng rng(3);
    const SealParams params{kPi / 8.0, 0.25, 64};
    const double eps = max_error_rate(params);
    const double mean = mean_error_rate(params);
    REQUIRE(mean < eps);

    std::size_t errors = 0, bits_read = 0;
    while (bits_read < 100000) {
        std::vector<std::uint8_t> bits;
        for (int i = 0; i < params.N; ++i) bits.push_back(static_cast<std::uint8_t>(rng.bit()));
        auto [regs, rec] = seal(bits, params, rng);
        const auto readout = read(regs, rng);
        for (int i = 0; i < params.N; ++i)
            errors += readout[static_cast<std::size_t>(i)] != bits[static_cast<std::size_t>(i)];
        bits_read += static_cast<std::size_t>(params.N);
    }
    const double rate = static_cast<double>(errors) / static_cast<double>(bits_read);
    REQUIRE(rate <= eps + stats::three_sigma(eps, bits_read));
    REQUIRE(stats::within_three_sigma(rate, mean, bits_read));
}

TEST_CASE("reading twice returns the identical string") {
    Rng rng(4);
    const SealParams params{kPi / 8.0, 0.25, 32};
    std::vector<std::uint8_t> bits;
    for (int i = 0; i < params.N; ++i) bits.push_back(static_cast<std::uint8_t>(rng.bit()));
    auto [regs, rec] = seal(bits, params, rng);
    const auto first = read(regs, rng);
    const auto second = read(regs, rng);
    REQUIRE(first == second);

    // near-zero wobble reads back the sealed string outright
    const SealParams tiny{1e-12, 0.25, 32};
    auto [tregs, trec] = seal(bits, tiny, rng);
    REQUIRE(read(tregs, rng) == bits);
}

TEST_CASE("checking untouched registers is deterministic and repeatable") {
    Rng rng(5);
    const SealParams params{kPi / 8.0, 0.25, 24};
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::uint8_t> bits;
        for (int i = 0; i < params.N; ++i) bits.push_back(static_cast<std::uint8_t>(rng.bit()));
        auto [regs, rec] = seal(bits, params, rng);
        REQUIRE(check(regs, rec, rng).verdict == SealVerdict::Unread);
        REQUIRE(check(regs, rec, rng).verdict == SealVerdict::Unread);
    }
}

TEST_CASE("read-then-check per-qubit pass probability") {
    // P(pass) = P(collapse to b) cos^2 t + P(collapse to ~b) sin^2 t
    //         = cos^4 t + sin^4 t
    Rng rng(6);
    const double t = 0.3;
    const SealParams params{kPi / 8.0, 0.25, 1};
    const std::size_t trials = 100000;
    std::size_t passes = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        OwnerRecord rec;
        rec.bits = {0};
        rec.thetas = {t};
        rec.frame_angles = {0.0};
        rec.params = params;
        PublicRegisters regs({PureQubit::sealed(0, t)});
        regs.measure_z(0, rng);
        passes += check(regs, rec, rng).verdict == SealVerdict::Unread;
    }
    const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t);
    REQUIRE(stats::within_three_sigma(static_cast<double>(passes) / trials, c2 * c2 + s2 * s2,
                                      trials));
}

TEST_CASE("analytic rates") {
    // N = 1: the exponent collapses
    const SealParams n1{0.3, 0.25, 1};
    REQUIRE(max_error_rate(n1) == Catch::Approx(std::sin(0.3) * std::sin(0.3)).epsilon(1e-12));

    // the worked value at N = 64
    const SealParams n64{kPi / 8.0, 0.25, 64};
    REQUIRE(max_error_rate(n64) == Catch::Approx(0.01917).margin(5e-5));

    // strictly decreasing along a doubling ladder
    double prev = 1.0;
    for (int N = 8; N <= 1024; N *= 2) {
        const double e = max_error_rate(SealParams{kPi / 8.0, 0.25, N});
        REQUIRE(e < prev);
        prev = e;
    }

    // mean error agrees with direct numerical integration of sin^2 over the interval
    const double u = n64.theta_bound();
    double integral = 0.0;
    const int steps = 200000;
    for (int i = 0; i < steps; ++i) {
        const double x = -u + (2.0 * u) * (i + 0.5) / steps;
        integral += std::sin(x) * std::sin(x);
    }
    integral /= steps;
    REQUIRE(mean_error_rate(n64) == Catch::Approx(integral).epsilon(1e-6));
}

TEST_CASE("escape bound") {
    const std::vector<double> zeros(16, 0.0);
    REQUIRE(escape_bound(zeros, 16) == 1.0);

    const std::vector<double> quarter(16, kPi / 4.0);
    REQUIRE(escape_bound(quarter, 16) == Catch::Approx(std::exp2(-16)).epsilon(1e-9));

    // K = 0 clamps at one
    const std::vector<double> generic{0.1, -0.2, 0.15};
    REQUIRE(escape_bound(generic, 0) == 1.0);
    REQUIRE_THROWS_AS(escape_bound(generic, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(escape_bound(generic, -1), std::invalid_argument);

    // measure-all escape never exceeds the bound at K = N
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> thetas;
        for (int i = 0; i < 12; ++i) thetas.push_back(rng.uniform_real(-0.4, 0.4));
        REQUIRE(measure_all_escape(thetas) <= escape_bound(thetas, 12) + 1e-12);
    }
}

TEST_CASE("honest reading refuses entangled registers") {
    Rng rng(8);
    const SealParams params{kPi / 8.0, 0.25, 6};
    std::vector<std::uint8_t> bits{0, 1, 0, 1, 1, 0};
    auto [regs, rec] = seal(bits, params, rng);
    regs.merge({1, 3});
    REQUIRE_THROWS_AS(read(regs, rng), RegisterEntangled);
    REQUIRE_THROWS_AS(regs.qubit(1), RegisterEntangled);
    REQUIRE_THROWS_AS(regs.measure_basis2(1, Basis2{0.1}, rng), RegisterEntangled);
    // grouped registers can still be Z-measured and checked individually
    REQUIRE_NOTHROW(regs.measure_z(1, rng));
    REQUIRE_NOTHROW(check(regs, rec, rng));
}

TEST_CASE("owner record target applies the frame angle") {
    OwnerRecord rec;
    rec.bits = {0, 1};
    rec.thetas = {0.1, 0.2};
    rec.frame_angles = {0.0, kPi / 12.0};
    rec.params = SealParams{kPi / 8.0, 0.25, 2};
    REQUIRE(rec.target(0).same_ray(PureQubit::sealed(0, 0.1)));
    const PureQubit rotated = Basis2{kPi / 12.0}.rotated(PureQubit::sealed(1, 0.2));
    REQUIRE(rec.target(1).same_ray(rotated));
}
