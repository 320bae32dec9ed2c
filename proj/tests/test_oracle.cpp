#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qseal/oracle.hpp"

using namespace qseal;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("branch enumeration covers the outcome tree exactly") {
    // two biased coins; success iff they differ
    const TrialFn trial = [](RandomSource& rng) {
        const bool a = rng.bernoulli(0.3);
        const bool b = rng.bernoulli(0.6);
        TrialOutcome out;
        out.escaped = a != b;
        out.target_success = a && b;
        out.info_bits = a ? 1.0 : 0.0;
        return out;
    };
    const auto res = exact_oracle(trial);
    REQUIRE(res.leaves == 4);
    REQUIRE(res.total_probability == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(res.escape == Catch::Approx(0.3 * 0.4 + 0.7 * 0.6).epsilon(1e-12));
    REQUIRE(res.target_success == Catch::Approx(0.18).epsilon(1e-12));
    REQUIRE(res.mean_info == Catch::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("certain branches create no choice points") {
    const TrialFn trial = [](RandomSource& rng) {
        TrialOutcome out;
        out.escaped = rng.bernoulli(1.0) && !rng.bernoulli(0.0) && rng.uniform_index(1) == 0;
        return out;
    };
    const auto res = exact_oracle(trial);
    REQUIRE(res.leaves == 1);
    REQUIRE(res.escape == 1.0);
}

TEST_CASE("uniform_index branches carry equal weight") {
    const TrialFn trial = [](RandomSource& rng) {
        TrialOutcome out;
        out.escaped = rng.uniform_index(6) < 2;
        return out;
    };
    const auto res = exact_oracle(trial);
    REQUIRE(res.leaves == 6);
    REQUIRE(res.escape == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("oracle guardrails") {
    const TrialFn wide = [](RandomSource& rng) {
        rng.uniform_index(10000);
        return TrialOutcome{};
    };
    REQUIRE_THROWS_AS(exact_oracle(wide), BranchBudgetExceeded);

    const TrialFn deep = [](RandomSource& rng) {
        for (int i = 0; i < 30; ++i) rng.bernoulli(0.5);
        return TrialOutcome{};
    };
    REQUIRE_THROWS_AS(exact_oracle(deep, 1000), BranchBudgetExceeded);

    const TrialFn real = [](RandomSource& rng) {
        rng.uniform_real(0.0, 1.0);
        return TrialOutcome{};
    };
    REQUIRE_THROWS_AS(exact_oracle(real), std::logic_error);

    // a trial whose draw structure depends on hidden state is rejected
    int calls = 0;
    const TrialFn unstable = [&calls](RandomSource& rng) {
        if (calls++ == 0) rng.bernoulli(0.5);
        else rng.uniform_index(3);
        return TrialOutcome{};
    };
    REQUIRE_THROWS_AS(exact_oracle(unstable), std::logic_error);
}

TEST_CASE("measure-all escape matches the closed form exactly") {
    const SealParams params{kPi / 8.0, 0.25, 3};
    SealFixture fixture;
    fixture.bits = std::vector<std::uint8_t>{1, 0, 1};
    fixture.thetas = std::vector<double>{0.12, -0.2, 0.29};
    const TrialFn trial = [&](RandomSource& rng) {
        return measure_all_reader(params, rng, fixture);
    };
    const auto res = exact_oracle(trial);
    REQUIRE(res.total_probability == Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(res.escape == Catch::Approx(measure_all_escape(*fixture.thetas)).epsilon(1e-9));
    REQUIRE(res.mean_info == Catch::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("honest advanced session accepts with probability exactly one") {
    ProtocolParams params = ProtocolParams::make(12, 4, 2, GeneratorMatrix::parse({"11"}));
    params.thresholds.min_sample = 4;
    SessionFixture fixture;
    fixture.owner_bits = std::vector<std::uint8_t>{1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1};
    fixture.thetas = std::vector<double>(12, 0.0);
    fixture.r = 0b01;
    const CommitterStrategy det{CommitterStrategy::Kind::Honest, 8, true};
    const TrialFn trial = [&](RandomSource& rng) {
        const auto session = run_advanced(1, det, {}, params, rng, fixture);
        TrialOutcome out;
        out.escaped = session.verdict.accepted;
        out.target_success = session.verdict.accepted && session.verdict.unveiled_bit == 1;
        return out;
    };
    const auto res = exact_oracle(trial);
    REQUIRE(res.total_probability == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(res.escape == 1.0);
    REQUIRE(res.target_success == 1.0);
}

TEST_CASE("deferred choice lands the target exactly half the time") {
    ProtocolParams params = ProtocolParams::make(10, 4, 1, GeneratorMatrix::parse({"1"}));
    params.thresholds.min_sample = 4;
    SessionFixture fixture;
    fixture.thetas = std::vector<double>(10, 0.0);  // owner bits stay free: 2^10 branches
    const TrialFn trial = [&](RandomSource& rng) {
        return deferred_choice_basic(0, params, rng, fixture, true);
    };
    const auto res = exact_oracle(trial);
    REQUIRE(res.total_probability == Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(res.escape == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(res.target_success == Catch::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("oracle and Monte Carlo agree on a wobbled honest session") {
    ProtocolParams params = ProtocolParams::make(12, 4, 2, GeneratorMatrix::parse({"11"}));
    params.thresholds.min_sample = 4;
    SessionFixture fixture;
    fixture.owner_bits = std::vector<std::uint8_t>{1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1};
    fixture.thetas = std::vector<double>(12);
    const double bound = params.seal.theta_bound();
    for (int i = 0; i < 12; ++i)
        (*fixture.thetas)[static_cast<std::size_t>(i)] = bound * (i - 5.5) / 6.0;
    fixture.r = 0b01;
    const CommitterStrategy det{CommitterStrategy::Kind::Honest, 8, true};
    const TrialFn trial = [&](RandomSource& rng) {
        const auto session = run_advanced(0, det, {}, params, rng, fixture);
        TrialOutcome out;
        out.escaped = session.verdict.accepted;
        out.target_success = session.verdict.accepted && session.verdict.unveiled_bit == 0;
        return out;
    };
    const auto res = exact_oracle(trial);
    REQUIRE(res.total_probability == Catch::Approx(1.0).epsilon(1e-9));

    const Rng base(17);
    const std::size_t trials = 30000;
    std::size_t escapes = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = base.derive(t);
        escapes += trial(rng).escaped;
    }
    REQUIRE(stats::within_three_sigma(static_cast<double>(escapes) / trials, res.escape, trials));
}
