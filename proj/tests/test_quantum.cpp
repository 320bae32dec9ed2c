#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qseal/quantum.hpp"
#include "qseal/stats.hpp"

using namespace qseal;
using qseal::testing::ProbeRng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sealed qubit preparation") {
    const PureQubit z0 = PureQubit::sealed(0, 0.0);
    REQUIRE(z0.amp0() == 1.0);
    REQUIRE(z0.amp1() == 0.0);
    const PureQubit z1 = PureQubit::sealed(1, 0.0);
    REQUIRE(z1.amp0() == 0.0);
    REQUIRE(z1.amp1() == 1.0);

    // the fifteen-degree state
    const PureQubit q = PureQubit::sealed(0, kPi / 12.0);
    REQUIRE(q.amp0() == Catch::Approx(std::cos(kPi / 12.0)).epsilon(1e-15));
    REQUIRE(q.amp1() == Catch::Approx(std::sin(kPi / 12.0)).epsilon(1e-15));

    // bit = 1 swaps the components
    const PureQubit q1 = PureQubit::sealed(1, 0.3);
    REQUIRE(q1.amp0() == Catch::Approx(std::sin(0.3)));
    REQUIRE(q1.amp1() == Catch::Approx(std::cos(0.3)));

    REQUIRE_THROWS_AS(PureQubit::sealed(2, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(PureQubit::sealed(0, std::nan("")), std::invalid_argument);
    REQUIRE_THROWS_AS(PureQubit::prepared(0.9, 0.9), std::invalid_argument);
}

TEST_CASE("measure_z eigenstates and collapse") {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(measure_z(PureQubit::ket0(), rng).outcome == 0);
        REQUIRE(measure_z(PureQubit::ket1(), rng).outcome == 1);
    }
    // collapse idempotence on a generic state
    for (int i = 0; i < 500; ++i) {
        const auto first = measure_z(PureQubit::sealed(0, 0.7), rng);
        const auto second = measure_z(first.post, rng);
        REQUIRE(second.outcome == first.outcome);
    }
}

TEST_CASE("measure_z frequency matches the Born rule") {
    Rng rng(2);
    const PureQubit q = PureQubit::sealed(0, 0.3);
    const std::size_t trials = 100000;
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < trials; ++i) zeros += measure_z(q, rng).outcome == 0;
    const double expected = std::cos(0.3) * std::cos(0.3);
    REQUIRE(stats::within_three_sigma(static_cast<double>(zeros) / trials, expected, trials));
}

TEST_CASE("projection probabilities") {
    Rng rng(3);
    // self-projection is certain, bit-exact, for any preparation
    for (int i = 0; i < 200; ++i) {
        const PureQubit q = PureQubit::sealed(rng.bit(), rng.uniform_real(-1.5, 1.5));
        const auto r = project(q, q, rng);
        REQUIRE(r.success);
        REQUIRE(r.post.same_ray(q));
    }
    // orthogonal projection never succeeds
    for (int i = 0; i < 200; ++i)
        REQUIRE_FALSE(project(PureQubit::ket0(), PureQubit::ket1(), rng).success);

    // |<0|(cos t, sin t)>|^2 = cos^2 t at t = 0.4
    const PureQubit target = PureQubit::sealed(0, 0.4);
    const std::size_t trials = 100000;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < trials; ++i) hits += project(PureQubit::ket0(), target, rng).success;
    const double expected = std::cos(0.4) * std::cos(0.4);
    REQUIRE(stats::within_three_sigma(static_cast<double>(hits) / trials, expected, trials));

    // failure collapses onto the orthogonal complement: a second projection
    // onto the same target must then fail with certainty
    ProbeRng probe({false, false});
    const auto failed = project(PureQubit::ket0(), target, probe);
    REQUIRE_FALSE(failed.success);
    const auto again = project(failed.post, target, probe);
    REQUIRE_FALSE(again.success);
    REQUIRE(probe.probs.size() == 2);
    REQUIRE(probe.probs[1] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("rotated-basis measurement") {
    Rng rng(4);
    const Basis2 basis{kPi / 12.0};
    for (int i = 0; i < 100; ++i) REQUIRE(measure_basis2(basis.vec0(), basis, rng).outcome == 0);
    REQUIRE(basis.vec0().overlap(basis.vec1()) == Catch::Approx(0.0).margin(1e-12));

    // P(outcome 0 | state |0>, angle phi) = cos^2 phi
    const double phi = 0.5;
    const std::size_t trials = 100000;
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < trials; ++i)
        zeros += measure_basis2(PureQubit::ket0(), Basis2{phi}, rng).outcome == 0;
    REQUIRE(stats::within_three_sigma(static_cast<double>(zeros) / trials,
                                      std::cos(phi) * std::cos(phi), trials));

    // angle 0 reproduces the Z distribution
    const PureQubit q = PureQubit::sealed(0, 0.6);
    std::size_t z_zero = 0, b_zero = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        z_zero += measure_z(q, rng).outcome == 0;
        b_zero += measure_basis2(q, Basis2{0.0}, rng).outcome == 0;
    }
    REQUIRE(std::abs(static_cast<double>(z_zero) - static_cast<double>(b_zero)) /
                static_cast<double>(trials) <=
            2.0 * stats::three_sigma(std::cos(0.6) * std::cos(0.6), trials));

    // rotated() maps Z-frame components into the rotated frame
    REQUIRE(basis.rotated(PureQubit::ket0()).same_ray(basis.vec0()));
    REQUIRE(basis.rotated(PureQubit::ket1()).same_ray(basis.vec1()));
}

TEST_CASE("tensor products") {
    const JointState s = tensor({PureQubit::ket0(), PureQubit::ket1()});
    REQUIRE(s.arity() == 2);
    REQUIRE(s.amp(0b00) == 0.0);
    REQUIRE(s.amp(0b01) == 1.0);
    REQUIRE(s.amp(0b10) == 0.0);
    REQUIRE(s.amp(0b11) == 0.0);

    const double t = 0.35;
    const PureQubit q = PureQubit::sealed(0, t);
    const JointState qq = tensor({q, q});
    REQUIRE(qq.amp(0b00) == Catch::Approx(std::cos(t) * std::cos(t)));

    const JointState one = tensor({q});
    REQUIRE(one.amp(0) == q.amp0());
    REQUIRE(one.amp(1) == q.amp1());

    // first qubit occupies the most significant index bit
    const JointState ab = tensor({PureQubit::ket1(), PureQubit::ket0()});
    REQUIRE(ab.amp(0b10) == 1.0);

    std::vector<PureQubit> too_many(17, PureQubit::ket0());
    REQUIRE_THROWS_AS(tensor(too_many), ArityExceeded);
}

TEST_CASE("subset projector probabilities") {
    const double t = 0.35;
    const PureQubit q = PureQubit::sealed(0, t);
    const JointState qq = tensor({q, q});

    // identity projector: certain, state unchanged
    ProbeRng all_probe({true});
    const auto all = joint_project_subset(qq, {0, 1, 2, 3}, all_probe);
    REQUIRE(all.success);
    REQUIRE(all_probe.probs[0] >= 1.0);
    for (std::size_t i = 0; i < 4; ++i) REQUIRE(all.post.amp(i) == Catch::Approx(qq.amp(i)));

    // single-string projector carries probability cos^4 t
    ProbeRng one_probe({true});
    joint_project_subset(qq, {0b00}, one_probe);
    REQUIRE(one_probe.probs[0] == Catch::Approx(std::pow(std::cos(t), 4)).epsilon(1e-12));

    // empty subset is flagged, never succeeds, and leaves the state alone
    Rng rng(5);
    const auto empty = joint_project_subset(qq, {}, rng);
    REQUIRE_FALSE(empty.success);
    REQUIRE(empty.empty_subset);
    for (std::size_t i = 0; i < 4; ++i) REQUIRE(empty.post.amp(i) == qq.amp(i));

    // complementary subsets: probabilities sum to one
    ProbeRng ca({true}), cb({true});
    joint_project_subset(qq, {0b00, 0b11}, ca);
    joint_project_subset(qq, {0b01, 0b10}, cb);
    REQUIRE(ca.probs[0] + cb.probs[0] == Catch::Approx(1.0).epsilon(1e-12));

    // duplicate accepted strings are not double-counted
    ProbeRng dup({true});
    joint_project_subset(qq, {0b00, 0b00}, dup);
    REQUIRE(dup.probs[0] == Catch::Approx(std::pow(std::cos(t), 4)).epsilon(1e-12));

    REQUIRE_THROWS_AS(joint_project_subset(qq, {4}, rng), std::invalid_argument);
}

TEST_CASE("per-qubit operations inside a joint state") {
    Rng rng(6);
    const PureQubit a = PureQubit::sealed(0, 0.2);
    const PureQubit b = PureQubit::sealed(1, -0.4);
    const JointState ab = tensor({a, b});

    // Z on qubit 0 of a product state follows that qubit's marginal
    ProbeRng probe({true});
    joint_measure_qubit_z(ab, 0, probe);
    REQUIRE(probe.probs[0] == Catch::Approx(a.amp0() * a.amp0()).epsilon(1e-12));

    // projecting each qubit of an untouched product state onto its own
    // preparation succeeds with probability 1 within tolerance
    ProbeRng pq({true});
    const auto r0 = joint_project_qubit(ab, 0, a, pq);
    REQUIRE(r0.success);
    REQUIRE(pq.probs[0] == Catch::Approx(1.0).epsilon(1e-12));
    ProbeRng pq1({true});
    const auto r1 = joint_project_qubit(r0.post, 1, b, pq1);
    REQUIRE(r1.success);
    REQUIRE(pq1.probs[0] == Catch::Approx(1.0).epsilon(1e-12));

    REQUIRE_THROWS_AS(joint_measure_qubit_z(ab, 2, rng), std::invalid_argument);
    REQUIRE_THROWS_AS(joint_project_qubit(ab, -1, a, rng), std::invalid_argument);
}

TEST_CASE("split_to_qubits factors product states and rejects entanglement") {
    Rng rng(7);
    const PureQubit a = PureQubit::sealed(0, 0.25);
    const PureQubit b = PureQubit::sealed(1, 0.8);
    const PureQubit c = PureQubit::sealed(0, -0.55);

    // factors are recovered up to floating-point reconstruction error
    const auto factors = split_to_qubits(tensor({a, b, c}));
    REQUIRE(factors.size() == 3);
    REQUIRE(std::abs(factors[0].overlap(a)) == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(std::abs(factors[1].overlap(b)) == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(std::abs(factors[2].overlap(c)) == Catch::Approx(1.0).epsilon(1e-12));

    // single-qubit joint state returns its unique factor
    const auto solo = split_to_qubits(tensor({a}));
    REQUIRE(solo.size() == 1);
    REQUIRE(std::abs(solo[0].overlap(a)) == Catch::Approx(1.0).epsilon(1e-12));

    // successful {00,11} projection of a generic product state is entangled
    ProbeRng probe({true});
    const auto bell_like = joint_project_subset(tensor({a, a}), {0b00, 0b11}, probe);
    REQUIRE(bell_like.success);
    REQUIRE_THROWS_AS(split_to_qubits(bell_like.post), NotProductState);
}

TEST_CASE("normalization is preserved across operations") {
    Rng rng(8);
    auto norm2 = [](const JointState& s) {
        double n = 0.0;
        for (std::size_t i = 0; i < s.dim(); ++i) n += s.amp(i) * s.amp(i);
        return n;
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<PureQubit> qs;
        for (int i = 0; i < 3; ++i) qs.push_back(PureQubit::sealed(rng.bit(), rng.uniform_real(-0.6, 0.6)));
        JointState s = tensor(qs);
        REQUIRE(norm2(s) == Catch::Approx(1.0).epsilon(1e-9));
        const auto pr = joint_project_subset(s, {0b000, 0b101, 0b110}, rng);
        REQUIRE(norm2(pr.post) == Catch::Approx(1.0).epsilon(1e-9));
        const auto mz = joint_measure_qubit_z(pr.post, 1, rng);
        REQUIRE(norm2(mz.post) == Catch::Approx(1.0).epsilon(1e-9));
        const auto pj = joint_project_qubit(mz.post, 2, qs[2], rng);
        REQUIRE(norm2(pj.post) == Catch::Approx(1.0).epsilon(1e-9));
    }
}
