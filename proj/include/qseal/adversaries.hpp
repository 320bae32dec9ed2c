// Concrete cheating strategies and the Monte Carlo harness that turns
// per-trial outcomes into escape / success statistics.
//
// The adversary's measurement class is projectors diagonal in the
// computational basis of the attacked subset (plus the parity projector);
// general POVMs and unitaries are not modeled.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "qseal/qbc.hpp"
#include "qseal/seal_bit.hpp"
#include "qseal/stats.hpp"

namespace qseal {

// One adversarial (or honest) trial: did the cheater pass every check, did
// it also achieve its chosen target, and how much information did it gain
// (log2 of the shrink of its candidate set - a reporting convention).
struct TrialOutcome {
    bool escaped = false;
    bool target_success = false;
    double info_bits = 0.0;
};

// A role plus a behaviour, as selected on the command line.
struct Strategy {
    enum class Role { Committer, Owner, SealReader };
    enum class Behavior {
        Honest,
        DeferredChoiceBasic,
        CollectiveSearchAdvanced,
        MeasureAllReader,
        SubsetParityReader,
    };
    Role role = Role::Committer;
    Behavior behavior = Behavior::Honest;
    int t_max = 8;

    void validate() const {
        const bool reader = behavior == Behavior::MeasureAllReader ||
                            behavior == Behavior::SubsetParityReader;
        if (reader != (role == Role::SealReader))
            throw std::invalid_argument("Strategy: behavior is not legal for the role");
    }
};

struct AttackReport {
    std::string strategy;
    std::size_t trials = 0;
    double escape_rate = 0.0;
    double target_success_rate = 0.0;
    double info_proxy = 0.0;
    double escape_ci95 = 0.0;
    double success_ci95 = 0.0;
    std::string params_snapshot;
};

// ---------------------------------------------------------------------------
// Session-level strategies

// The weak deferred-choice cheat on the basic protocol: commit to nothing,
// decide b at unveil from whatever the chosen register reads.
inline TrialOutcome deferred_choice_basic(int target_b, const ProtocolParams& params,
                                          RandomSource& rng, const SessionFixture& fixture = {},
                                          bool deterministic_layout = false) {
    CommitterStrategy committer{CommitterStrategy::Kind::DeferredChoice, 8, deterministic_layout};
    const auto session = run_basic(target_b, committer, OwnerStrategy{}, params, rng, fixture);
    TrialOutcome out;
    out.escaped = session.verdict.accepted;
    out.target_success = out.escaped && session.verdict.unveiled_bit == target_b;
    out.info_bits = session.info_bits;
    return out;
}

// The collective-measurement search on the advanced protocol: announce noise
// in the commit phase, then hunt at unveil for an n-subset whose sealed data
// matches the announcements, using subset-subspace projectors.
inline TrialOutcome collective_search_advanced(int target_b, const ProtocolParams& params,
                                               int t_max, RandomSource& rng,
                                               const SessionFixture& fixture = {},
                                               bool deterministic_layout = false) {
    CommitterStrategy committer{CommitterStrategy::Kind::CollectiveSearch, t_max,
                                deterministic_layout};
    const auto session = run_advanced(target_b, committer, OwnerStrategy{}, params, rng, fixture);
    TrialOutcome out;
    out.escaped = session.verdict.accepted;
    out.target_success = out.escaped && session.verdict.unveiled_bit == target_b;
    out.info_bits = session.info_bits;
    return out;
}

// ---------------------------------------------------------------------------
// Seal-level readers

struct SealFixture {
    std::optional<std::vector<std::uint8_t>> bits;
    std::optional<std::vector<double>> thetas;
};

namespace detail {
inline std::pair<PublicRegisters, OwnerRecord> seal_fixture(const SealParams& params,
                                                            const SealFixture& fixture,
                                                            RandomSource& rng) {
    SessionFixture f;
    f.owner_bits = fixture.bits;
    f.thetas = fixture.thetas;
    return seal_session(params, f, rng);
}
}  // namespace detail

// Read every qubit in Z (K = N bits of information), then face the owner's
// check.  The escape rate realizes prod_i(cos^4 theta_i + sin^4 theta_i).
inline TrialOutcome measure_all_reader(const SealParams& params, RandomSource& rng,
                                       const SealFixture& fixture = {}) {
    auto [regs, record] = detail::seal_fixture(params, fixture, rng);
    const auto readout = read(regs, rng);
    const auto report = check(regs, record, rng);
    TrialOutcome out;
    out.escaped = report.verdict == SealVerdict::Unread;
    out.target_success = out.escaped && readout == record.bits;
    out.info_bits = static_cast<double>(params.N);
    return out;
}

// The known-mapping attack on a mechanically sealed bit: project the
// designated qubits onto the even/odd parity subspace, learning the bit with
// far less disturbance than a full readout.
inline TrialOutcome subset_parity_reader(int b, const ParityOfPositions& rule,
                                         const SealParams& params, RandomSource& rng,
                                         const SealFixture& fixture = {}) {
    if (fixture.bits || fixture.thetas)
        throw std::invalid_argument("subset_parity_reader: fixtures unsupported");
    auto sealed = seal_bit(b, rule, params, rng);
    if (rule.count > kDefaultArityCap)
        throw ArityExceeded("subset_parity_reader: payload beyond the arity cap");
    const auto positions = rule.positions();
    const int gid = sealed.regs.merge(positions);
    std::vector<std::uint32_t> even;
    for (std::uint32_t y = 0; y < (1u << rule.count); ++y) {
        if ((std::popcount(y) & 1) == 0) even.push_back(y);
    }
    const bool got_even = sealed.regs.project_group_subset(gid, even, rng);
    const int learned = got_even ? 0 : 1;
    const auto report = check(sealed.regs, sealed.record, rng);
    TrialOutcome out;
    out.escaped = report.verdict == SealVerdict::Unread;
    out.target_success = out.escaped && learned == b;
    out.info_bits = 1.0;
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo harness

using TrialFn = std::function<TrialOutcome(RandomSource&)>;

inline AttackReport run_attack(const std::string& name, const TrialFn& trial, std::size_t trials,
                               const Rng& base, const std::string& params_snapshot = "") {
    if (trials == 0) throw std::invalid_argument("run_attack: need at least one trial");
    AttackReport report;
    report.strategy = name;
    report.trials = trials;
    report.params_snapshot = params_snapshot;
    std::size_t escapes = 0, successes = 0;
    double info = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng trial_rng = base.derive(t);
        const TrialOutcome out = trial(trial_rng);
        escapes += out.escaped;
        successes += out.target_success;
        info += out.info_bits;
    }
    const double td = static_cast<double>(trials);
    report.escape_rate = static_cast<double>(escapes) / td;
    report.target_success_rate = static_cast<double>(successes) / td;
    report.info_proxy = info / td;
    report.escape_ci95 = stats::binomial_ci95(report.escape_rate, trials);
    report.success_ci95 = stats::binomial_ci95(report.target_success_rate, trials);
    return report;
}

}  // namespace qseal
