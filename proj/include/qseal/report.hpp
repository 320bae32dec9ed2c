// Batch experiment driver: parameter grids, seeded cell/trial streams, CSV
// reports with analytic reference columns, and the seal walk-through demo.
//
// Stream derivation: the master seed is split per grid cell by the cell's
// linear index, and each cell stream is split per trial index, so adding
// cells or trials never perturbs other cells' results.  Reports carry no
// timestamps; a rerun with the same spec and seed is byte-identical.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qseal/adversaries.hpp"
#include "qseal/oracle.hpp"

namespace qseal {

inline constexpr const char* kLibraryVersion = "qseal 0.1.0";

struct ExperimentSpec {
    enum class Kind { SealDemo, Basic, Advanced, Attack, Sweep };

    Kind kind = Kind::Basic;
    std::string strategy = "honest";
    std::vector<int> s_values{64};
    std::vector<int> m_values{16};
    std::vector<int> n_values{8};
    std::vector<int> N_values{64};
    std::vector<double> Theta_values{std::numbers::pi / 8.0};
    std::vector<double> alpha_values{0.25};
    std::vector<std::string> G_rows{"10000111", "01001011", "00101101", "00011110"};
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::string out_path = "report.csv";
    int t_max = 8;
    double noclue_fraction = 0.0;

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::SealDemo: return "seal-demo";
            case Kind::Basic: return "basic";
            case Kind::Advanced: return "advanced";
            case Kind::Attack: return "attack";
            case Kind::Sweep: return "sweep";
        }
        return "?";
    }

    // Collects every violated invariant instead of stopping at the first.
    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        if (trials < 100) out.push_back("trials must be >= 100");
        auto check_nonempty = [&](const auto& v, const char* name) {
            if (v.empty()) out.push_back(std::string(name) + " grid is empty");
        };
        check_nonempty(s_values, "s");
        check_nonempty(m_values, "m");
        check_nonempty(n_values, "n");
        check_nonempty(N_values, "N");
        check_nonempty(Theta_values, "Theta");
        check_nonempty(alpha_values, "alpha");
        for (double Theta : Theta_values) {
            for (double alpha : alpha_values) {
                for (int N : N_values) {
                    try {
                        SealParams{Theta, alpha, N}.validate();
                    } catch (const std::exception& e) {
                        out.push_back(e.what());
                    }
                }
            }
        }
        if (session_level()) {
            try {
                const GeneratorMatrix G = GeneratorMatrix::parse(G_rows);
                for (int s : s_values)
                    for (int m : m_values)
                        for (int n : n_values) {
                            try {
                                ProtocolParams::make(s, m, n, G).validate(advanced_protocol());
                            } catch (const std::exception& e) {
                                out.push_back(e.what());
                            }
                        }
            } catch (const std::exception& e) {
                out.push_back(e.what());
            }
        }
        if (t_max < 1) out.push_back("t_max must be >= 1");
        if (strategy == "subset-parity") {
            for (int N : N_values) {
                if (N < kHeaderBits + 2)
                    out.push_back("subset-parity needs N to fit a header plus a payload pair");
            }
        }
        if (noclue_fraction < 0.0 || noclue_fraction > 1.0)
            out.push_back("noclue_fraction must lie in [0,1]");
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool seal_level() const {
        return strategy == "measure-all" || strategy == "subset-parity";
    }
    bool session_level() const { return !seal_level() && kind != Kind::SealDemo; }
    bool advanced_protocol() const {
        if (kind == Kind::Basic) return false;
        if (kind == Kind::Advanced) return true;
        return strategy != "deferred-choice";  // attack/sweep: protocol follows the strategy
    }
};

// ---------------------------------------------------------------------------
// Config file: `key = value` lines, comma-separated grids, `#` comments,
// generator matrix rows separated by semicolons.

inline ExperimentSpec parse_config(std::istream& in, ExperimentSpec spec = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto split = [&](char sep) {
            std::vector<std::string> parts;
            std::istringstream vs(value);
            std::string part;
            while (std::getline(vs, part, sep)) parts.push_back(trim(part));
            return parts;
        };
        auto ints = [&] {
            std::vector<int> out;
            for (const auto& p : split(',')) out.push_back(std::stoi(p));
            return out;
        };
        auto doubles = [&] {
            std::vector<double> out;
            for (const auto& p : split(',')) out.push_back(std::stod(p));
            return out;
        };
        if (key == "kind") {
            if (value == "seal-demo") spec.kind = ExperimentSpec::Kind::SealDemo;
            else if (value == "basic") spec.kind = ExperimentSpec::Kind::Basic;
            else if (value == "advanced") spec.kind = ExperimentSpec::Kind::Advanced;
            else if (value == "attack") spec.kind = ExperimentSpec::Kind::Attack;
            else if (value == "sweep") spec.kind = ExperimentSpec::Kind::Sweep;
            else throw std::invalid_argument("config: unknown kind " + value);
        } else if (key == "strategy") spec.strategy = value;
        else if (key == "s") spec.s_values = ints();
        else if (key == "m") spec.m_values = ints();
        else if (key == "n") spec.n_values = ints();
        else if (key == "N") spec.N_values = ints();
        else if (key == "Theta") spec.Theta_values = doubles();
        else if (key == "alpha") spec.alpha_values = doubles();
        else if (key == "G") spec.G_rows = split(';');
        else if (key == "trials") spec.trials = static_cast<std::size_t>(std::stoull(value));
        else if (key == "seed") spec.seed = std::stoull(value);
        else if (key == "out") spec.out_path = value;
        else if (key == "t_max") spec.t_max = std::stoi(value);
        else if (key == "noclue_fraction") spec.noclue_fraction = std::stod(value);
        else throw std::invalid_argument("config: unknown key " + key);
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Report rows

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}
inline const std::string kNA = "n/a";

struct ReportRow {
    std::string kind, strategy;
    int s = 0, m = 0, n = 0, N = 0;
    double Theta = 0.0, alpha = 0.0;
    std::size_t trials = 0;
    std::string accept_rate = kNA, accept_ci95 = kNA, alarm_rate = kNA;
    std::string escape_rate = kNA, escape_ci95 = kNA;
    std::string success_rate = kNA, success_ci95 = kNA;
    std::string codeword_escape_rate = kNA;
    std::string info_proxy = kNA;
    std::string analytic_eps = kNA, analytic_escape = kNA, escape_bound = kNA;
    std::string codeword_expected = kNA;
    bool pass = true;

    static std::string header() {
        return "kind,strategy,s,m,n,N,Theta,alpha,trials,accept_rate,accept_ci95,alarm_rate,"
               "escape_rate,escape_ci95,success_rate,success_ci95,codeword_escape_rate,"
               "info_proxy,analytic_eps,analytic_escape,escape_bound,codeword_expected,pass";
    }
    std::string line() const {
        std::ostringstream out;
        out << kind << ',' << strategy << ',' << s << ',' << m << ',' << n << ',' << N << ','
            << fmt(Theta) << ',' << fmt(alpha) << ',' << trials << ',' << accept_rate << ','
            << accept_ci95 << ',' << alarm_rate << ',' << escape_rate << ',' << escape_ci95 << ','
            << success_rate << ',' << success_ci95 << ',' << codeword_escape_rate << ','
            << info_proxy << ',' << analytic_eps << ',' << analytic_escape << ',' << escape_bound
            << ',' << codeword_expected << ',' << (pass ? 1 : 0);
        return out.str();
    }
};

struct SessionTally {
    std::size_t accepted_excl = 0, alarms = 0, escapes = 0, successes = 0, codeword_escapes = 0;
    double info = 0.0;
};

// Seal-level attack cells: the wobble vector is pinned per cell so the
// analytic escape product and the escape bound are exact references.
inline void run_seal_cell(const ExperimentSpec& spec, ReportRow& row, const Rng& cell);
// Session cells: honest completeness and the session-level cheats.
inline void run_session_cell(const ExperimentSpec& spec, ReportRow& row, const Rng& cell);

}  // namespace detail

// ---------------------------------------------------------------------------
// The experiment runner

inline bool run_experiment(const ExperimentSpec& spec, std::ostream& log = std::cerr) {
    const auto violations = spec.violations();
    if (!violations.empty()) {
        std::string msg = "invalid experiment spec:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw std::invalid_argument(msg);
    }
    if (spec.kind == ExperimentSpec::Kind::SealDemo)
        throw std::invalid_argument("run_experiment: seal-demo is not a grid experiment");

    const Rng master(spec.seed);
    std::vector<detail::ReportRow> rows;
    bool all_pass = true;
    std::size_t cell_index = 0;

    for (int s : spec.s_values)
        for (int m : spec.m_values)
            for (int n : spec.n_values)
                for (int N : spec.N_values)
                    for (double Theta : spec.Theta_values)
                        for (double alpha : spec.alpha_values) {
                            const Rng cell = master.derive(cell_index++);
                            detail::ReportRow row;
                            row.kind = ExperimentSpec::kind_name(spec.kind);
                            row.strategy = spec.strategy;
                            row.s = s;
                            row.m = m;
                            row.n = n;
                            // session cells seal one register per protocol
                            // position, so the effective string length is s
                            row.N = spec.seal_level() ? N : s;
                            row.Theta = Theta;
                            row.alpha = alpha;
                            row.trials = spec.trials;
                            if (spec.seal_level()) detail::run_seal_cell(spec, row, cell);
                            else detail::run_session_cell(spec, row, cell);
                            all_pass = all_pass && row.pass;
                            rows.push_back(std::move(row));
                        }

    // collective-search sweeps over n: adjacent-CI monotone decay check
    if (spec.strategy == "collective-search" && rows.size() > 1) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].n <= rows[i - 1].n) continue;
            const double prev = std::stod(rows[i - 1].success_rate);
            const double prev_ci = std::stod(rows[i - 1].success_ci95);
            const double cur = std::stod(rows[i].success_rate);
            const double cur_ci = std::stod(rows[i].success_ci95);
            if (cur - cur_ci > prev + prev_ci) {
                rows[i].pass = false;
                all_pass = false;
            }
        }
    }

    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report: " + spec.out_path);
    out << detail::ReportRow::header() << '\n';
    for (const auto& row : rows) out << row.line() << '\n';
    out.close();

    std::ofstream meta(spec.out_path + ".meta", std::ios::binary);
    meta << "version: " << kLibraryVersion << '\n'
         << "kind: " << ExperimentSpec::kind_name(spec.kind) << '\n'
         << "strategy: " << spec.strategy << '\n'
         << "seed: " << spec.seed << '\n'
         << "trials: " << spec.trials << '\n'
         << "cells: " << rows.size() << '\n';
    for (const auto& g : spec.G_rows) meta << "G: " << g << '\n';
    meta << "note: adversary model is computational-basis subset projectors; "
            "general POVMs are not modeled\n";
    meta.close();

    log << "wrote " << rows.size() << " rows to " << spec.out_path
        << (all_pass ? " (all pass)" : " (FAILURES)") << '\n';
    return all_pass;
}

inline void detail::run_seal_cell(const ExperimentSpec& spec, ReportRow& row, const Rng& cell) {
    const SealParams params{row.Theta, row.alpha, row.N};
    row.analytic_eps = fmt(max_error_rate(params));
    // stratified midpoint wobble grid: deterministic per cell, so the
    // analytic escape product is an exact reference
    std::vector<double> thetas;
    const double bound = params.theta_bound();
    for (int i = 0; i < row.N; ++i)
        thetas.push_back(bound * ((2.0 * i + 1.0) / static_cast<double>(row.N) - 1.0));
    const SealFixture fixture{std::nullopt, thetas};

    TrialFn trial;
    if (spec.strategy == "measure-all") {
        trial = [&](RandomSource& rng) { return measure_all_reader(params, rng, fixture); };
    } else {  // subset-parity on a fresh bit seal each trial; wobble redrawn
        const ParityOfPositions rule{kHeaderBits, std::min(4, row.N - kHeaderBits)};
        trial = [&](RandomSource& rng) {
            return subset_parity_reader(static_cast<int>(rng.uniform_index(2)), rule, params, rng);
        };
    }
    const AttackReport report = run_attack(spec.strategy, trial, spec.trials, cell.derive(1));
    row.escape_rate = fmt(report.escape_rate);
    row.escape_ci95 = fmt(report.escape_ci95);
    row.success_rate = fmt(report.target_success_rate);
    row.success_ci95 = fmt(report.success_ci95);
    row.info_proxy = fmt(report.info_proxy);
    if (spec.strategy == "measure-all") {
        const double analytic = measure_all_escape(thetas);
        const double bound_val = escape_bound(thetas, row.N);
        row.analytic_escape = fmt(analytic);
        row.escape_bound = fmt(bound_val);
        row.pass = stats::within_three_sigma(report.escape_rate, analytic, spec.trials) &&
                   report.escape_rate <= bound_val + stats::three_sigma(bound_val, spec.trials);
    }
}

inline void detail::run_session_cell(const ExperimentSpec& spec, ReportRow& row, const Rng& cell) {
    const bool advanced = spec.advanced_protocol();
    ProtocolParams params =
        ProtocolParams::make(row.s, row.m, row.n, GeneratorMatrix::parse(spec.G_rows), row.Theta,
                             row.alpha);
    params.validate(advanced);
    row.analytic_eps = fmt(max_error_rate(params.seal));

    CommitterStrategy committer;
    if (spec.strategy == "honest") committer.kind = CommitterStrategy::Kind::Honest;
    else if (spec.strategy == "flip") committer.kind = CommitterStrategy::Kind::FlipAtUnveil;
    else if (spec.strategy == "deferred-choice") committer.kind = CommitterStrategy::Kind::DeferredChoice;
    else if (spec.strategy == "random-indices") committer.kind = CommitterStrategy::Kind::RandomIndices;
    else if (spec.strategy == "collective-search") committer.kind = CommitterStrategy::Kind::CollectiveSearch;
    else throw std::invalid_argument("unknown strategy: " + spec.strategy);
    committer.t_max = spec.t_max;

    SessionTally tally;
    const Rng trials_rng = cell.derive(1);
    for (std::size_t t = 0; t < spec.trials; ++t) {
        Rng rng = trials_rng.derive(t);
        const int b = rng.bit();
        const SessionResult session = advanced
                                          ? run_advanced(b, committer, OwnerStrategy{}, params, rng)
                                          : run_basic(b, committer, OwnerStrategy{}, params, rng);
        tally.accepted_excl += session.verdict.accepted_excluding_alarms();
        tally.alarms += session.verdict.failed(CheckKind::Randomness) ||
                        session.verdict.failed(CheckKind::Mismatch);
        tally.escapes += session.verdict.accepted;
        tally.successes += session.verdict.accepted && session.verdict.unveiled_bit == b;
        tally.codeword_escapes += !session.verdict.failed(CheckKind::Codeword);
        tally.info += session.info_bits;
    }
    const double td = static_cast<double>(spec.trials);
    const double accept = static_cast<double>(tally.accepted_excl) / td;
    const double alarm = static_cast<double>(tally.alarms) / td;
    const double escape = static_cast<double>(tally.escapes) / td;
    const double success = static_cast<double>(tally.successes) / td;
    const double cw = static_cast<double>(tally.codeword_escapes) / td;
    row.accept_rate = fmt(accept);
    row.accept_ci95 = fmt(stats::binomial_ci95(accept, spec.trials));
    row.alarm_rate = fmt(alarm);
    row.escape_rate = fmt(escape);
    row.escape_ci95 = fmt(stats::binomial_ci95(escape, spec.trials));
    row.success_rate = fmt(success);
    row.success_ci95 = fmt(stats::binomial_ci95(success, spec.trials));
    row.info_proxy = fmt(tally.info / td);
    if (advanced) row.codeword_escape_rate = fmt(cw);

    switch (committer.kind) {
        case CommitterStrategy::Kind::Honest:
            row.pass = accept == 1.0 && alarm < 1e-3;
            break;
        case CommitterStrategy::Kind::FlipAtUnveil:
            row.pass = escape == 0.0;
            break;
        case CommitterStrategy::Kind::DeferredChoice:
            row.pass = std::abs(escape - 1.0) <= stats::three_sigma(std::max(escape, 1e-6), spec.trials) + 1e-12 &&
                       stats::within_three_sigma(success, 0.5, spec.trials);
            break;
        case CommitterStrategy::Kind::RandomIndices: {
            const double expected = std::exp2(params.G.k() - params.G.n());
            row.codeword_expected = fmt(expected);
            row.pass = stats::within_three_sigma(cw, expected, spec.trials);
            break;
        }
        case CommitterStrategy::Kind::CollectiveSearch:
            row.pass = true;  // the decay trend across n is judged over the whole sweep
            break;
    }
}

// ---------------------------------------------------------------------------
// Seal walk-through demo

struct SealDemoArgs {
    int N = 40;
    double Theta = std::numbers::pi / 8.0;
    double alpha = 0.25;
    std::uint64_t seed = 1;
    bool do_read = false;
    std::string rule;        // "", "parity", "rotated-pair", "no-clue"
    int angle_degrees = 15;  // rotated-pair basis angle
};

inline void seal_demo(const SealDemoArgs& args, std::ostream& out) {
    const SealParams params{args.Theta, args.alpha, args.N};
    params.validate();
    Rng rng(args.seed);
    out << "seal demo: N=" << args.N << " Theta=" << detail::fmt(args.Theta)
        << " alpha=" << detail::fmt(args.alpha) << " seed=" << args.seed << '\n';
    out << "max per-bit reading error eps = " << detail::fmt(max_error_rate(params)) << '\n';

    PublicRegisters regs{{}};
    OwnerRecord record;
    if (args.rule.empty()) {
        std::vector<std::uint8_t> bits;
        for (int i = 0; i < args.N; ++i) bits.push_back(static_cast<std::uint8_t>(rng.bit()));
        auto sealed = seal(bits, params, rng);
        regs = std::move(sealed.first);
        record = std::move(sealed.second);
    } else {
        MappingRule rule;
        if (args.rule == "parity") rule = ParityOfPositions{kHeaderBits, 2};
        else if (args.rule == "rotated-pair") rule = RotatedPairParity{args.N - 2, args.angle_degrees};
        else if (args.rule == "no-clue") rule = NoClue{};
        else throw std::invalid_argument("seal_demo: unknown rule " + args.rule);
        const int b = rng.bit();
        auto sealed = seal_bit(b, rule, params, rng);
        out << "sealed bit b=" << b << " under rule " << args.rule << '\n';
        regs = std::move(sealed.regs);
        record = std::move(sealed.record);
        if (args.do_read) {
            const auto recovered = read_bit(regs, rng);
            out << "read_bit -> " << (recovered ? std::to_string(*recovered) : "Indeterminate")
                << '\n';
        }
    }
    if (args.rule.empty() && args.do_read) {
        const auto readout = read(regs, rng);
        std::size_t errors = 0;
        for (int i = 0; i < args.N; ++i)
            errors += readout[static_cast<std::size_t>(i)] != record.bits[static_cast<std::size_t>(i)];
        out << "read " << args.N << " bits, " << errors << " reading errors\n";
    }
    const auto report = check(regs, record, rng);
    out << "check: per-qubit projections ";
    for (int i = 0; i < args.N; ++i) {
        const bool failed = std::find(report.failed_indices.begin(), report.failed_indices.end(),
                                      i) != report.failed_indices.end();
        out << (failed ? 'x' : '.');
    }
    out << '\n'
        << "verdict: " << (report.verdict == SealVerdict::Unread ? "Unread" : "ReadDetected")
        << '\n';
    if (args.do_read)
        out << "analytic escape for a full read: "
            << detail::fmt(measure_all_escape(record.thetas)) << '\n';
}

}  // namespace qseal
