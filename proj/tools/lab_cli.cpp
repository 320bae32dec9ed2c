// Command-line lab: seal walk-throughs, protocol sessions, attack batches,
// and parameter sweeps, all seeded and reproducible.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qseal/report.hpp"

namespace {

using qseal::ExperimentSpec;

// Relative output paths land in $QSEAL_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("QSEAL_OUT_DIR");
    if (!dir || *dir == '\0' || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(dir) / path).string();
}

void apply_config(const std::string& config_path, ExperimentSpec& spec) {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    spec = qseal::parse_config(in, spec);
}

int run_spec(ExperimentSpec spec) {
    spec.out_path = resolve_out(spec.out_path);
    return qseal::run_experiment(spec) ? 0 : 1;
}

void add_grid_flags(CLI::App* cmd, ExperimentSpec& spec) {
    cmd->add_option("--s", spec.s_values, "total sealed registers per session");
    cmd->add_option("--m", spec.m_values, "spot-check sample size");
    cmd->add_option("--n", spec.n_values, "committed block length");
    cmd->add_option("--N", spec.N_values, "string seal length (seal-level attacks)");
    cmd->add_option("--theta", spec.Theta_values, "wobble scale parameter");
    cmd->add_option("--alpha", spec.alpha_values, "wobble decay exponent");
    cmd->add_option("--t-max", spec.t_max, "collective search attempt budget");
    cmd->add_option("--generator", spec.G_rows, "generator matrix rows as 0/1 strings");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum seal commitment lab"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after the subcommand too

    ExperimentSpec spec;
    std::string config_path;
    qseal::SealDemoArgs demo;

    app.add_option("--seed", spec.seed, "master seed")->capture_default_str();
    app.add_option("--trials", spec.trials, "Monte Carlo trials per grid cell")
        ->capture_default_str();
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--out", spec.out_path, "report CSV path")->capture_default_str();

    auto* demo_cmd = app.add_subcommand("seal-demo", "seal a string, optionally read it, then check");
    demo_cmd->add_option("--N", demo.N, "sealed string length")->capture_default_str();
    demo_cmd->add_option("--theta", demo.Theta, "wobble scale parameter")->capture_default_str();
    demo_cmd->add_option("--alpha", demo.alpha, "wobble decay exponent")->capture_default_str();
    demo_cmd->add_flag("--read,!--no-read", demo.do_read, "read before the owner's check");
    demo_cmd->add_option("--rule", demo.rule, "bit seal rule: parity, rotated-pair, no-clue");
    demo_cmd->add_option("--angle", demo.angle_degrees, "rotated-pair basis angle in degrees")
        ->capture_default_str();

    auto* basic_cmd = app.add_subcommand("commit-basic", "run basic protocol sessions");
    auto* advanced_cmd = app.add_subcommand("commit-advanced", "run advanced protocol sessions");
    auto* attack_cmd = app.add_subcommand("attack", "run an adversarial strategy in batch");
    auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep over parameters");
    for (CLI::App* cmd : {basic_cmd, advanced_cmd, attack_cmd, sweep_cmd}) {
        add_grid_flags(cmd, spec);
        cmd->add_option("--strategy", spec.strategy,
                        "honest, flip, deferred-choice, random-indices, collective-search, "
                        "measure-all, subset-parity")
            ->capture_default_str();
    }
    bool print_transcript = false;
    basic_cmd->add_flag("--transcript", print_transcript, "print one session transcript");
    advanced_cmd->add_flag("--transcript", print_transcript, "print one session transcript");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_config(config_path, spec);
        if (demo_cmd->parsed()) {
            demo.seed = spec.seed;
            qseal::seal_demo(demo, std::cout);
            return 0;
        }
        if (basic_cmd->parsed()) spec.kind = ExperimentSpec::Kind::Basic;
        else if (advanced_cmd->parsed()) spec.kind = ExperimentSpec::Kind::Advanced;
        else if (attack_cmd->parsed()) spec.kind = ExperimentSpec::Kind::Attack;
        else if (sweep_cmd->parsed()) spec.kind = ExperimentSpec::Kind::Sweep;

        if (print_transcript) {
            qseal::ProtocolParams params = qseal::ProtocolParams::make(
                spec.s_values.front(), spec.m_values.front(), spec.n_values.front(),
                qseal::GeneratorMatrix::parse(spec.G_rows), spec.Theta_values.front(),
                spec.alpha_values.front());
            qseal::Rng rng(spec.seed);
            const int b = rng.bit();
            const auto session =
                spec.kind == ExperimentSpec::Kind::Advanced
                    ? qseal::run_advanced(b, {}, {}, params, rng)
                    : qseal::run_basic(b, {}, {}, params, rng);
            std::cout << session.transcript.serialize();
            std::cout << "verdict: " << (session.verdict.accepted ? "accept" : "reject") << '\n';
            return 0;
        }
        return run_spec(std::move(spec));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
