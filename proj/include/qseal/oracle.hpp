// Exact probabilities by exhaustive branch enumeration.
//
// A trial function that draws all of its randomness through RandomSource can
// be run under BranchExplorer instead of a Monte Carlo stream: every discrete
// draw becomes a choice point, the trial is re-executed once per leaf of the
// resulting tree, and outcome probabilities accumulate exactly.  Continuous
// draws are refused - fixtures must pin wobble angles and any other
// real-valued inputs before asking for exact numbers.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qseal/adversaries.hpp"
#include "qseal/rng.hpp"

namespace qseal {

struct BranchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BranchExplorer final : public RandomSource {
public:
    bool bernoulli(double p) override {
        if (p >= 1.0) return true;   // certain branches create no choice point
        if (p <= 0.0) return false;
        return take(Kind::Bernoulli, 2, p) == 0;
    }

    std::uint64_t uniform_index(std::uint64_t n) override {
        if (n == 0) throw std::invalid_argument("uniform_index: n == 0");
        if (n == 1) return 0;
        if (n > 4096) throw BranchBudgetExceeded("uniform_index arity too large to enumerate");
        return take(Kind::Uniform, n, 0.0);
    }

    double uniform_real(double, double) override {
        throw std::logic_error("exact oracle needs real-valued inputs pinned by a fixture");
    }

    // Probability of the path taken by the current pass.
    double path_probability() const { return prob_; }

    void begin_pass() {
        cursor_ = 0;
        prob_ = 1.0;
    }

    // Step to the next unexplored path; false once the tree is exhausted.
    bool advance() {
        while (!path_.empty()) {
            Choice& c = path_.back();
            if (c.taken + 1 < c.arity) {
                ++c.taken;
                return true;
            }
            path_.pop_back();
        }
        return false;
    }

private:
    enum class Kind { Bernoulli, Uniform };
    struct Choice {
        Kind kind;
        std::uint64_t arity;
        std::uint64_t taken;
        double p;  // bernoulli success probability
    };

    double option_probability(const Choice& c) const {
        if (c.kind == Kind::Uniform) return 1.0 / static_cast<double>(c.arity);
        return c.taken == 0 ? c.p : 1.0 - c.p;
    }

    std::uint64_t take(Kind kind, std::uint64_t arity, double p) {
        if (cursor_ == path_.size()) path_.push_back({kind, arity, 0, p});
        Choice& c = path_[cursor_++];
        if (c.kind != kind || c.arity != arity)
            throw std::logic_error("oracle trial is not deterministic between passes");
        if (kind == Kind::Bernoulli) c.p = p;  // replayed prefix keeps the fresh probability
        prob_ *= option_probability(c);
        return c.taken;
    }

    std::vector<Choice> path_;
    std::size_t cursor_ = 0;
    double prob_ = 1.0;
};

struct OracleResult {
    double escape = 0.0;
    double target_success = 0.0;
    double mean_info = 0.0;
    std::uint64_t leaves = 0;
    double total_probability = 0.0;  // sanity: must be 1 within float accumulation
};

inline OracleResult exact_oracle(const TrialFn& trial,
                                 std::uint64_t max_leaves = std::uint64_t{1} << 24) {
    BranchExplorer explorer;
    OracleResult result;
    do {
        explorer.begin_pass();
        const TrialOutcome out = trial(explorer);
        if (++result.leaves > max_leaves)
            throw BranchBudgetExceeded("exact_oracle: branch budget exceeded");
        const double p = explorer.path_probability();
        result.total_probability += p;
        if (out.escaped) result.escape += p;
        if (out.target_success) result.target_success += p;
        result.mean_info += p * out.info_bits;
    } while (explorer.advance());
    return result;
}

}  // namespace qseal
