// Shared test-side instruments.

#pragma once

#include <stdexcept>
#include <vector>

#include "qseal/rng.hpp"

namespace qseal::testing {

// Records every bernoulli probability the code under test asks for while
// forcing a scripted answer, so success probabilities can be asserted exactly
// instead of estimated.
class ProbeRng final : public RandomSource {
public:
    explicit ProbeRng(std::vector<bool> answers) : answers_(std::move(answers)) {}

    bool bernoulli(double p) override {
        probs.push_back(p);
        if (at_ >= answers_.size()) throw std::logic_error("ProbeRng: script exhausted");
        return answers_[at_++];
    }
    std::uint64_t uniform_index(std::uint64_t) override {
        throw std::logic_error("ProbeRng: uniform_index not scripted");
    }
    double uniform_real(double, double) override {
        throw std::logic_error("ProbeRng: uniform_real not scripted");
    }

    std::vector<double> probs;

private:
    std::vector<bool> answers_;
    std::size_t at_ = 0;
};

}  // namespace qseal::testing
