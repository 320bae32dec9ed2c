// Quantum string sealing: seal an N-bit string into wobbled qubits, honest
// reading in the computational basis, and the owner's projection check, plus
// the two analytic security quantities (max reading error and the escape
// bound).

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qseal/quantum.hpp"
#include "qseal/rng.hpp"

namespace qseal {

struct RegisterEntangled : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Security parameters of a string seal: per-qubit wobble is drawn from
// [-Theta/N^alpha, +Theta/N^alpha].
struct SealParams {
    double Theta = std::numbers::pi / 8.0;
    double alpha = 0.25;
    int N = 1;

    void validate() const {
        if (!(Theta > 0.0) || Theta > std::numbers::pi / 8.0 + 1e-12)
            throw std::invalid_argument("SealParams: need 0 < Theta <= pi/8");
        if (!(alpha > 0.0) || !(alpha < 0.5))
            throw std::invalid_argument("SealParams: need 0 < alpha < 1/2");
        if (N < 1) throw std::invalid_argument("SealParams: need N >= 1");
    }

    double theta_bound() const { return Theta / std::pow(static_cast<double>(N), alpha); }
};

// Maximum per-bit honest reading error: sin^2(Theta / N^alpha).
inline double max_error_rate(const SealParams& params) {
    params.validate();
    const double s = std::sin(params.theta_bound());
    return s * s;
}

// Mean per-bit reading error under uniformly drawn wobble:
// E[sin^2 theta] = 1/2 - sin(2u)/(4u) with u = Theta/N^alpha.
inline double mean_error_rate(const SealParams& params) {
    params.validate();
    const double u = params.theta_bound();
    return 0.5 - std::sin(2.0 * u) / (4.0 * u);
}

// Escape bound for a reader extracting K bits: min(1, 2^-K prod 2 cos^2 theta_i).
inline double escape_bound(const std::vector<double>& thetas, int K) {
    if (K < 0 || static_cast<std::size_t>(K) > thetas.size())
        throw std::invalid_argument("escape_bound: need 0 <= K <= N");
    double log2p = -static_cast<double>(K);
    for (double t : thetas) {
        const double c = std::cos(t);
        log2p += 1.0 + std::log2(c * c);
    }
    return log2p >= 0.0 ? 1.0 : std::exp2(log2p);
}

// Exact escape probability of a reader who measures every qubit in Z:
// prod_i (cos^4 theta_i + sin^4 theta_i).
inline double measure_all_escape(const std::vector<double>& thetas) {
    double p = 1.0;
    for (double t : thetas) {
        const double c2 = std::cos(t) * std::cos(t);
        const double s2 = 1.0 - c2;
        p *= c2 * c2 + s2 * s2;
    }
    return p;
}

// The sealer's secret record: sealed bits, wobble angles, and the frame angle
// per position (nonzero only for rotated-basis positions of a bit seal).
struct OwnerRecord {
    std::vector<std::uint8_t> bits;
    std::vector<double> thetas;
    std::vector<double> frame_angles;
    SealParams params;

    int size() const { return static_cast<int>(bits.size()); }

    // The state the owner's check projects register i onto.
    PureQubit target(int i) const {
        const PureQubit z = PureQubit::sealed(bits.at(static_cast<std::size_t>(i)),
                                              thetas.at(static_cast<std::size_t>(i)));
        const double frame = frame_angles.at(static_cast<std::size_t>(i));
        if (frame == 0.0) return z;
        return Basis2{frame}.rotated(z);
    }
};

// The reader-visible registers.  Each register is either a lone qubit or a
// member of a JointState created by an adversary's collective measurement;
// the wrapper tracks which indices live inside which joint state.
class PublicRegisters {
public:
    explicit PublicRegisters(std::vector<PureQubit> qubits) {
        slots_.reserve(qubits.size());
        for (auto& q : qubits) slots_.push_back(Slot{q, -1, -1});
    }

    int size() const { return static_cast<int>(slots_.size()); }

    bool is_solo(int i) const { return slot(i).group < 0; }

    const PureQubit& qubit(int i) const {
        if (!is_solo(i)) throw RegisterEntangled("register is captured in a joint state");
        return slot(i).q;
    }

    void set_qubit(int i, const PureQubit& q) {
        if (!is_solo(i)) throw RegisterEntangled("register is captured in a joint state");
        slot(i).q = q;
    }

    // Z measurement of a single register (solo or inside a group).
    int measure_z(int i, RandomSource& rng) {
        Slot& s = slot(i);
        if (s.group < 0) {
            auto r = qseal::measure_z(s.q, rng);
            s.q = r.post;
            return r.outcome;
        }
        Group& g = groups_[static_cast<std::size_t>(s.group)];
        auto r = joint_measure_qubit_z(g.state, s.pos, rng);
        g.state = r.post;
        return r.outcome;
    }

    int measure_basis2(int i, const Basis2& basis, RandomSource& rng) {
        Slot& s = slot(i);
        if (s.group >= 0) throw RegisterEntangled("rotated measurement needs a solo register");
        auto r = qseal::measure_basis2(s.q, basis, rng);
        s.q = r.post;
        return r.outcome;
    }

    // Projection of register i onto |target><target|; collapses accordingly.
    bool project(int i, const PureQubit& target, RandomSource& rng) {
        Slot& s = slot(i);
        if (s.group < 0) {
            auto r = qseal::project(s.q, target, rng);
            s.q = r.post;
            return r.success;
        }
        Group& g = groups_[static_cast<std::size_t>(s.group)];
        auto r = joint_project_qubit(g.state, s.pos, target, rng);
        g.state = r.post;
        return r.success;
    }

    // Merge the given solo registers into one joint state, in the given order.
    // Returns the group id.
    int merge(const std::vector<int>& indices, int cap = kDefaultArityCap) {
        std::vector<PureQubit> qs;
        qs.reserve(indices.size());
        for (int i : indices) qs.push_back(qubit(i));  // throws if already grouped
        Group g{tensor(qs, cap), indices};
        const int id = static_cast<int>(groups_.size());
        for (std::size_t pos = 0; pos < indices.size(); ++pos) {
            Slot& s = slot(indices[pos]);
            s.group = id;
            s.pos = static_cast<int>(pos);
        }
        groups_.push_back(std::move(g));
        return id;
    }

    // Collective subset projection over a group created by merge().  The
    // accepted strings index the group's qubits in merge order.
    bool project_group_subset(int group_id, const std::vector<std::uint32_t>& accepted,
                              RandomSource& rng) {
        Group& g = groups_.at(static_cast<std::size_t>(group_id));
        auto r = joint_project_subset(g.state, accepted, rng);
        g.state = r.post;
        return r.success;
    }

    const JointState& group_state(int group_id) const {
        return groups_.at(static_cast<std::size_t>(group_id)).state;
    }

private:
    struct Slot {
        PureQubit q;
        int group;  // -1 when solo; otherwise index into groups_
        int pos;    // position within the group's merge order
    };
    struct Group {
        JointState state;
        std::vector<int> members;
    };

    Slot& slot(int i) { return slots_.at(static_cast<std::size_t>(i)); }
    const Slot& slot(int i) const { return slots_.at(static_cast<std::size_t>(i)); }

    std::vector<Slot> slots_;
    std::vector<Group> groups_;
};

enum class SealVerdict { Unread, ReadDetected };

struct CheckReport {
    SealVerdict verdict = SealVerdict::Unread;
    std::vector<int> failed_indices;
};

// Seal a bitstring: draw each wobble uniformly from the allowed interval and
// publish the wobbled qubits, keeping bits and angles in the owner's record.
inline std::pair<PublicRegisters, OwnerRecord> seal(const std::vector<std::uint8_t>& bits,
                                                    const SealParams& params, RandomSource& rng) {
    params.validate();
    if (static_cast<int>(bits.size()) != params.N)
        throw std::invalid_argument("seal: bit count does not match params.N");
    const double bound = params.theta_bound();
    OwnerRecord record;
    record.bits = bits;
    record.params = params;
    record.thetas.reserve(bits.size());
    record.frame_angles.assign(bits.size(), 0.0);
    std::vector<PureQubit> qubits;
    qubits.reserve(bits.size());
    for (std::uint8_t b : bits) {
        if (b > 1) throw std::invalid_argument("seal: bits must be 0/1");
        const double theta = rng.uniform_real(-bound, bound);
        record.thetas.push_back(theta);
        qubits.push_back(PureQubit::sealed(b, theta));
    }
    return {PublicRegisters(std::move(qubits)), std::move(record)};
}

// Honest reading: measure every register in the computational basis.  Refuses
// registers an adversary has merged into a joint state.
inline std::vector<std::uint8_t> read(PublicRegisters& regs, RandomSource& rng) {
    for (int i = 0; i < regs.size(); ++i) {
        if (!regs.is_solo(i)) throw RegisterEntangled("read: register is part of a joint state");
    }
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(regs.size()));
    for (int i = 0; i < regs.size(); ++i)
        out.push_back(static_cast<std::uint8_t>(regs.measure_z(i, rng)));
    return out;
}

// The owner's check: try to project each register onto its recorded state.
inline CheckReport check(PublicRegisters& regs, const OwnerRecord& record, RandomSource& rng) {
    if (regs.size() != record.size())
        throw std::invalid_argument("check: record does not match register count");
    CheckReport report;
    for (int i = 0; i < regs.size(); ++i) {
        if (!regs.project(i, record.target(i), rng)) report.failed_indices.push_back(i);
    }
    report.verdict = report.failed_indices.empty() ? SealVerdict::Unread : SealVerdict::ReadDetected;
    return report;
}

}  // namespace qseal
