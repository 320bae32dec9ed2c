// Exact state-vector simulation of single qubits and small joint registers.
//
// All states in the sealing protocols are real-valued, so amplitudes are
// doubles throughout.  Values are immutable; measurement operations take a
// state and return the outcome together with the post-measurement state.
// Index convention for joint states: the first qubit is the most significant
// bit of the amplitude index.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qseal/rng.hpp"

namespace qseal {

inline constexpr double kNormTolerance = 1e-9;
inline constexpr int kDefaultArityCap = 16;

struct ArityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotProductState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normalized real-amplitude qubit.  Constructible only through the named
// preparation functions; raw amplitudes are validated.
class PureQubit {
public:
    static PureQubit ket0() { return PureQubit(1.0, 0.0); }
    static PureQubit ket1() { return PureQubit(0.0, 1.0); }

    // cos(theta)|bit> + sin(theta)|~bit>
    static PureQubit sealed(int bit, double theta) {
        if (bit != 0 && bit != 1) throw std::invalid_argument("sealed: bit must be 0 or 1");
        if (!std::isfinite(theta)) throw std::invalid_argument("sealed: theta not finite");
        const double c = std::cos(theta), s = std::sin(theta);
        return bit == 0 ? PureQubit(c, s) : PureQubit(s, c);
    }

    static PureQubit prepared(double amp0, double amp1) {
        const double norm2 = amp0 * amp0 + amp1 * amp1;
        if (std::abs(norm2 - 1.0) > kNormTolerance)
            throw std::invalid_argument("prepared: amplitudes not normalized");
        const double inv = 1.0 / std::sqrt(norm2);
        return PureQubit(amp0 * inv, amp1 * inv);
    }

    double amp0() const { return a0_; }
    double amp1() const { return a1_; }

    double overlap(const PureQubit& other) const { return a0_ * other.a0_ + a1_ * other.a1_; }

    // Equal as state vectors up to global sign, bit-exact.
    bool same_ray(const PureQubit& other) const {
        return (a0_ == other.a0_ && a1_ == other.a1_) || (a0_ == -other.a0_ && a1_ == -other.a1_);
    }

private:
    PureQubit(double a0, double a1) : a0_(a0), a1_(a1) {}
    double a0_, a1_;
};

// Orthonormal basis {cos(phi)|0> + sin(phi)|1>, -sin(phi)|0> + cos(phi)|1>}.
struct Basis2 {
    double angle = 0.0;

    PureQubit vec0() const { return PureQubit::prepared(std::cos(angle), std::sin(angle)); }
    PureQubit vec1() const { return PureQubit::prepared(-std::sin(angle), std::cos(angle)); }

    // The basis state with index k, rotated by `angle` from the Z frame.
    PureQubit rotated(const PureQubit& zframe) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return PureQubit::prepared(c * zframe.amp0() - s * zframe.amp1(),
                                   s * zframe.amp0() + c * zframe.amp1());
    }
};

struct MeasureResult {
    int outcome;
    PureQubit post;
};

struct ProjectResult {
    bool success;
    PureQubit post;
};

// Z-basis measurement with collapse.
inline MeasureResult measure_z(const PureQubit& state, RandomSource& rng) {
    const double p0 = state.amp0() * state.amp0();
    if (rng.bernoulli(p0)) return {0, PureQubit::ket0()};
    return {1, PureQubit::ket1()};
}

// Project onto |target><target|.  On success the post state is the target; on
// failure it is the normalized orthogonal component.  Projection of a state
// onto itself succeeds with probability exactly 1 (bit-exact).
inline ProjectResult project(const PureQubit& state, const PureQubit& target, RandomSource& rng) {
    if (state.same_ray(target)) return {true, target};
    const double d = state.overlap(target);
    const double p = std::min(d * d, 1.0);
    if (rng.bernoulli(p)) return {true, target};
    // orthogonal component of |state> w.r.t. |target>
    const double r0 = state.amp0() - d * target.amp0();
    const double r1 = state.amp1() - d * target.amp1();
    const double norm = std::sqrt(r0 * r0 + r1 * r1);
    if (norm == 0.0) return {true, target};  // unreachable: same_ray covers p == 1
    return {false, PureQubit::prepared(r0 / norm, r1 / norm)};
}

// Measurement in a rotated orthonormal basis.
inline MeasureResult measure_basis2(const PureQubit& state, const Basis2& basis, RandomSource& rng) {
    const PureQubit b0 = basis.vec0();
    if (state.same_ray(b0)) return {0, b0};
    const double d0 = state.overlap(b0);
    if (rng.bernoulli(std::min(d0 * d0, 1.0))) return {0, b0};
    return {1, basis.vec1()};
}

// Real-amplitude register of `arity` qubits; amplitude index is the bitstring
// with the first qubit as the most significant bit.
class JointState {
public:
    static JointState from_amplitudes(int arity, std::vector<double> amps, int cap = kDefaultArityCap) {
        if (arity < 1 || arity > cap) throw ArityExceeded("JointState: arity out of range");
        if (amps.size() != (std::size_t{1} << arity))
            throw std::invalid_argument("JointState: wrong amplitude count");
        double norm2 = 0.0;
        for (double a : amps) norm2 += a * a;
        if (std::abs(norm2 - 1.0) > kNormTolerance)
            throw std::invalid_argument("JointState: not normalized");
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& a : amps) a *= inv;
        return JointState(arity, std::move(amps));
    }

    int arity() const { return arity_; }
    std::size_t dim() const { return amps_.size(); }
    double amp(std::size_t index) const { return amps_.at(index); }
    const std::vector<double>& amps() const { return amps_; }

private:
    JointState(int arity, std::vector<double> amps) : arity_(arity), amps_(std::move(amps)) {}
    int arity_;
    std::vector<double> amps_;

    friend JointState tensor(std::span<const PureQubit>, int);
    friend struct JointOps;
};

// Product state of the given qubits, in order.
inline JointState tensor(std::span<const PureQubit> qubits, int cap = kDefaultArityCap) {
    const int n = static_cast<int>(qubits.size());
    if (n < 1) throw std::invalid_argument("tensor: empty qubit list");
    if (n > cap) throw ArityExceeded("tensor: arity cap exceeded");
    std::vector<double> amps(std::size_t{1} << n);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        double a = 1.0;
        for (int q = 0; q < n; ++q) {
            const int bit = static_cast<int>((x >> (n - 1 - q)) & 1u);
            const PureQubit& ps = qubits[static_cast<std::size_t>(q)];
            a *= (bit == 0) ? ps.amp0() : ps.amp1();
        }
        amps[x] = a;
    }
    return JointState(n, std::move(amps));
}

inline JointState tensor(const std::vector<PureQubit>& qubits, int cap = kDefaultArityCap) {
    return tensor(std::span<const PureQubit>(qubits.data(), qubits.size()), cap);
}

struct JointProjectResult {
    bool success;
    JointState post;
    bool empty_subset = false;  // accepted set was empty; flagged, not fatal
};

struct JointMeasureResult {
    int outcome;
    JointState post;
};

// Internal helpers that need to build JointState values directly.
struct JointOps {
    static JointState renormalized(int arity, std::vector<double> amps) {
        double norm2 = 0.0;
        for (double a : amps) norm2 += a * a;
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& a : amps) a *= inv;
        return JointState(arity, std::move(amps));
    }
};

// Projective measurement {P, 1-P} with P the projector onto the span of the
// accepted computational basis strings.
inline JointProjectResult joint_project_subset(const JointState& state,
                                               const std::vector<std::uint32_t>& accepted,
                                               RandomSource& rng) {
    if (accepted.empty()) return {false, state, true};
    std::vector<bool> in_set(state.dim(), false);
    double p = 0.0;
    for (std::uint32_t x : accepted) {
        if (x >= state.dim()) throw std::invalid_argument("joint_project_subset: bitstring out of range");
        if (!in_set[x]) {
            in_set[x] = true;
            p += state.amp(x) * state.amp(x);
        }
    }
    p = std::min(p, 1.0);
    const bool success = rng.bernoulli(p);
    std::vector<double> amps(state.dim(), 0.0);
    for (std::size_t x = 0; x < state.dim(); ++x) {
        if (in_set[x] == success) amps[x] = state.amp(x);
    }
    return {success, JointOps::renormalized(state.arity(), std::move(amps)), false};
}

// Project qubit `pos` of a joint register onto |target><target| (identity on
// the other qubits).  Used for the owner's per-qubit check after a collective
// measurement has entangled registers.
inline JointProjectResult joint_project_qubit(const JointState& state, int pos,
                                              const PureQubit& target, RandomSource& rng) {
    if (pos < 0 || pos >= state.arity()) throw std::invalid_argument("joint_project_qubit: bad position");
    const std::size_t stride = std::size_t{1} << (state.arity() - 1 - pos);
    const double t0 = target.amp0(), t1 = target.amp1();
    // overlap per remainder-configuration, then success probability
    double p = 0.0;
    std::vector<double> proj(state.dim(), 0.0);
    for (std::size_t x = 0; x < state.dim(); ++x) {
        if ((x & stride) != 0) continue;  // handle pairs (x, x|stride) once
        const std::size_t y = x | stride;
        const double d = t0 * state.amp(x) + t1 * state.amp(y);
        proj[x] = d * t0;
        proj[y] = d * t1;
        p += d * d;
    }
    p = std::min(p, 1.0);
    if (rng.bernoulli(p)) return {true, JointOps::renormalized(state.arity(), std::move(proj)), false};
    std::vector<double> rest(state.dim());
    for (std::size_t x = 0; x < state.dim(); ++x) rest[x] = state.amp(x) - proj[x];
    return {false, JointOps::renormalized(state.arity(), std::move(rest)), false};
}

// Z measurement of qubit `pos` within a joint register.
inline JointMeasureResult joint_measure_qubit_z(const JointState& state, int pos, RandomSource& rng) {
    if (pos < 0 || pos >= state.arity()) throw std::invalid_argument("joint_measure_qubit_z: bad position");
    const std::size_t stride = std::size_t{1} << (state.arity() - 1 - pos);
    double p0 = 0.0;
    for (std::size_t x = 0; x < state.dim(); ++x) {
        if ((x & stride) == 0) p0 += state.amp(x) * state.amp(x);
    }
    const int outcome = rng.bernoulli(std::min(p0, 1.0)) ? 0 : 1;
    std::vector<double> amps(state.dim(), 0.0);
    for (std::size_t x = 0; x < state.dim(); ++x) {
        const int bit = (x & stride) ? 1 : 0;
        if (bit == outcome) amps[x] = state.amp(x);
    }
    return {outcome, JointOps::renormalized(state.arity(), std::move(amps))};
}

// Factor a product state into its qubits.  Throws NotProductState when any
// cut is entangled beyond tolerance; callers must then keep the state joint.
inline std::vector<PureQubit> split_to_qubits(const JointState& state) {
    std::vector<PureQubit> out;
    std::vector<double> amps = state.amps();
    int remaining = state.arity();
    while (remaining > 1) {
        const std::size_t half = amps.size() / 2;
        double n0 = 0.0, n1 = 0.0, cross = 0.0;
        for (std::size_t i = 0; i < half; ++i) {
            n0 += amps[i] * amps[i];
            n1 += amps[half + i] * amps[half + i];
            cross += amps[i] * amps[half + i];
        }
        // product iff the two half-rows are proportional: |<r0,r1>| = |r0||r1|
        if (std::abs(std::abs(cross) - std::sqrt(n0 * n1)) > kNormTolerance)
            throw NotProductState("split_to_qubits: cut is entangled");
        std::vector<double> rest(half);
        const bool use0 = n0 >= n1;
        const double norm = std::sqrt(use0 ? n0 : n1);
        for (std::size_t i = 0; i < half; ++i) rest[i] = amps[(use0 ? i : half + i)] / norm;
        double a0 = 0.0, a1 = 0.0;
        for (std::size_t i = 0; i < half; ++i) {
            a0 += amps[i] * rest[i];
            a1 += amps[half + i] * rest[i];
        }
        // residual check catches e.g. r0, r1 proportional in norm but not shape
        double resid = 0.0;
        for (std::size_t i = 0; i < half; ++i) {
            const double e0 = amps[i] - a0 * rest[i];
            const double e1 = amps[half + i] - a1 * rest[i];
            resid += e0 * e0 + e1 * e1;
        }
        if (resid > kNormTolerance) throw NotProductState("split_to_qubits: cut is entangled");
        out.push_back(PureQubit::prepared(a0, a1));
        amps = std::move(rest);
        --remaining;
    }
    out.push_back(PureQubit::prepared(amps[0], amps[1]));
    return out;
}

}  // namespace qseal
