// The two commitment protocols built on sealed registers, run as two-party
// state machines producing a typed transcript and a verdict.
//
// The receiver ("owner") seals s random bits; the committer spot-checks m of
// them, then commits either through a single decoded register (basic) or
// through a codeword masked by n decoded registers (advanced).  At unveil the
// committer also reveals the values she decoded; the owner verifies the
// announcements against each other (deterministic for an honest run), checks
// the revealed values against his own sealed bits under the same error-rate
// tolerance as the commit-phase spot check, and projection-checks every
// returned register.
//
// Checks never short-circuit: every failure is recorded so attack reports
// can attribute the detection cause.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseal/gf2.hpp"
#include "qseal/seal_string.hpp"

namespace qseal {

struct ProtocolViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parameters and strategies

struct SpotThresholds {
    double z = 4.0;      // sigma multiplier for both spot tests
    int min_sample = 16; // smallest admissible spot sample
};

struct ProtocolParams {
    int s = 64;
    int m = 16;
    int n = 8;  // advanced only
    GeneratorMatrix G = extended_hamming_8_4();
    SealParams seal;  // seal.N must equal s: the registers form one sealed string
    SpotThresholds thresholds;
    int n_ratio = 4;  // concretizes n << s-m as n <= (s-m)/n_ratio

    static ProtocolParams make(int s, int m, int n, GeneratorMatrix G,
                               double Theta = std::numbers::pi / 8.0, double alpha = 0.25) {
        ProtocolParams p;
        p.s = s;
        p.m = m;
        p.n = n;
        p.G = std::move(G);
        p.seal = SealParams{Theta, alpha, s};
        return p;
    }

    void validate(bool advanced) const {
        if (m < 1 || m >= s) throw std::invalid_argument("ProtocolParams: need 1 <= m < s");
        seal.validate();
        if (seal.N != s) throw std::invalid_argument("ProtocolParams: seal.N must equal s");
        if (m < thresholds.min_sample)
            throw std::invalid_argument("ProtocolParams: m below the spot-check minimum sample");
        if (advanced) {
            if (n < 1 || n > (s - m) / n_ratio)
                throw std::invalid_argument("ProtocolParams: need 1 <= n <= (s-m)/n_ratio");
            if (G.n() != n) throw std::invalid_argument("ProtocolParams: G block length != n");
        }
    }
};

struct CommitterStrategy {
    enum class Kind {
        Honest,
        DeferredChoice,    // basic: commit to nothing, decide at unveil
        FlipAtUnveil,      // honest run, then announce the complement bit
        RandomIndices,     // advanced: announce untouched registers with fabricated values
        CollectiveSearch,  // advanced: subset-subspace projections at unveil
    };
    Kind kind = Kind::Honest;
    int t_max = 8;                     // collective search attempt budget
    bool deterministic_layout = false; // fixed spot indices / attack subsets (exact oracles)
};

struct OwnerStrategy {
    enum class Kind { Honest, Guessing };
    Kind kind = Kind::Honest;
    int guess_samples = 200;  // candidate index sets tried by the advanced guesser
};

// Optional pinned inputs for oracle comparisons and paired-seed tests.
struct SessionFixture {
    std::optional<std::vector<std::uint8_t>> owner_bits;
    std::optional<std::vector<double>> thetas;
    std::optional<std::uint64_t> r;  // advanced: the committer's announced r
};

// ---------------------------------------------------------------------------
// Transcript

enum class Phase { Commit, Unveil };

struct Message {
    Phase phase;
    std::string step;
    std::string sender;
    std::vector<std::uint8_t> payload;
};

struct SessionTranscript {
    std::vector<Message> messages;

    void add(Phase phase, std::string step, std::string sender, std::vector<std::uint8_t> payload) {
        messages.push_back({phase, std::move(step), std::move(sender), std::move(payload)});
    }

    // Line-delimited records: phase|step|sender|payload-hex ("-" when empty).
    std::string serialize() const {
        std::ostringstream out;
        for (const auto& msg : messages) {
            out << (msg.phase == Phase::Commit ? "commit" : "unveil") << '|' << msg.step << '|'
                << msg.sender << '|';
            if (msg.payload.empty()) {
                out << '-';
            } else {
                static const char* hex = "0123456789abcdef";
                for (std::uint8_t b : msg.payload) out << hex[b >> 4] << hex[b & 0xf];
            }
            out << '\n';
        }
        return out.str();
    }
};

namespace wire {
inline void put_u16(std::vector<std::uint8_t>& v, std::uint16_t x) {
    v.push_back(static_cast<std::uint8_t>(x & 0xff));
    v.push_back(static_cast<std::uint8_t>(x >> 8));
}
inline void put_u64(std::vector<std::uint8_t>& v, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) v.push_back(static_cast<std::uint8_t>((x >> (8 * i)) & 0xff));
}
inline void put_bits(std::vector<std::uint8_t>& v, const std::vector<std::uint8_t>& bits) {
    for (std::uint8_t b : bits) v.push_back(b);
}
inline void put_indices(std::vector<std::uint8_t>& v, const std::vector<int>& idx) {
    put_u16(v, static_cast<std::uint16_t>(idx.size()));
    for (int i : idx) put_u16(v, static_cast<std::uint16_t>(i));
}
}  // namespace wire

// ---------------------------------------------------------------------------
// Checks and verdicts

enum class CheckKind { Randomness, Mismatch, Codeword, Parity, Unread, Consistency };

inline const char* check_name(CheckKind k) {
    switch (k) {
        case CheckKind::Randomness: return "RandomnessCheck";
        case CheckKind::Mismatch: return "MismatchCheck";
        case CheckKind::Codeword: return "CodewordCheck";
        case CheckKind::Parity: return "ParityCheck";
        case CheckKind::Unread: return "UnreadCheck";
        case CheckKind::Consistency: return "ConsistencyCheck";
    }
    return "?";
}

struct Verdict {
    bool accepted = false;
    std::vector<CheckKind> failed_checks;
    std::optional<int> unveiled_bit;

    bool failed(CheckKind k) const {
        return std::find(failed_checks.begin(), failed_checks.end(), k) != failed_checks.end();
    }

    // Acceptance ignoring the two statistical error-tolerance tests
    // (randomness and mismatch), whose rare honest false alarms are counted
    // separately from the deterministic protocol checks.
    bool accepted_excluding_alarms() const {
        for (CheckKind k : failed_checks) {
            if (k != CheckKind::Randomness && k != CheckKind::Mismatch) return false;
        }
        return true;
    }

    void record(CheckKind k, bool ok) {
        if (!ok) failed_checks.push_back(k);
    }
    void finalize() { accepted = failed_checks.empty(); }
};

// Allowed mismatch count when `count` revealed bits are compared against the
// owner's records at per-bit error rate eps.
inline double mismatch_tolerance(int count, double eps, const SpotThresholds& t) {
    const double c = static_cast<double>(count);
    return c * eps + t.z * std::sqrt(c * eps * (1.0 - eps)) + 1.0;
}

struct SpotResult {
    bool randomness_ok = true;
    bool mismatch_ok = true;
    int ones = 0;
    int mismatches = 0;
    bool pass() const { return randomness_ok && mismatch_ok; }
};

// The committer's test of the owner's m revealed seals: (a) the claimed bits
// look unbiased, (b) they match her decoded values within the error rate.
inline SpotResult spot_check(const std::vector<std::uint8_t>& claimed,
                             const std::vector<std::uint8_t>& decoded, double eps,
                             const SpotThresholds& thresholds) {
    if (claimed.size() != decoded.size())
        throw std::invalid_argument("spot_check: claimed/decoded size mismatch");
    const int m = static_cast<int>(claimed.size());
    if (m < thresholds.min_sample) throw std::invalid_argument("spot_check: sample below minimum");
    SpotResult r;
    for (int i = 0; i < m; ++i) {
        r.ones += claimed[static_cast<std::size_t>(i)];
        r.mismatches += claimed[static_cast<std::size_t>(i)] != decoded[static_cast<std::size_t>(i)];
    }
    const double md = static_cast<double>(m);
    r.randomness_ok =
        std::abs(static_cast<double>(r.ones) / md - 0.5) <= thresholds.z * std::sqrt(1.0 / (4.0 * md));
    r.mismatch_ok = static_cast<double>(r.mismatches) <= mismatch_tolerance(m, eps, thresholds);
    return r;
}

// ---------------------------------------------------------------------------
// Session plumbing

struct SessionResult {
    SessionTranscript transcript;
    Verdict verdict;
    std::optional<int> owner_guess;  // set by the guessing owner strategy
    double info_bits = 0.0;          // attacker's information proxy
    int attempts = 0;                // collective-search projector attempts
};

namespace detail {

inline std::pair<PublicRegisters, OwnerRecord> seal_session(const SealParams& params,
                                                            const SessionFixture& fixture,
                                                            RandomSource& rng) {
    std::vector<std::uint8_t> bits;
    if (fixture.owner_bits) {
        bits = *fixture.owner_bits;
        if (static_cast<int>(bits.size()) != params.N)
            throw std::invalid_argument("fixture owner_bits length != s");
    } else {
        bits.reserve(static_cast<std::size_t>(params.N));
        for (int i = 0; i < params.N; ++i) bits.push_back(static_cast<std::uint8_t>(rng.bit()));
    }
    if (!fixture.thetas) return seal(bits, params, rng);
    const auto& thetas = *fixture.thetas;
    if (static_cast<int>(thetas.size()) != params.N)
        throw std::invalid_argument("fixture thetas length != s");
    const double bound = params.theta_bound();
    OwnerRecord record;
    record.bits = bits;
    record.params = params;
    record.thetas = thetas;
    record.frame_angles.assign(bits.size(), 0.0);
    std::vector<PureQubit> qubits;
    for (int i = 0; i < params.N; ++i) {
        if (std::abs(thetas[static_cast<std::size_t>(i)]) > bound + 1e-12)
            throw std::invalid_argument("fixture theta outside the allowed interval");
        qubits.push_back(PureQubit::sealed(bits[static_cast<std::size_t>(i)],
                                           thetas[static_cast<std::size_t>(i)]));
    }
    return {PublicRegisters(std::move(qubits)), std::move(record)};
}

// Sample `count` distinct indices from `pool` (ascending output).  With
// deterministic layout the first `count` pool entries are taken instead.
inline std::vector<int> pick_indices(std::vector<int>& pool, int count, bool deterministic,
                                     RandomSource& rng) {
    if (static_cast<int>(pool.size()) < count)
        throw std::invalid_argument("pick_indices: pool too small");
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const std::size_t at =
            deterministic ? 0 : static_cast<std::size_t>(rng.uniform_index(pool.size()));
        chosen.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

struct SpotPhase {
    std::vector<int> indices;
    SpotResult result;
};

// Steps (2)/(ii): the committer decodes m registers, the owner reveals what
// he sealed there, and the committer applies the spot tests.
inline SpotPhase run_spot_phase(PublicRegisters& regs, const OwnerRecord& record,
                                const ProtocolParams& params, const CommitterStrategy& committer,
                                std::vector<int>& pool, SessionTranscript& transcript,
                                const char* step_a, const char* step_b, RandomSource& rng) {
    SpotPhase spot;
    spot.indices = pick_indices(pool, params.m, committer.deterministic_layout, rng);
    std::vector<std::uint8_t> decoded, claimed;
    for (int i : spot.indices)
        decoded.push_back(static_cast<std::uint8_t>(regs.measure_z(i, rng)));
    std::vector<std::uint8_t> payload_a;
    wire::put_indices(payload_a, spot.indices);
    transcript.add(Phase::Commit, step_a, "committer", std::move(payload_a));
    for (int i : spot.indices) claimed.push_back(record.bits[static_cast<std::size_t>(i)]);
    std::vector<std::uint8_t> payload_b;
    wire::put_bits(payload_b, claimed);
    transcript.add(Phase::Commit, step_b, "owner", std::move(payload_b));
    spot.result = spot_check(claimed, decoded, max_error_rate(params.seal), params.thresholds);
    return spot;
}

inline void record_spot(Verdict& verdict, const SpotResult& spot) {
    verdict.record(CheckKind::Randomness, spot.randomness_ok);
    verdict.record(CheckKind::Mismatch, spot.mismatch_ok);
}

// The owner's unread check over every returned register.
inline bool check_returned(PublicRegisters& regs, const OwnerRecord& record,
                           const std::vector<int>& returned, RandomSource& rng) {
    bool all_ok = true;
    for (int i : returned) {
        if (!regs.project(i, record.target(i), rng)) all_ok = false;
    }
    return all_ok;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Basic protocol, steps (1)-(5)

inline SessionResult run_basic(int b, const CommitterStrategy& committer, const OwnerStrategy& owner,
                               const ProtocolParams& params, RandomSource& rng,
                               const SessionFixture& fixture = {}) {
    if (b != 0 && b != 1) throw std::invalid_argument("run_basic: b must be 0 or 1");
    params.validate(false);
    SessionResult result;
    auto& transcript = result.transcript;
    auto& verdict = result.verdict;

    // (1) the owner seals s random bits and hands over the registers
    auto [regs, record] = detail::seal_session(params.seal, fixture, rng);
    {
        std::vector<std::uint8_t> payload;
        wire::put_u16(payload, static_cast<std::uint16_t>(params.s));
        transcript.add(Phase::Commit, "(1)", "owner", std::move(payload));
    }

    std::vector<int> pool(static_cast<std::size_t>(params.s));
    for (int i = 0; i < params.s; ++i) pool[static_cast<std::size_t>(i)] = i;

    // (2) spot check on m registers
    const auto spot =
        detail::run_spot_phase(regs, record, params, committer, pool, transcript, "(2-a)", "(2-b)", rng);

    // (3) the committer decodes one register and announces a = x ^ b
    const bool deferred = committer.kind == CommitterStrategy::Kind::DeferredChoice;
    int i0 = -1;
    int decoded_x = 0;
    int a;
    if (deferred) {
        a = rng.bit();  // commits to nothing
    } else {
        std::vector<int> pool_copy = pool;
        i0 = detail::pick_indices(pool_copy, 1, committer.deterministic_layout, rng).front();
        decoded_x = regs.measure_z(i0, rng);
        a = decoded_x ^ b;
    }
    {
        std::vector<std::uint8_t> payload{static_cast<std::uint8_t>(a)};
        transcript.add(Phase::Commit, "(3)", "committer", std::move(payload));
    }

    // commit-phase-only guess: the owner cannot locate i0, so his guess of
    // x_i0 is a blind draw from his own sealed bits
    if (owner.kind == OwnerStrategy::Kind::Guessing) {
        const auto j = static_cast<std::size_t>(rng.uniform_index(static_cast<std::uint64_t>(params.s)));
        result.owner_guess = a ^ record.bits[j];
    }

    // (4) unveil: announce (b, i0) plus the decoded value, return the rest
    int announced_b;
    if (deferred) {
        i0 = detail::pick_indices(pool, 1, committer.deterministic_layout, rng).front();
        decoded_x = regs.measure_z(i0, rng);
        announced_b = decoded_x ^ a;
        result.info_bits = 1.0;
    } else {
        pool.erase(std::find(pool.begin(), pool.end(), i0));
        announced_b = committer.kind == CommitterStrategy::Kind::FlipAtUnveil ? 1 - b : b;
    }
    const std::vector<int> returned = pool;  // s - m - 1 untouched registers
    {
        std::vector<std::uint8_t> payload{static_cast<std::uint8_t>(announced_b)};
        wire::put_u16(payload, static_cast<std::uint16_t>(i0));
        payload.push_back(static_cast<std::uint8_t>(decoded_x));
        transcript.add(Phase::Unveil, "(4)", "committer", std::move(payload));
    }

    // (5) the owner's verification
    detail::record_spot(verdict, spot.result);
    verdict.record(CheckKind::Consistency, a == (decoded_x ^ announced_b));
    const int mismatches = decoded_x != record.bits[static_cast<std::size_t>(i0)] ? 1 : 0;
    verdict.record(CheckKind::Mismatch,
                   mismatches <= mismatch_tolerance(1, max_error_rate(params.seal), params.thresholds));
    verdict.record(CheckKind::Unread, detail::check_returned(regs, record, returned, rng));
    verdict.unveiled_bit = announced_b;
    verdict.finalize();
    return result;
}

// ---------------------------------------------------------------------------
// Advanced protocol, steps (i)-(viii)

inline SessionResult run_advanced(int b, const CommitterStrategy& committer,
                                  const OwnerStrategy& owner, const ProtocolParams& params,
                                  RandomSource& rng, const SessionFixture& fixture = {}) {
    if (b != 0 && b != 1) throw std::invalid_argument("run_advanced: b must be 0 or 1");
    params.validate(true);
    SessionResult result;
    auto& transcript = result.transcript;
    auto& verdict = result.verdict;
    const int n = params.n;

    // (i) agreed security parameters
    {
        std::vector<std::uint8_t> payload;
        wire::put_u16(payload, static_cast<std::uint16_t>(params.s));
        wire::put_u16(payload, static_cast<std::uint16_t>(params.m));
        wire::put_u16(payload, static_cast<std::uint16_t>(n));
        transcript.add(Phase::Commit, "(i)", "owner", std::move(payload));
    }
    auto [regs, record] = detail::seal_session(params.seal, fixture, rng);

    std::vector<int> pool(static_cast<std::size_t>(params.s));
    for (int i = 0; i < params.s; ++i) pool[static_cast<std::size_t>(i)] = i;

    // (ii) spot check, as in the basic protocol
    const auto spot = detail::run_spot_phase(regs, record, params, committer, pool, transcript,
                                             "(ii-a)", "(ii-b)", rng);

    const bool honest_flow = committer.kind == CommitterStrategy::Kind::Honest ||
                             committer.kind == CommitterStrategy::Kind::FlipAtUnveil;

    // (iii) the committer decodes n registers (honest flow only)
    std::vector<int> indices;
    std::uint64_t decoded_x = 0;
    if (honest_flow) {
        std::vector<int> pool_copy = pool;
        indices = detail::pick_indices(pool_copy, n, committer.deterministic_layout, rng);
        for (int j = 0; j < n; ++j)
            decoded_x |= static_cast<std::uint64_t>(regs.measure_z(indices[static_cast<std::size_t>(j)], rng))
                         << j;
    }

    // (iv) a non-zero random r; the honest committer resamples locally until
    // the parity functional is non-degenerate on C
    std::uint64_t r;
    if (fixture.r) {
        r = *fixture.r;
        if (r == 0) throw std::invalid_argument("fixture r must be non-zero");
    } else {
        do {
            r = rng.bits(n);
        } while (r == 0 || !params.G.separating(r));
    }
    {
        std::vector<std::uint8_t> payload;
        wire::put_u64(payload, r);
        transcript.add(Phase::Commit, "(iv)", "committer", std::move(payload));
    }

    // (v)-(vi) choose a codeword with c (.) r = b and announce the mask
    std::uint64_t cprime;
    if (honest_flow) {
        const std::uint64_t c = params.G.choose_codeword(r, b, rng);
        cprime = c ^ decoded_x;
    } else {
        cprime = rng.bits(n);  // committed to nothing; the mask is noise
    }
    {
        std::vector<std::uint8_t> payload;
        wire::put_u64(payload, cprime);
        transcript.add(Phase::Commit, "(vi)", "committer", std::move(payload));
    }

    // commit-phase-only guess from (x, r, c'): unmask candidate index sets
    // and take a majority vote over the ones that land in C
    if (owner.kind == OwnerStrategy::Kind::Guessing) {
        int votes[2] = {0, 0};
        for (int t = 0; t < owner.guess_samples; ++t) {
            std::vector<int> pool_copy = pool;
            const auto cand = detail::pick_indices(pool_copy, n, false, rng);
            std::uint64_t x_cand = 0;
            for (int j = 0; j < n; ++j)
                x_cand |= static_cast<std::uint64_t>(record.bits[static_cast<std::size_t>(
                              cand[static_cast<std::size_t>(j)])])
                          << j;
            const std::uint64_t c_cand = cprime ^ x_cand;
            if (params.G.is_codeword(c_cand)) ++votes[dot_parity(c_cand, r)];
        }
        if (votes[0] == votes[1]) result.owner_guess = rng.bit();
        else result.owner_guess = votes[1] > votes[0] ? 1 : 0;
    }

    // (vii) unveil
    int announced_b = b;
    std::uint64_t revealed_x = 0;
    switch (committer.kind) {
        case CommitterStrategy::Kind::Honest:
        case CommitterStrategy::Kind::FlipAtUnveil: {
            for (int i : indices) pool.erase(std::find(pool.begin(), pool.end(), i));
            revealed_x = decoded_x;
            if (committer.kind == CommitterStrategy::Kind::FlipAtUnveil) announced_b = 1 - b;
            break;
        }
        case CommitterStrategy::Kind::RandomIndices: {
            // untouched registers with fabricated decoded values
            indices = detail::pick_indices(pool, n, committer.deterministic_layout, rng);
            revealed_x = rng.bits(n);
            result.info_bits = 0.0;
            break;
        }
        case CommitterStrategy::Kind::CollectiveSearch: {
            // candidate subset values consistent with the commit-phase noise
            std::vector<std::uint32_t> accepted;
            for (std::uint32_t y = 0; y < (1u << n); ++y) {
                std::uint64_t xval = 0;  // joint index uses qubit 0 as MSB
                for (int j = 0; j < n; ++j) xval |= static_cast<std::uint64_t>((y >> (n - 1 - j)) & 1u) << j;
                const std::uint64_t c = cprime ^ xval;
                if (params.G.is_codeword(c) && dot_parity(c, r) == b) accepted.push_back(y);
            }
            const double full = std::exp2(n);
            std::vector<int> untouched = pool;  // failed subsets stay in the returned pool
            std::vector<int> last_subset;
            while (result.attempts < committer.t_max && static_cast<int>(untouched.size()) >= n) {
                const auto subset =
                    detail::pick_indices(untouched, n, committer.deterministic_layout, rng);
                last_subset = subset;
                const int gid = regs.merge(subset);
                ++result.attempts;
                if (regs.project_group_subset(gid, accepted, rng)) {
                    result.info_bits += static_cast<double>(n);
                    break;
                }
                const double rejected = static_cast<double>(accepted.size());
                if (rejected < full) result.info_bits += std::log2(full / (full - rejected));
            }
            if (last_subset.empty()) throw ProtocolViolation("collective search: no attempt possible");
            indices = last_subset;
            // read the announced subset outright; those registers are never
            // returned, so the full measurement costs nothing
            for (int j = 0; j < n; ++j)
                revealed_x |= static_cast<std::uint64_t>(
                                  regs.measure_z(indices[static_cast<std::size_t>(j)], rng))
                              << j;
            for (int i : indices) pool.erase(std::find(pool.begin(), pool.end(), i));
            break;
        }
        case CommitterStrategy::Kind::DeferredChoice:
            throw std::invalid_argument("run_advanced: deferred choice is a basic-protocol strategy");
    }
    const std::vector<int> returned = pool;  // s - m - n registers go back
    {
        std::vector<std::uint8_t> payload{static_cast<std::uint8_t>(announced_b)};
        wire::put_indices(payload, indices);
        wire::put_u64(payload, revealed_x);
        transcript.add(Phase::Unveil, "(vii)", "committer", std::move(payload));
    }

    // (viii) the owner's verification
    detail::record_spot(verdict, spot.result);
    const std::uint64_t c_recovered = cprime ^ revealed_x;
    verdict.record(CheckKind::Codeword, params.G.is_codeword(c_recovered));
    verdict.record(CheckKind::Parity, dot_parity(c_recovered, r) == announced_b);
    int mismatches = 0;
    for (int j = 0; j < n; ++j) {
        const int own = record.bits[static_cast<std::size_t>(indices[static_cast<std::size_t>(j)])];
        if (own != static_cast<int>((revealed_x >> j) & 1)) ++mismatches;
    }
    verdict.record(CheckKind::Mismatch, static_cast<double>(mismatches) <=
                                            mismatch_tolerance(n, max_error_rate(params.seal),
                                                               params.thresholds));
    verdict.record(CheckKind::Unread, detail::check_returned(regs, record, returned, rng));
    verdict.unveiled_bit = announced_b;
    verdict.finalize();
    return result;
}

}  // namespace qseal
