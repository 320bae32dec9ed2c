// Sealing a single bit inside a string seal: a fixed-width machine-decodable
// header describes the mapping rule, the designated positions carry the bit,
// and every other position is random filler.
//
// Header format (bit-exact, 32 header qubits, header bit 0 sealed first):
//   bits  0..3   variant tag, MSB first: 1 = parity-of-positions,
//                2 = rotated-pair-parity, 3 = no-clue
//   bits  4..15  field A (12 bits, MSB first)
//   bits 16..27  field B (12 bits, MSB first)
//   bits 28..31  reserved, must be zero
// Parity-of-positions: A = first designated register index, B = count; the
// sealed bit is the parity of the Z-readout at positions A .. A+B-1.
// Rotated-pair-parity: A = first index of an adjacent register pair, B = the
// basis angle in whole degrees (0..179); the sealed bit is the parity of the
// two outcomes measured in the rotated basis.
// No-clue: A = B = 0; the string carries no recoverable bit and honest
// readers report Indeterminate.

#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qseal/seal_string.hpp"

namespace qseal {

struct MalformedHeader : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kHeaderBits = 32;

// Parity over a contiguous run of designated registers.
struct ParityOfPositions {
    int first = 0;
    int count = 2;

    std::vector<int> positions() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) out.push_back(first + i);
        return out;
    }
    bool operator==(const ParityOfPositions&) const = default;
};

// Parity of the rotated-basis indices of an adjacent register pair.
struct RotatedPairParity {
    int first = 0;           // pair is (first, first + 1)
    int angle_degrees = 15;  // quantized to whole degrees

    double angle() const { return angle_degrees * std::numbers::pi / 180.0; }
    std::vector<int> positions() const { return {first, first + 1}; }
    bool operator==(const RotatedPairParity&) const = default;
};

// Deliberately content-free rule; honest readers report Indeterminate.
struct NoClue {
    bool operator==(const NoClue&) const = default;
};

using MappingRule = std::variant<ParityOfPositions, RotatedPairParity, NoClue>;

namespace detail {
inline void put_field(std::vector<std::uint8_t>& bits, int offset, int width, std::uint32_t value) {
    for (int i = 0; i < width; ++i)
        bits[static_cast<std::size_t>(offset + i)] =
            static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1u);
}
inline std::uint32_t get_field(const std::vector<std::uint8_t>& bits, int offset, int width) {
    std::uint32_t v = 0;
    for (int i = 0; i < width; ++i)
        v = (v << 1) | bits[static_cast<std::size_t>(offset + i)];
    return v;
}
}  // namespace detail

inline std::vector<std::uint8_t> encode_rule(const MappingRule& rule) {
    std::vector<std::uint8_t> bits(kHeaderBits, 0);
    if (const auto* p = std::get_if<ParityOfPositions>(&rule)) {
        if (p->first < 0 || p->first > 4095 || p->count < 1 || p->count > 4095)
            throw std::invalid_argument("encode_rule: parity fields out of range");
        detail::put_field(bits, 0, 4, 1);
        detail::put_field(bits, 4, 12, static_cast<std::uint32_t>(p->first));
        detail::put_field(bits, 16, 12, static_cast<std::uint32_t>(p->count));
    } else if (const auto* r = std::get_if<RotatedPairParity>(&rule)) {
        if (r->first < 0 || r->first > 4095 || r->angle_degrees < 0 || r->angle_degrees > 179)
            throw std::invalid_argument("encode_rule: rotated-pair fields out of range");
        detail::put_field(bits, 0, 4, 2);
        detail::put_field(bits, 4, 12, static_cast<std::uint32_t>(r->first));
        detail::put_field(bits, 16, 12, static_cast<std::uint32_t>(r->angle_degrees));
    } else {
        detail::put_field(bits, 0, 4, 3);
    }
    return bits;
}

inline MappingRule decode_rule(const std::vector<std::uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != kHeaderBits)
        throw MalformedHeader("decode_rule: header must be exactly 32 bits");
    for (std::uint8_t b : bits) {
        if (b > 1) throw MalformedHeader("decode_rule: non-binary header");
    }
    const std::uint32_t tag = detail::get_field(bits, 0, 4);
    const std::uint32_t a = detail::get_field(bits, 4, 12);
    const std::uint32_t b = detail::get_field(bits, 16, 12);
    if (detail::get_field(bits, 28, 4) != 0) throw MalformedHeader("decode_rule: reserved bits set");
    switch (tag) {
        case 1:
            if (b < 1) throw MalformedHeader("decode_rule: empty parity run");
            return ParityOfPositions{static_cast<int>(a), static_cast<int>(b)};
        case 2:
            if (b > 179) throw MalformedHeader("decode_rule: angle out of range");
            return RotatedPairParity{static_cast<int>(a), static_cast<int>(b)};
        case 3:
            if (a != 0 || b != 0) throw MalformedHeader("decode_rule: no-clue fields must be zero");
            return NoClue{};
        default:
            throw MalformedHeader("decode_rule: unknown variant tag");
    }
}

// Positions the rule designates, absolute register indices.
inline std::vector<int> rule_positions(const MappingRule& rule) {
    if (const auto* p = std::get_if<ParityOfPositions>(&rule)) return p->positions();
    if (const auto* r = std::get_if<RotatedPairParity>(&rule)) return r->positions();
    return {};
}

// The bit the rule maps a full record bit vector to (rotated-pair positions
// hold rotated-frame indices in the record).
inline std::optional<int> rule_value(const MappingRule& rule, const std::vector<std::uint8_t>& bits) {
    if (std::holds_alternative<NoClue>(rule)) return std::nullopt;
    int v = 0;
    for (int p : rule_positions(rule)) v ^= bits.at(static_cast<std::size_t>(p));
    return v;
}

struct BitSealLayout {
    MappingRule rule;
    std::vector<std::uint8_t> header_bits;  // the encoded rule, length 32
    std::vector<int> payload_positions;     // registers constrained by the rule
    std::vector<int> dummy_positions;       // everything else past the header
    int total = 0;
};

struct BitSeal {
    PublicRegisters regs;
    OwnerRecord record;
    BitSealLayout layout;
};

namespace detail {
inline void validate_rule_placement(const MappingRule& rule, int total) {
    for (int p : rule_positions(rule)) {
        if (p < kHeaderBits || p >= total)
            throw CapacityExceeded("seal_bit: designated position outside the sealed string");
    }
}
}  // namespace detail

// Seal one bit: header || constrained payload || random filler, the whole
// string sealed as a quantum string seal.  For the rotated-pair rule the two
// designated qubits are prepared in the rotated basis, with the wobble
// applied as an offset inside that frame.
inline BitSeal seal_bit(int b, const MappingRule& rule, const SealParams& params,
                        RandomSource& rng) {
    if (b != 0 && b != 1) throw std::invalid_argument("seal_bit: bit must be 0 or 1");
    params.validate();
    if (params.N < kHeaderBits + 1) throw CapacityExceeded("seal_bit: N too small for header + payload");
    detail::validate_rule_placement(rule, params.N);

    BitSealLayout layout;
    layout.rule = rule;
    layout.header_bits = encode_rule(rule);
    layout.payload_positions = rule_positions(rule);
    layout.total = params.N;

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(params.N));
    for (int i = 0; i < kHeaderBits; ++i)
        bits[static_cast<std::size_t>(i)] = layout.header_bits[static_cast<std::size_t>(i)];
    std::vector<bool> designated(static_cast<std::size_t>(params.N), false);
    for (int p : layout.payload_positions) designated[static_cast<std::size_t>(p)] = true;
    for (int i = kHeaderBits; i < params.N; ++i) {
        bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng.bit());
        if (!designated[static_cast<std::size_t>(i)])
            layout.dummy_positions.push_back(i);
    }
    // pin the rule value to b by fixing the last designated position
    if (!std::holds_alternative<NoClue>(rule)) {
        const auto& pos = layout.payload_positions;
        int parity = 0;
        for (std::size_t i = 0; i + 1 < pos.size(); ++i)
            parity ^= bits[static_cast<std::size_t>(pos[i])];
        bits[static_cast<std::size_t>(pos.back())] = static_cast<std::uint8_t>(parity ^ b);
    }

    auto [regs, record] = seal(bits, params, rng);
    if (const auto* r = std::get_if<RotatedPairParity>(&rule)) {
        for (int p : r->positions()) {
            record.frame_angles[static_cast<std::size_t>(p)] = r->angle();
            regs.set_qubit(p, record.target(p));
        }
    }
    return {std::move(regs), std::move(record), std::move(layout)};
}

// Honest bit readout: decode the header in Z, then apply the rule's
// prescribed measurement to the designated positions.  Dummies are left
// alone.  Returns nullopt for a no-clue seal and for a header that reading
// errors corrupted beyond decodability (both are Indeterminate to a reader).
inline std::optional<int> read_bit(PublicRegisters& regs, RandomSource& rng) {
    if (regs.size() < kHeaderBits + 1) throw MalformedHeader("read_bit: string shorter than a header");
    std::vector<std::uint8_t> header(kHeaderBits);
    for (int i = 0; i < kHeaderBits; ++i)
        header[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(regs.measure_z(i, rng));
    MappingRule rule;
    try {
        rule = decode_rule(header);
        detail::validate_rule_placement(rule, regs.size());
    } catch (const MalformedHeader&) {
        return std::nullopt;
    } catch (const CapacityExceeded&) {
        return std::nullopt;
    }
    if (std::holds_alternative<NoClue>(rule)) return std::nullopt;
    if (const auto* r = std::get_if<RotatedPairParity>(&rule)) {
        const Basis2 basis{r->angle()};
        int v = 0;
        for (int p : r->positions()) v ^= regs.measure_basis2(p, basis, rng);
        return v;
    }
    int v = 0;
    for (int p : rule_positions(rule)) v ^= regs.measure_z(p, rng);
    return v;
}

}  // namespace qseal
