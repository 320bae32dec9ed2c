// Binary linear (n,k,d)-code machinery: encoding, membership via a derived
// parity-check matrix, and the masked-parity arithmetic used by the advanced
// commitment protocol.  Bitstrings of length n <= 64 are stored as uint64_t
// with bit i (LSB side) holding position i.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseal/rng.hpp"

namespace qseal {

struct RNonSeparating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parity of the bitwise AND: c (.) r = XOR_i c_i AND r_i.
inline int dot_parity(std::uint64_t c, std::uint64_t r) {
    return std::popcount(c & r) & 1;
}

// k x n generating matrix over GF(2) with linearly independent rows.
class GeneratorMatrix {
public:
    GeneratorMatrix(int k, int n, std::vector<std::uint64_t> rows,
                    std::optional<int> d_min = std::nullopt)
        : k_(k), n_(n), rows_(std::move(rows)), d_min_(d_min) {
        if (n_ < 1 || n_ > 64) throw std::invalid_argument("GeneratorMatrix: need 1 <= n <= 64");
        if (k_ < 1 || k_ > n_) throw std::invalid_argument("GeneratorMatrix: need 1 <= k <= n");
        if (rows_.size() != static_cast<std::size_t>(k_))
            throw std::invalid_argument("GeneratorMatrix: row count != k");
        const std::uint64_t mask = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
        for (std::uint64_t row : rows_) {
            if ((row & ~mask) != 0) throw std::invalid_argument("GeneratorMatrix: row wider than n");
        }
        build_reduction();
        if (static_cast<int>(pivots_.size()) != k_)
            throw std::invalid_argument("GeneratorMatrix: rows not linearly independent");
        build_parity_checks();
    }

    // Parse rows given as strings of 0/1, first character = position 0.
    static GeneratorMatrix parse(const std::vector<std::string>& row_strings,
                                 std::optional<int> d_min = std::nullopt) {
        if (row_strings.empty()) throw std::invalid_argument("GeneratorMatrix: no rows");
        const int n = static_cast<int>(row_strings.front().size());
        std::vector<std::uint64_t> rows;
        for (const auto& s : row_strings) {
            if (static_cast<int>(s.size()) != n)
                throw std::invalid_argument("GeneratorMatrix: ragged rows");
            std::uint64_t row = 0;
            for (int i = 0; i < n; ++i) {
                if (s[static_cast<std::size_t>(i)] == '1') row |= 1ULL << i;
                else if (s[static_cast<std::size_t>(i)] != '0')
                    throw std::invalid_argument("GeneratorMatrix: rows must be 0/1");
            }
            rows.push_back(row);
        }
        const int k = static_cast<int>(rows.size());  // sequenced before the move
        return GeneratorMatrix(k, n, std::move(rows), d_min);
    }

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    std::optional<int> d_min() const { return d_min_; }

    std::string row_string(int i) const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int j = 0; j < n_; ++j)
            if ((rows_[static_cast<std::size_t>(i)] >> j) & 1) s[static_cast<std::size_t>(j)] = '1';
        return s;
    }

    // c = msg * G over GF(2)
    std::uint64_t encode(std::uint64_t msg) const {
        if (k_ < 64 && (msg >> k_) != 0) throw std::invalid_argument("encode: message wider than k");
        std::uint64_t c = 0;
        for (int j = 0; j < k_; ++j) {
            if ((msg >> j) & 1) c ^= rows_[static_cast<std::size_t>(j)];
        }
        return c;
    }

    // Membership in the row space: every derived parity check annihilates c.
    bool is_codeword(std::uint64_t c) const {
        const std::uint64_t mask = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
        if ((c & ~mask) != 0) throw std::invalid_argument("is_codeword: string wider than n");
        for (std::uint64_t h : checks_) {
            if (dot_parity(c, h) != 0) return false;
        }
        return true;
    }

    // Uniform codeword among {c in C : c (.) r = b}, found by solving the
    // linear constraint on the message rather than rejection sampling.
    // Throws RNonSeparating when c |-> c (.) r vanishes on C but b = 1.
    std::uint64_t choose_codeword(std::uint64_t r, int b, RandomSource& rng) const {
        if (r == 0) throw std::invalid_argument("choose_codeword: r must be non-zero");
        if (b != 0 && b != 1) throw std::invalid_argument("choose_codeword: b must be 0/1");
        int pivot = -1;
        for (int j = 0; j < k_; ++j) {
            if (dot_parity(rows_[static_cast<std::size_t>(j)], r) == 1) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0) {
            if (b == 1) throw RNonSeparating("choose_codeword: c (.) r == 0 on all of C");
            return encode(rng.bits(k_));  // the functional vanishes; all of C qualifies
        }
        std::uint64_t msg = rng.bits(k_);
        msg &= ~(1ULL << pivot);
        int parity = 0;
        for (int j = 0; j < k_; ++j) {
            if ((msg >> j) & 1) parity ^= dot_parity(rows_[static_cast<std::size_t>(j)], r);
        }
        if (parity != b) msg |= 1ULL << pivot;
        return encode(msg);
    }

    // True when some row has odd overlap with r, i.e. c (.) r is surjective on C.
    bool separating(std::uint64_t r) const {
        for (std::uint64_t row : rows_) {
            if (dot_parity(row, r) == 1) return true;
        }
        return false;
    }

private:
    // Row-reduce a copy of G; record pivot columns.
    void build_reduction() {
        reduced_ = rows_;
        pivots_.clear();
        std::size_t done = 0;
        for (int col = 0; col < n_ && done < reduced_.size(); ++col) {
            std::size_t sel = done;
            while (sel < reduced_.size() && ((reduced_[sel] >> col) & 1) == 0) ++sel;
            if (sel == reduced_.size()) continue;
            std::swap(reduced_[done], reduced_[sel]);
            for (std::size_t j = 0; j < reduced_.size(); ++j) {
                if (j != done && ((reduced_[j] >> col) & 1)) reduced_[j] ^= reduced_[done];
            }
            pivots_.push_back(col);
            ++done;
        }
    }

    // One check vector per free column f: bit f plus, for each pivot row, the
    // pivot column when that row has bit f set.  H * c^T = 0 iff c in C.
    void build_parity_checks() {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
        for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
        checks_.clear();
        for (int f = 0; f < n_; ++f) {
            if (is_pivot[static_cast<std::size_t>(f)]) continue;
            std::uint64_t h = 1ULL << f;
            for (std::size_t rrow = 0; rrow < reduced_.size(); ++rrow) {
                if ((reduced_[rrow] >> f) & 1) h |= 1ULL << pivots_[rrow];
            }
            checks_.push_back(h);
        }
    }

    int k_, n_;
    std::vector<std::uint64_t> rows_;
    std::optional<int> d_min_;
    std::vector<std::uint64_t> reduced_;
    std::vector<int> pivots_;
    std::vector<std::uint64_t> checks_;
};

// The [8,4] extended Hamming generating matrix used as the fixture default.
inline GeneratorMatrix extended_hamming_8_4() {
    return GeneratorMatrix::parse({"10000111", "01001011", "00101101", "00011110"}, 4);
}

}  // namespace qseal
