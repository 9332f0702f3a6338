#pragma once

// Conversions between naturals, bitstrings and run encodings.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runbits/nat.hpp"

namespace runbits {

/// MSB-first sequence of binary digits, stored as ASCII '0'/'1'.
///
/// A bitstring is *canonical* when it is nonempty and starts with '1', i.e. it
/// is exactly the binary representation of some n >= 1. Raw strings (prepend
/// transform output, pads) may be empty or carry leading zeros.
class Bitstring {
public:
    Bitstring() = default;
    /// Throws DomainError on any character other than '0' or '1'.
    explicit Bitstring(std::string_view digits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

    bool is_canonical() const noexcept { return !bits_.empty() && bits_.front() == '1'; }
    std::size_t leading_zeros() const noexcept;
    /// True if the string contains no '1'.
    bool all_zero() const noexcept { return bits_.find('1') == std::string::npos; }

    const std::string& str() const noexcept { return bits_; }

    void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
    void append(const Bitstring& o) { bits_ += o.bits_; }
    void append_run(bool bit, std::size_t length) { bits_.append(length, bit ? '1' : '0'); }

    friend Bitstring operator+(Bitstring a, const Bitstring& b) {
        a.append(b);
        return a;
    }
    friend bool operator==(const Bitstring&, const Bitstring&) = default;

private:
    std::string bits_;
};

struct Run {
    bool bit;
    std::uint64_t length;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs in order; adjacent runs differ in bit, every length >= 1.
using RunEncoding = std::vector<Run>;

/// B(n). Throws DomainError for n = 0.
Bitstring to_bitstring(const Nat& n);

/// Base-2 value, leading zeros ignored. Throws DomainError on empty input.
Nat to_nat(const Bitstring& bs);

RunEncoding runs(const Bitstring& bs);

/// Concatenates runs; rejects zero lengths and adjacent runs with equal bits.
Bitstring from_runs(std::span<const Run> re);

Bitstring complement(const Bitstring& bs);

/// Number of maximal runs of both kinds in B(n).
std::uint64_t run_count(const Nat& n);

/// floor(log2 n) + 1.
std::uint64_t bit_count(const Nat& n);

/// Runs of B(n) computed straight from the integer, without a string.
RunEncoding runs_of(const Nat& n);
RunEncoding runs_of(std::uint64_t n);

}  // namespace runbits
