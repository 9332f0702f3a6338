#pragma once

// Run-padding transforms: append (f) and prepend (g) a pad string to every
// maximal run of a binary representation, plus the run-shrinking left
// inverse and the closed-form output-length predictors.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runbits/bitcore.hpp"
#include "runbits/nat.hpp"

namespace runbits {

enum class PadMode { append, prepend };

std::string_view to_string(PadMode mode);
/// Accepts "append" or "prepend"; throws DomainError otherwise.
PadMode parse_pad_mode(std::string_view text);

/// Pads for 0-runs (d0) and 1-runs (d1). Either may be empty and their
/// lengths need not match; the length predictors are stricter.
struct TransformSpec {
    Bitstring d0;
    Bitstring d1;
    PadMode mode = PadMode::append;

    const Bitstring& pad_for(bool run_bit) const { return run_bit ? d1 : d0; }

    /// Common pad length k, if |d0| == |d1|.
    std::optional<std::size_t> pad_length() const;

    /// Both pads nonempty and of equal length.
    bool satisfies_record_hypothesis() const { return !d0.empty() && d0.size() == d1.size(); }

    friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

TransformSpec append_spec(std::string_view d0, std::string_view d1);
TransformSpec prepend_spec(std::string_view d0, std::string_view d1);

/// Pads each run of a canonical bitstring. The result is raw: in prepend mode
/// it may start with zeros. Throws DomainError on non-canonical input.
Bitstring expand_str(const Bitstring& bs, const TransformSpec& spec);

/// Same expansion driven by a run encoding, written into `out` (cleared first).
void expand_runs(std::span<const Run> re, const TransformSpec& spec, std::string& out);

/// f(n, d0, d1).
Nat append_transform(const Nat& n, const Bitstring& d0, const Bitstring& d1);
/// g(n, d0, d1); leading zeros from the first pad vanish in the integer value.
Nat prepend_transform(const Nat& n, const Bitstring& d0, const Bitstring& d1);
/// Dispatches on spec.mode.
Nat apply_transform(const Nat& n, const TransformSpec& spec);

/// Deletes one symbol from every maximal run of B(n). Returns nullopt when
/// every run has length 1 and nothing is left. Left inverse of f(., "0", "1").
std::optional<Nat> shrink_runs(const Nat& n);

/// b(n)k + c(n). Throws DomainError unless |d0| == |d1|.
std::uint64_t predict_len_append(const Nat& n, const TransformSpec& spec);

/// b(n)k + c(n) - l with l the leading zeros of d1. Throws DomainError unless
/// |d0| == |d1|. Only meaningful when the transform output is nonzero.
std::uint64_t predict_len_prepend(const Nat& n, const TransformSpec& spec);

/// Checks the string identity B(g(n, d1, d0)) == d0 B(floor(f(n, d0, d1) / 2^k)),
/// and, when d0 has no ones, g(n, d1, d0) == floor(f(n, d0, d1) / 2^k).
/// Throws DomainError for empty or unequal pads.
bool eq3_identity_check(const Nat& n, const Bitstring& d0, const Bitstring& d1);

/// Failures of one closed-form identity over a range of n.
struct IdentityResult {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;  // "n=..., pads=..." descriptions, capped

    bool passed() const { return failures.empty(); }
};

/// Runs every length formula and identity for n in [1, max_n] over all pad
/// pairs of length 1 and 2.
std::vector<IdentityResult> check_identities(std::uint64_t max_n);

}  // namespace runbits
