#pragma once

// Record scanning for the run-padding transforms and the structural
// characterization of record indices.
//
// A record index is an n whose transform value exceeds the value at every
// m < n. For nonempty equal-length pads the record indices are exactly the
// set T: binary strings 1010... (alternating, starting with 1), or such a
// string with exactly one 0 doubled. This module scans for records by brute
// force, enumerates T structurally, and compares the two.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "runbits/nat.hpp"
#include "runbits/transforms.hpp"

namespace runbits {

struct RecordEntry {
    std::uint64_t index = 0;
    Nat value;
    std::uint64_t value_bits = 0;

    friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

struct ScanConfig {
    TransformSpec spec;
    std::uint64_t limit = 1;    // inclusive upper bound on n
    std::uint64_t chunk = 4096; // parallel chunk width
};

/// Records for n in [1, cfg.limit], in increasing order.
///
/// The range is cut into chunks of cfg.chunk indices; chunks find their local
/// running maxima in parallel, then a sequential merge keeps the candidates
/// that beat the global running maximum. Output does not depend on chunk size
/// or thread count. Values are compared by bit length first, then
/// lexicographically on the canonical bitstring.
///
/// Throws DomainError if limit or chunk is 0.
std::vector<RecordEntry> scan_records(const ScanConfig& cfg);

/// Single-threaded reference scan using whole-integer comparisons.
std::vector<RecordEntry> scan_records_serial(const ScanConfig& cfg);

/// First `count` records, extending the scanned range as needed.
std::vector<RecordEntry> first_records(const TransformSpec& spec, std::size_t count,
                                       std::uint64_t chunk = 4096);

/// First `count` members of T in increasing order, built per bit length.
std::vector<Nat> enumerate_t(std::size_t count);
/// All members of T that are <= limit.
std::vector<Nat> enumerate_t_upto(const Nat& limit);

bool in_t(const Nat& n);
bool is_fibbinary(const Nat& n);
std::uint64_t max_zero_run(const Nat& n);
/// Number of maximal 0-runs of length exactly 2.
std::uint64_t double_zero_blocks(const Nat& n);
/// Alternating 11/00 blocks starting with 11, at most one 00 widened to 000.
bool record_value_shape(const Nat& v);

struct TheoremReport {
    TransformSpec spec;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> record_indices;
    std::vector<Nat> t_members;       // members of T up to limit
    std::vector<bool> in_t_agreement; // in_t(index) for each record index
    bool verdict = false;
};

/// Scans records and compares them with T. Throws PreconditionError when the
/// pads are empty or of unequal length.
TheoremReport check_theorem(const ScanConfig& cfg);

struct BoundReport {
    std::uint64_t max_n = 0;
    std::vector<std::uint64_t> violations;         // 5 a(n) > 9n^2 + 12n
    std::vector<std::uint64_t> equality;           // 5 a(n) == 9n^2 + 12n
    std::vector<std::uint64_t> expected_equality;  // (2/3)(4^k - 1) <= max_n

    bool passed() const { return violations.empty() && equality == expected_equality; }
};

/// Checks 5 f(n,"0","1") <= 9n^2 + 12n for n in [1, max_n] in exact arithmetic.
BoundReport check_bound(std::uint64_t max_n);
BoundReport check_bound_serial(std::uint64_t max_n);

/// "index value" per line.
void write_records_structured(std::ostream& os, const std::vector<RecordEntry>& entries);
/// Human-readable listing with bit lengths and bitstrings.
void write_records_text(std::ostream& os, const ScanConfig& cfg, const std::vector<RecordEntry>& entries);

/// Human-readable lines followed by "RESULT: PASS" or "RESULT: FAIL".
void write_report(std::ostream& os, const TheoremReport& report);
void write_report(std::ostream& os, const BoundReport& report);
void write_report(std::ostream& os, const std::vector<IdentityResult>& results);

}  // namespace runbits
