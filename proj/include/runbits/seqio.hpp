#pragma once

// OEIS b-file emission, parsing and comparison, and a registry of the
// sequences this library can generate.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "runbits/nat.hpp"

namespace runbits {

struct BFile {
    std::uint64_t offset = 1;
    std::vector<std::pair<std::uint64_t, Nat>> entries;  // indices offset, offset+1, ...

    friend bool operator==(const BFile&, const BFile&) = default;
};

struct SequenceDescriptor {
    std::string key;
    std::function<std::vector<Nat>(std::size_t count)> generator;
    std::uint64_t offset = 1;
    std::vector<std::string> oeis_ids;  // annotation only
    std::string notes;
};

class SequenceRegistry {
public:
    /// Registry with every sequence family this library knows.
    static const SequenceRegistry& standard();

    /// Throws std::invalid_argument on a duplicate key.
    void add(SequenceDescriptor desc);

    /// Throws LookupError for unknown keys.
    const SequenceDescriptor& find(std::string_view key) const;
    bool contains(std::string_view key) const;
    std::vector<std::string> keys() const;
    const std::vector<SequenceDescriptor>& descriptors() const { return entries_; }

private:
    std::vector<SequenceDescriptor> entries_;
};

/// First `count` terms of the descriptor's sequence. Throws DomainError if count is 0.
BFile emit_bfile(const SequenceDescriptor& desc, std::size_t count);
/// Looks the key up in the standard registry first.
BFile emit_bfile(std::string_view key, std::size_t count);

/// "index value\n" per entry, single space, nothing else.
void write_bfile(std::ostream& os, const BFile& file);
std::string format_bfile(const BFile& file);

/// Reads whitespace-separated "index value" lines. Lines whose first
/// non-blank character is '#' and blank lines are skipped. Throws ParseError
/// (with line number) on malformed lines and StructureError on index gaps.
BFile parse_bfile(std::istream& is);
BFile parse_bfile(std::string_view text);

struct BFileDiff {
    bool offset_mismatch = false;
    std::uint64_t offset_a = 0;
    std::uint64_t offset_b = 0;
    std::size_t count_a = 0;
    std::size_t count_b = 0;
    std::size_t overlap = 0;                     // entries compared
    std::optional<std::uint64_t> first_divergence;  // index of first differing value

    /// Identical offsets, lengths and values.
    bool identical() const { return !offset_mismatch && !first_divergence && count_a == count_b; }
};

BFileDiff diff_bfiles(const BFile& a, const BFile& b);

/// One-line summary, e.g. "match through 20" or "first divergence at index 3".
std::string describe(const BFileDiff& diff);

}  // namespace runbits
