#include "runbits/seqio.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "runbits/errors.hpp"
#include "runbits/records.hpp"
#include "runbits/transforms.hpp"

namespace runbits {

namespace {

using Generator = std::function<std::vector<Nat>(std::size_t)>;

Generator values_of(TransformSpec spec) {
    return [spec](std::size_t count) {
        std::vector<Nat> out;
        out.reserve(count);
        for (std::uint64_t n = 1; n <= count; ++n) out.push_back(apply_transform(Nat(n), spec));
        return out;
    };
}

Generator record_indices_of(TransformSpec spec) {
    return [spec](std::size_t count) {
        std::vector<Nat> out;
        for (const RecordEntry& e : first_records(spec, count)) out.emplace_back(e.index);
        return out;
    };
}

Generator record_values_of(TransformSpec spec) {
    return [spec](std::size_t count) {
        std::vector<Nat> out;
        for (RecordEntry& e : first_records(spec, count)) out.push_back(std::move(e.value));
        return out;
    };
}

std::vector<Nat> shrink_sequence(std::size_t count) {
    std::vector<Nat> out;
    for (std::uint64_t n = 1; n <= count; ++n) out.push_back(shrink_runs(Nat(n)).value_or(Nat{}));
    return out;
}

SequenceRegistry make_standard() {
    const TransformSpec app = append_spec("0", "1");
    const TransformSpec pre = prepend_spec("0", "1");
    SequenceRegistry reg;
    reg.add({"append-values-01", values_of(app), 1, {"A175046", "A156064"},
             "f(n,\"0\",\"1\"): append 0 to each 0-run and 1 to each 1-run, n >= 1. "
             "Both OEIS IDs are cited for this construction; neither is used for lookup."});
    reg.add({"prepend-values-01", values_of(pre), 1, {"A175046", "A156064"},
             "g(n,\"0\",\"1\"): prepend pads; coincides with append-values-01."});
    reg.add({"record-indices-01", record_indices_of(app), 1, {"A319423"},
             "Record indices of f(n,\"0\",\"1\") by brute-force scan, indexed by record ordinal."});
    reg.add({"append-record-values-01", record_values_of(app), 1, {"A319422", "A319424"},
             "Record values of f(n,\"0\",\"1\"), indexed by record ordinal."});
    reg.add({"prepend-record-values-01", record_values_of(pre), 1, {"A319422", "A319424"},
             "Record values of g(n,\"0\",\"1\"), indexed by record ordinal."});
    reg.add({"shrink-runs", shrink_sequence, 1, {"A318921"},
             "Delete one bit from every run of B(n). Inputs whose runs all have length 1 "
             "shrink to the empty string and are written as 0."});
    reg.add({"t-members", enumerate_t, 1, {"A319423"},
             "Alternating 1010... strings and those with one 0 doubled, built structurally."});
    return reg;
}

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

const SequenceRegistry& SequenceRegistry::standard() {
    static const SequenceRegistry reg = make_standard();
    return reg;
}

void SequenceRegistry::add(SequenceDescriptor desc) {
    if (contains(desc.key)) throw std::invalid_argument("duplicate sequence key: " + desc.key);
    entries_.push_back(std::move(desc));
}

const SequenceDescriptor& SequenceRegistry::find(std::string_view key) const {
    for (const auto& d : entries_)
        if (d.key == key) return d;
    throw LookupError("unknown sequence key: " + std::string(key));
}

bool SequenceRegistry::contains(std::string_view key) const {
    for (const auto& d : entries_)
        if (d.key == key) return true;
    return false;
}

std::vector<std::string> SequenceRegistry::keys() const {
    std::vector<std::string> out;
    for (const auto& d : entries_) out.push_back(d.key);
    return out;
}

BFile emit_bfile(const SequenceDescriptor& desc, std::size_t count) {
    if (count == 0) throw DomainError("emit_bfile: count must be >= 1");
    BFile file;
    file.offset = desc.offset;
    std::uint64_t index = desc.offset;
    for (Nat& v : desc.generator(count)) file.entries.emplace_back(index++, std::move(v));
    return file;
}

BFile emit_bfile(std::string_view key, std::size_t count) {
    return emit_bfile(SequenceRegistry::standard().find(key), count);
}

void write_bfile(std::ostream& os, const BFile& file) {
    for (const auto& [index, value] : file.entries) os << index << ' ' << value << '\n';
}

std::string format_bfile(const BFile& file) {
    std::ostringstream os;
    write_bfile(os, file);
    return os.str();
}

BFile parse_bfile(std::istream& is) {
    BFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;

        std::istringstream fields{std::string(body)};
        std::string index_text, value_text, extra;
        if (!(fields >> index_text >> value_text) || (fields >> extra))
            throw ParseError(line_no, "expected \"index value\", got '" + std::string(body) + "'");

        std::uint64_t index = 0;
        auto [end, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
        if (ec != std::errc{} || end != index_text.data() + index_text.size())
            throw ParseError(line_no, "bad index '" + index_text + "'");

        Nat value;
        try {
            value = Nat::from_decimal(value_text);
        } catch (const DomainError&) {
            throw ParseError(line_no, "bad value '" + value_text + "'");
        }

        if (file.entries.empty()) {
            file.offset = index;
        } else if (index != file.entries.back().first + 1) {
            throw StructureError("line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                                 " does not follow " + std::to_string(file.entries.back().first));
        }
        file.entries.emplace_back(index, std::move(value));
    }
    return file;
}

BFile parse_bfile(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_bfile(is);
}

BFileDiff diff_bfiles(const BFile& a, const BFile& b) {
    BFileDiff d;
    d.offset_a = a.offset;
    d.offset_b = b.offset;
    d.count_a = a.entries.size();
    d.count_b = b.entries.size();
    if (!a.entries.empty() && !b.entries.empty() && a.offset != b.offset) {
        d.offset_mismatch = true;
        return d;
    }
    const std::size_t n = std::min(d.count_a, d.count_b);
    for (std::size_t i = 0; i < n; ++i) {
        ++d.overlap;
        if (!(a.entries[i].second == b.entries[i].second)) {
            d.first_divergence = a.entries[i].first;
            break;
        }
    }
    return d;
}

std::string describe(const BFileDiff& d) {
    if (d.offset_mismatch)
        return "offset mismatch: " + std::to_string(d.offset_a) + " vs " + std::to_string(d.offset_b);
    if (d.first_divergence)
        return "first divergence at index " + std::to_string(*d.first_divergence) + " (counts " +
               std::to_string(d.count_a) + " and " + std::to_string(d.count_b) + ")";
    if (d.overlap == 0) return "nothing to compare (counts " + std::to_string(d.count_a) + " and " +
                               std::to_string(d.count_b) + ")";
    std::string s = "match through " + std::to_string(d.offset_a + d.overlap - 1);
    if (d.count_a != d.count_b)
        s += " (lengths differ: " + std::to_string(d.count_a) + " vs " + std::to_string(d.count_b) + ")";
    return s;
}

}  // namespace runbits
