#include "runbits/records.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "runbits/errors.hpp"

namespace runbits {

namespace {

struct Candidate {
    std::uint64_t index;
    std::string bits;  // canonical bitstring of the transform value
};

// Order on canonical bitstrings: longer is larger, equal lengths compare lexicographically.
bool exceeds(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
}

void canonical_value(std::uint64_t n, const TransformSpec& spec, std::string& raw, std::string& out) {
    expand_runs(runs_of(n), spec, raw);
    auto first = raw.find('1');
    out.assign(raw, first == std::string::npos ? raw.size() : first);
}

RecordEntry make_entry(std::uint64_t index, const std::string& bits) {
    return {index, Nat::from_binary(bits), bits.size()};
}

// Scans [lo, hi] and appends records that beat `best`, updating it. `best`
// empty means no value seen yet.
void scan_range(const TransformSpec& spec, std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk,
                std::string& best, std::vector<RecordEntry>& out) {
    const std::uint64_t chunks = (hi - lo) / chunk + 1;
    std::vector<std::vector<Candidate>> local(chunks);

#pragma omp parallel
    {
        std::string raw, cur;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
            const std::uint64_t first = lo + static_cast<std::uint64_t>(c) * chunk;
            const std::uint64_t last = std::min(hi, first + (chunk - 1));
            auto& cands = local[static_cast<std::size_t>(c)];
            for (std::uint64_t n = first; n <= last; ++n) {
                canonical_value(n, spec, raw, cur);
                if (cands.empty() || exceeds(cur, cands.back().bits)) cands.push_back({n, cur});
                if (n == last) break;  // guards wrap-around at the top of the range
            }
        }
    }

    for (const auto& cands : local)
        for (const Candidate& c : cands)
            if (best.empty() || exceeds(c.bits, best)) {
                best = c.bits;
                out.push_back(make_entry(c.index, c.bits));
            }
}

void validate(const ScanConfig& cfg) {
    if (cfg.limit == 0) throw DomainError("scan_records: limit must be >= 1");
    if (cfg.chunk == 0) throw DomainError("scan_records: chunk must be >= 1");
}

std::string alternating(std::size_t length) {
    std::string s;
    for (std::size_t i = 0; i < length; ++i) s.push_back(i % 2 == 0 ? '1' : '0');
    return s;
}

// Members of T with exactly `length` bits, increasing.
std::vector<Nat> t_members_of_length(std::size_t length) {
    std::vector<Nat> out;
    if (length >= 2) {
        const std::string base = alternating(length - 1);
        for (std::size_t i = 1; i < base.size(); i += 2) {
            std::string v = base;
            v.insert(i, 1, '0');
            out.push_back(Nat::from_binary(v));
        }
    }
    out.push_back(Nat::from_binary(alternating(length)));
    std::sort(out.begin(), out.end());
    return out;
}

template <class Pred>
bool all_runs(const Nat& n, Pred pred) {
    for (const Run& r : runs_of(n))
        if (!pred(r)) return false;
    return true;
}

std::uint64_t zero_runs_of_length(const Nat& n, std::uint64_t length) {
    std::uint64_t count = 0;
    for (const Run& r : runs_of(n))
        if (!r.bit && r.length == length) ++count;
    return count;
}

void require_positive(const Nat& n, const char* op) {
    if (n.is_zero()) throw DomainError(std::string(op) + ": n must be >= 1");
}

std::vector<std::uint64_t> expected_equality_set(std::uint64_t max_n) {
    std::vector<std::uint64_t> out;
    const Nat limit(max_n);
    Nat four_pow(4);
    for (;;) {
        // (2/3)(4^k - 1) == floor(2 * 4^k / 3) since 2 * 4^k = 2 (mod 3).
        Nat v = (four_pow * Nat(2)).div_floor(3);
        if (v > limit) break;
        out.push_back(v.to_u64());
        four_pow *= Nat(4);
    }
    return out;
}

// 5 a vs 9n^2 + 12n: negative, zero or positive.
int compare_with_bound(const Nat& a, std::uint64_t n) {
    const Nat nn(n);
    const Nat lhs = a * Nat(5);
    const Nat rhs = nn * nn * Nat(9) + nn * Nat(12);
    auto c = lhs <=> rhs;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

std::string pads_label(const TransformSpec& spec) {
    return "mode=" + std::string(to_string(spec.mode)) + " d0=\"" + spec.d0.str() + "\" d1=\"" + spec.d1.str() + "\"";
}

template <class Range>
void write_list(std::ostream& os, const Range& values) {
    bool first = true;
    for (const auto& v : values) {
        os << (first ? "" : " ") << v;
        first = false;
    }
}

}  // namespace

std::vector<RecordEntry> scan_records(const ScanConfig& cfg) {
    validate(cfg);
    std::vector<RecordEntry> out;
    std::string best;
    scan_range(cfg.spec, 1, cfg.limit, cfg.chunk, best, out);
    return out;
}

std::vector<RecordEntry> scan_records_serial(const ScanConfig& cfg) {
    validate(cfg);
    std::vector<RecordEntry> out;
    Nat best;
    for (std::uint64_t n = 1; n <= cfg.limit; ++n) {
        Nat v = apply_transform(Nat(n), cfg.spec);
        if (out.empty() || v > best) {
            best = v;
            out.push_back({n, v, v.bit_length()});
        }
        if (n == cfg.limit) break;
    }
    return out;
}

std::vector<RecordEntry> first_records(const TransformSpec& spec, std::size_t count, std::uint64_t chunk) {
    if (chunk == 0) throw DomainError("first_records: chunk must be >= 1");
    std::vector<RecordEntry> out;
    std::string best;
    std::uint64_t lo = 1, hi = 64;
    while (out.size() < count) {
        scan_range(spec, lo, hi, chunk, best, out);
        lo = hi + 1;
        hi *= 2;
    }
    out.resize(count);
    return out;
}

std::vector<Nat> enumerate_t(std::size_t count) {
    std::vector<Nat> out;
    for (std::size_t length = 1; out.size() < count; ++length)
        for (Nat& v : t_members_of_length(length)) {
            if (out.size() == count) break;
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<Nat> enumerate_t_upto(const Nat& limit) {
    std::vector<Nat> out;
    for (std::uint64_t length = 1; length <= limit.bit_length(); ++length)
        for (Nat& v : t_members_of_length(length))
            if (v <= limit) out.push_back(std::move(v));
    return out;
}

bool in_t(const Nat& n) {
    require_positive(n, "in_t");
    // runs_of always starts with the leading 1-run.
    std::uint64_t doubled = 0;
    bool ok = all_runs(n, [&](const Run& r) {
        if (r.bit) return r.length == 1;
        if (r.length == 2) ++doubled;
        return r.length <= 2;
    });
    return ok && doubled <= 1;
}

bool is_fibbinary(const Nat& n) {
    require_positive(n, "is_fibbinary");
    return all_runs(n, [](const Run& r) { return !r.bit || r.length == 1; });
}

std::uint64_t max_zero_run(const Nat& n) {
    require_positive(n, "max_zero_run");
    std::uint64_t best = 0;
    for (const Run& r : runs_of(n))
        if (!r.bit) best = std::max(best, r.length);
    return best;
}

std::uint64_t double_zero_blocks(const Nat& n) {
    require_positive(n, "double_zero_blocks");
    return zero_runs_of_length(n, 2);
}

bool record_value_shape(const Nat& v) {
    require_positive(v, "record_value_shape");
    bool ok = all_runs(v, [](const Run& r) { return r.bit ? r.length == 2 : (r.length == 2 || r.length == 3); });
    return ok && zero_runs_of_length(v, 3) <= 1;
}

TheoremReport check_theorem(const ScanConfig& cfg) {
    if (!cfg.spec.satisfies_record_hypothesis())
        throw PreconditionError("theorem check needs nonempty pads of equal length, got " + pads_label(cfg.spec));
    validate(cfg);

    TheoremReport report;
    report.spec = cfg.spec;
    report.limit = cfg.limit;
    for (const RecordEntry& e : scan_records(cfg)) {
        report.record_indices.push_back(e.index);
        report.in_t_agreement.push_back(in_t(Nat(e.index)));
    }
    report.t_members = enumerate_t_upto(Nat(cfg.limit));

    bool same = report.record_indices.size() == report.t_members.size();
    for (std::size_t i = 0; same && i < report.t_members.size(); ++i)
        same = report.t_members[i] == Nat(report.record_indices[i]);
    report.verdict = same && std::all_of(report.in_t_agreement.begin(), report.in_t_agreement.end(),
                                         [](bool b) { return b; });
    return report;
}

BoundReport check_bound(std::uint64_t max_n) {
    BoundReport report;
    report.max_n = max_n;
    report.expected_equality = expected_equality_set(max_n);
    if (max_n == 0) return report;

    const TransformSpec spec = append_spec("0", "1");
    const std::int64_t count = static_cast<std::int64_t>(max_n);

#pragma omp parallel
    {
        std::vector<std::uint64_t> violations, equality;
        std::string raw, bits;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            const auto n = static_cast<std::uint64_t>(i) + 1;
            canonical_value(n, spec, raw, bits);
            int c = compare_with_bound(Nat::from_binary(bits), n);
            if (c > 0) violations.push_back(n);
            if (c == 0) equality.push_back(n);
        }
#pragma omp critical
        {
            report.violations.insert(report.violations.end(), violations.begin(), violations.end());
            report.equality.insert(report.equality.end(), equality.begin(), equality.end());
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    std::sort(report.equality.begin(), report.equality.end());
    return report;
}

BoundReport check_bound_serial(std::uint64_t max_n) {
    BoundReport report;
    report.max_n = max_n;
    report.expected_equality = expected_equality_set(max_n);
    const Bitstring zero("0"), one("1");
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        int c = compare_with_bound(append_transform(Nat(n), zero, one), n);
        if (c > 0) report.violations.push_back(n);
        if (c == 0) report.equality.push_back(n);
        if (n == max_n) break;
    }
    return report;
}

void write_records_structured(std::ostream& os, const std::vector<RecordEntry>& entries) {
    for (const RecordEntry& e : entries) os << e.index << ' ' << e.value << '\n';
}

void write_records_text(std::ostream& os, const ScanConfig& cfg, const std::vector<RecordEntry>& entries) {
    os << "# records " << pads_label(cfg.spec) << " limit=" << cfg.limit << '\n';
    if (!cfg.spec.satisfies_record_hypothesis())
        os << "# note: pads are empty or of unequal length; no theorem guarantee\n";
    os << "# columns: index value value_bits value_bitstring\n";
    for (const RecordEntry& e : entries)
        os << e.index << ' ' << e.value << ' ' << e.value_bits << ' ' << to_bitstring(e.value).str() << '\n';
    os << "# " << entries.size() << " records\n";
}

void write_report(std::ostream& os, const TheoremReport& report) {
    os << "theorem check: " << pads_label(report.spec) << " limit=" << report.limit << '\n';
    os << "record indices (" << report.record_indices.size() << "): ";
    write_list(os, report.record_indices);
    os << '\n';
    os << "members of T up to limit (" << report.t_members.size() << "): ";
    write_list(os, report.t_members);
    os << '\n';
    std::vector<std::uint64_t> outside;
    for (std::size_t i = 0; i < report.record_indices.size(); ++i)
        if (!report.in_t_agreement[i]) outside.push_back(report.record_indices[i]);
    if (outside.empty()) {
        os << "every record index is in T\n";
    } else {
        os << "record indices outside T: ";
        write_list(os, outside);
        os << '\n';
    }
    os << "records equal T: " << (report.verdict ? "yes" : "no") << '\n';
    os << "RESULT: " << (report.verdict ? "PASS" : "FAIL") << '\n';
}

void write_report(std::ostream& os, const BoundReport& report) {
    os << "bound check: 5*f(n,\"0\",\"1\") <= 9n^2+12n for n in [1, " << report.max_n << "]\n";
    os << "violations (" << report.violations.size() << ")";
    if (!report.violations.empty()) {
        os << ": ";
        std::vector<std::uint64_t> head(report.violations.begin(),
                                        report.violations.begin() +
                                            static_cast<std::ptrdiff_t>(std::min<std::size_t>(report.violations.size(), 20)));
        write_list(os, head);
    }
    os << '\n';
    os << "equality set: {";
    write_list(os, report.equality);
    os << "}\n";
    os << "expected equality set (2/3)(4^k-1): {";
    write_list(os, report.expected_equality);
    os << "}\n";
    os << "RESULT: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

void write_report(std::ostream& os, const std::vector<IdentityResult>& results) {
    bool all = true;
    for (const IdentityResult& r : results) {
        os << (r.passed() ? "ok   " : "FAIL ") << r.name << " (" << r.checked << " cases)\n";
        for (const std::string& f : r.failures) os << "     " << f << '\n';
        all = all && r.passed();
    }
    os << "RESULT: " << (all ? "PASS" : "FAIL") << '\n';
}

}  // namespace runbits
