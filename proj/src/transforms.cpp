#include "runbits/transforms.hpp"

#include "runbits/errors.hpp"

namespace runbits {

namespace {

constexpr std::size_t kMaxReportedFailures = 16;

void require_positive(const Nat& n, const char* op) {
    if (n.is_zero()) throw DomainError(std::string(op) + ": n must be >= 1");
}

std::size_t require_equal_pads(const TransformSpec& spec, const char* op) {
    auto k = spec.pad_length();
    if (!k) throw DomainError(std::string(op) + ": pads must have equal length");
    return *k;
}

Nat transform_value(const Nat& n, const TransformSpec& spec) {
    std::string raw;
    expand_runs(runs_of(n), spec, raw);
    return Nat::from_binary(raw);
}

std::vector<Bitstring> all_strings(std::size_t length) {
    std::vector<Bitstring> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) {
        Bitstring s;
        for (std::size_t i = length; i-- > 0;) s.push_back((v >> i) & 1u);
        out.push_back(std::move(s));
    }
    return out;
}

std::string describe(std::uint64_t n, const TransformSpec* spec = nullptr) {
    std::string s = "n=" + std::to_string(n);
    if (spec) s += " d0=\"" + spec->d0.str() + "\" d1=\"" + spec->d1.str() + "\"";
    return s;
}

IdentityResult named(std::string name) {
    IdentityResult r;
    r.name = std::move(name);
    return r;
}

void record_failure(IdentityResult& r, std::string what) {
    if (r.failures.size() < kMaxReportedFailures) r.failures.push_back(std::move(what));
}

}  // namespace

std::string_view to_string(PadMode mode) { return mode == PadMode::append ? "append" : "prepend"; }

PadMode parse_pad_mode(std::string_view text) {
    if (text == "append") return PadMode::append;
    if (text == "prepend") return PadMode::prepend;
    throw DomainError("mode must be 'append' or 'prepend', got '" + std::string(text) + "'");
}

std::optional<std::size_t> TransformSpec::pad_length() const {
    if (d0.size() != d1.size()) return std::nullopt;
    return d0.size();
}

TransformSpec append_spec(std::string_view d0, std::string_view d1) {
    return {Bitstring(d0), Bitstring(d1), PadMode::append};
}

TransformSpec prepend_spec(std::string_view d0, std::string_view d1) {
    return {Bitstring(d0), Bitstring(d1), PadMode::prepend};
}

void expand_runs(std::span<const Run> re, const TransformSpec& spec, std::string& out) {
    out.clear();
    for (const Run& r : re) {
        const std::string& pad = spec.pad_for(r.bit).str();
        if (spec.mode == PadMode::prepend) out += pad;
        out.append(r.length, r.bit ? '1' : '0');
        if (spec.mode == PadMode::append) out += pad;
    }
}

Bitstring expand_str(const Bitstring& bs, const TransformSpec& spec) {
    if (!bs.is_canonical()) throw DomainError("expand_str: input must be canonical (nonempty, leading 1)");
    std::string raw;
    expand_runs(runs(bs), spec, raw);
    return Bitstring(raw);
}

Nat append_transform(const Nat& n, const Bitstring& d0, const Bitstring& d1) {
    require_positive(n, "append_transform");
    return transform_value(n, {d0, d1, PadMode::append});
}

Nat prepend_transform(const Nat& n, const Bitstring& d0, const Bitstring& d1) {
    require_positive(n, "prepend_transform");
    return transform_value(n, {d0, d1, PadMode::prepend});
}

Nat apply_transform(const Nat& n, const TransformSpec& spec) {
    require_positive(n, "apply_transform");
    return transform_value(n, spec);
}

std::optional<Nat> shrink_runs(const Nat& n) {
    require_positive(n, "shrink_runs");
    std::string out;
    for (const Run& r : runs_of(n)) out.append(r.length - 1, r.bit ? '1' : '0');
    if (out.empty()) return std::nullopt;
    return Nat::from_binary(out);
}

std::uint64_t predict_len_append(const Nat& n, const TransformSpec& spec) {
    std::size_t k = require_equal_pads(spec, "predict_len_append");
    return run_count(n) * k + bit_count(n);
}

std::uint64_t predict_len_prepend(const Nat& n, const TransformSpec& spec) {
    std::size_t k = require_equal_pads(spec, "predict_len_prepend");
    return run_count(n) * k + bit_count(n) - spec.d1.leading_zeros();
}

bool eq3_identity_check(const Nat& n, const Bitstring& d0, const Bitstring& d1) {
    require_positive(n, "eq3_identity_check");
    if (d0.empty() || d0.size() != d1.size())
        throw DomainError("eq3_identity_check: pads must be nonempty and of equal length");
    const std::size_t k = d0.size();

    // Left side: raw prepend expansion with the pad roles swapped.
    Bitstring lhs = expand_str(to_bitstring(n), {d1, d0, PadMode::prepend});

    Nat shifted = append_transform(n, d0, d1) >> k;
    Bitstring rhs = d0 + to_bitstring(shifted);
    if (!(lhs == rhs)) return false;

    if (d0.all_zero() && !(prepend_transform(n, d1, d0) == shifted)) return false;
    return true;
}

std::vector<IdentityResult> check_identities(std::uint64_t max_n) {
    std::vector<TransformSpec> pad_pairs;
    for (std::size_t k : {1u, 2u})
        for (const auto& a : all_strings(k))
            for (const auto& b : all_strings(k)) pad_pairs.push_back({a, b, PadMode::append});

    IdentityResult eq1 = named("append length b(n)k+c(n)");
    IdentityResult eq2 = named("prepend length b(n)k+c(n)-l");
    IdentityResult eq3 = named("prepend/append string identity");
    IdentityResult g01 = named("g(n,0,1) = f(n,0,1)");
    IdentityResult g10 = named("g(n,1,0) = floor(f(n,0,1)/2)");
    IdentityResult inv = named("shrink_runs(f(n,0,1)) = n");
    IdentityResult runs_kept = named("b(f(n,0,1)) = b(n), c(f(n,0,1)) = b(n)+c(n)");
    IdentityResult empty_pads = named("f(n,\"\",\"\") = g(n,\"\",\"\") = n");

    const Bitstring zero("0"), one("1"), none;
    for (std::uint64_t v = 1; v <= max_n; ++v) {
        const Nat n(v);
        for (const TransformSpec& spec : pad_pairs) {
            ++eq1.checked;
            if (bit_count(append_transform(n, spec.d0, spec.d1)) != predict_len_append(n, spec))
                record_failure(eq1, describe(v, &spec));

            ++eq2.checked;
            TransformSpec pre = spec;
            pre.mode = PadMode::prepend;
            Nat gv = prepend_transform(n, spec.d0, spec.d1);
            if (gv.is_zero() || bit_count(gv) != predict_len_prepend(n, pre)) record_failure(eq2, describe(v, &spec));

            ++eq3.checked;
            if (!eq3_identity_check(n, spec.d0, spec.d1)) record_failure(eq3, describe(v, &spec));
        }

        Nat f01 = append_transform(n, zero, one);
        ++g01.checked;
        if (!(prepend_transform(n, zero, one) == f01)) record_failure(g01, describe(v));
        ++g10.checked;
        if (!(prepend_transform(n, one, zero) == f01.div_floor(2))) record_failure(g10, describe(v));
        ++inv.checked;
        auto back = shrink_runs(f01);
        if (!back || !(*back == n)) record_failure(inv, describe(v));
        ++runs_kept.checked;
        if (run_count(f01) != run_count(n) || bit_count(f01) != run_count(n) + bit_count(n))
            record_failure(runs_kept, describe(v));
        ++empty_pads.checked;
        if (!(append_transform(n, none, none) == n) || !(prepend_transform(n, none, none) == n))
            record_failure(empty_pads, describe(v));
    }
    return {eq1, eq2, eq3, g01, g10, inv, runs_kept, empty_pads};
}

}  // namespace runbits
