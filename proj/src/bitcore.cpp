#include "runbits/bitcore.hpp"

#include <bit>

#include "runbits/errors.hpp"

namespace runbits {

namespace {

void require_positive(const Nat& n, const char* op) {
    if (n.is_zero()) throw DomainError(std::string(op) + ": n must be >= 1");
}

void push_bit(RunEncoding& out, bool bit) {
    if (!out.empty() && out.back().bit == bit)
        ++out.back().length;
    else
        out.push_back({bit, 1});
}

}  // namespace

Bitstring::Bitstring(std::string_view digits) : bits_(digits) {
    for (char ch : bits_)
        if (ch != '0' && ch != '1') throw DomainError("bitstring may contain only '0' and '1': '" + bits_ + "'");
}

std::size_t Bitstring::leading_zeros() const noexcept {
    auto pos = bits_.find('1');
    return pos == std::string::npos ? bits_.size() : pos;
}

Bitstring to_bitstring(const Nat& n) {
    require_positive(n, "to_bitstring");
    Bitstring out;
    for (std::uint64_t i = n.bit_length(); i-- > 0;) out.push_back(n.bit(i));
    return out;
}

Nat to_nat(const Bitstring& bs) {
    if (bs.empty()) throw DomainError("to_nat: empty bitstring");
    return Nat::from_binary(bs.str());
}

RunEncoding runs(const Bitstring& bs) {
    if (bs.empty()) throw DomainError("runs: empty bitstring");
    RunEncoding out;
    for (std::size_t i = 0; i < bs.size(); ++i) push_bit(out, bs[i]);
    return out;
}

Bitstring from_runs(std::span<const Run> re) {
    Bitstring out;
    for (std::size_t i = 0; i < re.size(); ++i) {
        if (re[i].length == 0) throw DomainError("from_runs: run of length zero");
        if (i > 0 && re[i].bit == re[i - 1].bit) throw DomainError("from_runs: adjacent runs share a bit");
        out.append_run(re[i].bit, re[i].length);
    }
    return out;
}

Bitstring complement(const Bitstring& bs) {
    Bitstring out;
    for (std::size_t i = 0; i < bs.size(); ++i) out.push_back(!bs[i]);
    return out;
}

std::uint64_t run_count(const Nat& n) {
    require_positive(n, "run_count");
    return runs_of(n).size();
}

std::uint64_t bit_count(const Nat& n) {
    require_positive(n, "bit_count");
    return n.bit_length();
}

RunEncoding runs_of(const Nat& n) {
    require_positive(n, "runs_of");
    if (n.fits_u64()) return runs_of(n.to_u64());
    RunEncoding out;
    for (std::uint64_t i = n.bit_length(); i-- > 0;) push_bit(out, n.bit(i));
    return out;
}

RunEncoding runs_of(std::uint64_t n) {
    if (n == 0) throw DomainError("runs_of: n must be >= 1");
    RunEncoding out;
    int width = std::bit_width(n);
    while (width > 0) {
        bool bit = (n >> (width - 1)) & 1u;
        // Length of the run of `bit` starting at position width-1.
        std::uint64_t window = bit ? ~n : n;
        window &= (width == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
        int stop = std::bit_width(window);  // highest differing position + 1, or 0
        out.push_back({bit, static_cast<std::uint64_t>(width - stop)});
        width = stop;
    }
    return out;
}

}  // namespace runbits
