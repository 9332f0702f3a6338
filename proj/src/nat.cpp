#include "runbits/nat.hpp"

#include <ostream>

#include "runbits/errors.hpp"

namespace runbits {

Nat Nat::from_decimal(std::string_view text) {
    if (text.empty()) throw DomainError("empty numeric literal");
    Storage v = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw DomainError("not a decimal natural: '" + std::string(text) + "'");
        v *= 10;
        v += ch - '0';
    }
    return Nat(std::move(v));
}

Nat Nat::from_binary(std::string_view digits) {
    auto first = digits.find('1');
    if (first == std::string_view::npos) {
        if (digits.find_first_not_of('0') != std::string_view::npos)
            throw DomainError("not a binary literal: '" + std::string(digits) + "'");
        return Nat{};
    }
    digits.remove_prefix(first);
    if (digits.size() <= 64) {
        std::uint64_t v = 0;
        for (char ch : digits) {
            if (ch != '0' && ch != '1') throw DomainError("not a binary literal: '" + std::string(digits) + "'");
            v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
        }
        return Nat(v);
    }
    Storage v = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        char ch = digits[i];
        if (ch == '1')
            boost::multiprecision::bit_set(v, static_cast<unsigned>(digits.size() - 1 - i));
        else if (ch != '0')
            throw DomainError("not a binary literal: '" + std::string(digits) + "'");
    }
    return Nat(std::move(v));
}

std::string Nat::to_string() const { return v_.str(); }

std::uint64_t Nat::bit_length() const {
    if (v_.is_zero()) return 0;
    return boost::multiprecision::msb(v_) + 1;
}

std::uint64_t Nat::to_u64() const {
    if (!fits_u64()) throw DomainError("value exceeds 64 bits: " + to_string());
    return v_.convert_to<std::uint64_t>();
}

Nat Nat::div_floor(std::uint64_t d) const {
    if (d == 0) throw DomainError("division by zero");
    return Nat(Storage(v_ / d));
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.to_string(); }

}  // namespace runbits
