#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace runbits {

/// Arbitrary-precision non-negative integer.
///
/// Thin value wrapper over boost's cpp_int. Subtraction is not offered: every
/// quantity handled by this library is a count or a natural number.
class Nat {
public:
    using Storage = boost::multiprecision::cpp_int;

    Nat() = default;
    Nat(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    /// Parses a plain decimal literal (digits only). Throws DomainError otherwise.
    static Nat from_decimal(std::string_view text);

    /// Parses MSB-first '0'/'1' digits; leading zeros allowed, empty means zero.
    static Nat from_binary(std::string_view digits);

    std::string to_string() const;

    bool is_zero() const { return v_.is_zero(); }

    /// Number of significant bits; 0 for zero.
    std::uint64_t bit_length() const;

    /// Bit at position i counted from the least significant end.
    bool bit(std::uint64_t i) const { return boost::multiprecision::bit_test(v_, static_cast<unsigned>(i)); }

    bool fits_u64() const { return bit_length() <= 64; }
    std::uint64_t to_u64() const;

    Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
    Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
    Nat& operator<<=(std::uint64_t s) { v_ <<= static_cast<unsigned>(s); return *this; }
    Nat& operator>>=(std::uint64_t s) { v_ >>= static_cast<unsigned>(s); return *this; }

    friend Nat operator+(Nat a, const Nat& b) { return a += b; }
    friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
    friend Nat operator<<(Nat a, std::uint64_t s) { return a <<= s; }
    friend Nat operator>>(Nat a, std::uint64_t s) { return a >>= s; }

    /// Floor division by a nonzero machine word.
    Nat div_floor(std::uint64_t d) const;

    friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const Storage& raw() const { return v_; }

private:
    explicit Nat(Storage v) : v_(std::move(v)) {}

    Storage v_;
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

}  // namespace runbits
