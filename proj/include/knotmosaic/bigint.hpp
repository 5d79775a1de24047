#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace knotmosaic {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
/// Supports exactly what census counting and bracket coefficients need:
/// addition, subtraction, multiplication, comparison and decimal printing.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    int signum() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const = default;
    std::strong_ordering operator<=>(const BigInt& o) const;

    /// Value as int64 when it fits; throws otherwise.
    std::int64_t to_int64() const;
    bool fits_int64() const;

    std::string to_string() const;

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b, bool negative);
    static BigInt sub_mag(const BigInt& a, const BigInt& b, bool negative);
};

} // namespace knotmosaic
