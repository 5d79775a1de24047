#pragma once

#include <map>
#include <string>

#include "knotmosaic/bigint.hpp"

namespace knotmosaic {

/// Sparse integer-coefficient Laurent polynomial in one variable.  No zero
/// coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(BigInt coeff, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    const std::map<int, BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int exponent) const;

    int min_exponent() const; // throws on zero polynomial
    int max_exponent() const;
    /// max exponent - min exponent; 0 for the zero polynomial.
    int span() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);

    /// Multiply by coeff * x^exponent.
    LaurentPoly times_monomial(const BigInt& coeff, int exponent) const;

    /// Substitute x -> x^-1.
    LaurentPoly invert_variable() const;

    /// Substitute x -> x^k (k may be negative); exponents must stay integral.
    LaurentPoly stretch(int k) const;

    /// True iff every exponent is divisible by d.
    bool exponents_divisible_by(int d) const;

    bool operator==(const LaurentPoly&) const = default;

    /// Ascending-exponent text, e.g. "-A^-5 + 2A^-1 - A^3".
    std::string to_string(const std::string& var = "A") const;

private:
    std::map<int, BigInt> coeffs_;

    void insert_term(int exponent, const BigInt& c);
};

/// The loop factor -A^2 - A^-2.
LaurentPoly bracket_delta();

} // namespace knotmosaic
