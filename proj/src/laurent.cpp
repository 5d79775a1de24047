#include "knotmosaic/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knotmosaic {

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.coeffs_.emplace(exponent, std::move(coeff));
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == BigInt(1);
}

BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigInt() : it->second;
}

int LaurentPoly::min_exponent() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial");
    return coeffs_.rbegin()->first;
}

int LaurentPoly::span() const {
    if (coeffs_.empty()) return 0;
    return max_exponent() - min_exponent();
}

void LaurentPoly::insert_term(int exponent, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) insert_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.coeffs_) out.insert_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) out.insert_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::times_monomial(const BigInt& coeff,
                                        int exponent) const {
    LaurentPoly out;
    if (coeff.is_zero()) return out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + exponent, c * coeff);
    return out;
}

LaurentPoly LaurentPoly::invert_variable() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::stretch(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e * k, c);
    return out;
}

bool LaurentPoly::exponents_divisible_by(int d) const {
    for (const auto& [e, c] : coeffs_)
        if (e % d != 0) return false;
    return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        bool negative = c.signum() < 0;
        BigInt mag = negative ? -c : c;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool unit = (mag == BigInt(1));
        if (e == 0) {
            out << mag.to_string();
        } else {
            if (!unit) out << mag.to_string();
            out << var;
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

LaurentPoly bracket_delta() {
    LaurentPoly d;
    d += LaurentPoly::monomial(BigInt(-1), 2);
    d += LaurentPoly::monomial(BigInt(-1), -2);
    return d;
}

} // namespace knotmosaic
