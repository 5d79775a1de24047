#include <doctest.h>

#include "knotmosaic/laurent.hpp"

using namespace knotmosaic;

namespace {

LaurentPoly term(std::int64_t c, int e) {
    return LaurentPoly::monomial(BigInt(c), e);
}

} // namespace

TEST_CASE("laurent basics") {
    LaurentPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.span() == 0);
    CHECK(zero.to_string() == "0");
    CHECK(LaurentPoly::one().is_one());

    LaurentPoly p = term(-1, -5) + term(2, -1) + term(-1, 3);
    CHECK(p.to_string() == "-A^-5 + 2A^-1 - A^3");
    CHECK(p.min_exponent() == -5);
    CHECK(p.max_exponent() == 3);
    CHECK(p.span() == 8);
    CHECK(p.coefficient(-1) == BigInt(2));
    CHECK(p.coefficient(0).is_zero());
}

TEST_CASE("laurent cancellation drops zero coefficients") {
    LaurentPoly p = term(3, 2) + term(-3, 2);
    CHECK(p.is_zero());
    CHECK(p.coefficients().empty());
}

TEST_CASE("laurent ring identities on samples") {
    LaurentPoly a = term(1, 0) + term(2, 1);
    LaurentPoly b = term(-1, -2) + term(1, 3);
    LaurentPoly c = term(5, 2);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
}

TEST_CASE("laurent variable substitutions") {
    LaurentPoly p = term(1, -4) + term(2, 8);
    CHECK(p.invert_variable() == term(1, 4) + term(2, -8));
    CHECK(p.exponents_divisible_by(4));
    CHECK(!(p + term(1, 1)).exponents_divisible_by(4));
    CHECK(p.stretch(2) == term(1, -8) + term(2, 16));
}

TEST_CASE("delta is -A^2 - A^-2") {
    CHECK(bracket_delta().to_string() == "-A^-2 - A^2");
    CHECK(bracket_delta().span() == 4);
}

TEST_CASE("formatting corner cases") {
    CHECK(term(1, 1).to_string() == "A");
    CHECK(term(-1, 1).to_string() == "-A");
    CHECK(term(7, 0).to_string() == "7");
    CHECK(term(1, 0).to_string() == "1");
    CHECK((term(1, 0) + term(1, 1)).to_string("t") == "1 + t");
}
