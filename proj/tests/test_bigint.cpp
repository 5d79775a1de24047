#include <doctest.h>

#include "knotmosaic/bigint.hpp"

using knotmosaic::BigInt;

TEST_CASE("bigint basic arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK((BigInt(1) + BigInt(-1)).is_zero());
    CHECK((BigInt(1000000000) * BigInt(1000000000)).to_string() ==
          "1000000000000000000");
    CHECK(BigInt(7) - BigInt(10) == BigInt(-3));
    CHECK(BigInt(-5) * BigInt(-6) == BigInt(30));
    CHECK(BigInt(-5) * BigInt(6) == BigInt(-30));
}

TEST_CASE("bigint against frozen reference values") {
    BigInt a = BigInt::from_string("123456789123456789");
    BigInt b = BigInt::from_string("987654321987654321");
    CHECK((a * b).to_string() == "121932631356500531347203169112635269");
    CHECK((a - b).to_string() == "-864197532864197532");
    CHECK((a * a * a).to_string() ==
          "1881676377434183981909562699940347954480361860897069");

    BigInt two_pow_200(1);
    for (int i = 0; i < 200; ++i) two_pow_200 *= BigInt(2);
    CHECK(two_pow_200.to_string() ==
          "1606938044258990275541962092341162602522202993782792835301376");
}

TEST_CASE("bigint ordering and int64 round trips") {
    CHECK(BigInt(-3) < BigInt(2));
    CHECK(BigInt(100) > BigInt(-100));
    CHECK(BigInt(std::int64_t{1} << 62).to_int64() == (std::int64_t{1} << 62));
    CHECK(BigInt(-1234567890123456789).to_int64() == -1234567890123456789);
    BigInt big = BigInt::from_string("99999999999999999999999999");
    CHECK(!big.fits_int64());
}
