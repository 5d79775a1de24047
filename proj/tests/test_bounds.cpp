#include <doctest.h>

#include "knotmosaic/bounds.hpp"
#include "knotmosaic/error.hpp"
#include "support.hpp"

using namespace knotmosaic;
using kmtest::circle_2mosaic;
using kmtest::from_rows;
using kmtest::trefoil_4mosaic;

TEST_CASE("max crossings formulas") {
    CHECK(max_crossings(4, Subject::Knot) == 3);
    CHECK(max_crossings(5, Subject::Knot) == 7);
    CHECK(max_crossings(5, Subject::Link) == 9);
    CHECK(max_crossings(4, Subject::Link) == 4);
    CHECK(max_crossings(6, Subject::Knot) == 15);
    CHECK(max_crossings(7, Subject::Knot) == 23);
    // the corollaries only apply above size 3
    CHECK(max_crossings(2, Subject::Knot) == 0);
    CHECK(max_crossings(3, Subject::Knot) == 1);
    CHECK_THROWS_AS(max_crossings(1, Subject::Link), Error);
}

TEST_CASE("mosaic number bound formulas, golden table c = 0..10") {
    const int expected_min[] = {2, 3, 4, 4, 4, 5, 5, 5, 5, 5, 6};
    for (int c = 0; c <= 10; ++c) {
        CHECK(min_mosaic_number(c) == expected_min[c]);
        CHECK(max_mosaic_number(c) == 4 * c + 2);
    }
    CHECK(min_mosaic_number(3) == 4);
    CHECK(min_mosaic_number(7) == 5);
    CHECK(max_mosaic_number(3) == 14);
    CHECK(max_mosaic_number(4) == 18);
    CHECK_THROWS_AS(min_mosaic_number(-1), Error);
}

TEST_CASE("the bound formulas are mutually consistent") {
    for (int n = 2; n <= 12; ++n)
        CHECK(min_mosaic_number(max_crossings(n, Subject::Link)) <= n);
}

TEST_CASE("virtual bound check") {
    CHECK(virtual_bound_check(trefoil_4mosaic())); // 3 + 0 <= 4
    CHECK(virtual_bound_check(Mosaic(3)));
    CHECK(virtual_bound_check(circle_2mosaic()));
    Mosaic v = from_rows({"0 2 1", "2 v 4", "3 4 0"}, Alphabet::Virtual);
    CHECK(virtual_bound_check(v)); // 0 + 1 <= 1
    CHECK_THROWS_AS(virtual_bound_check(from_rows({"1"})), Error);
}

TEST_CASE("audit(3) holds and includes only certified unknot data") {
    BoundReport report = audit(3);
    CHECK(report.all_hold());
    REQUIRE(!report.conjecture.empty());
    CHECK(report.conjecture[0].crossing_number == 0);
    CHECK(report.conjecture[0].mosaic_size == 2);
    CHECK(report.conjecture[0].within_c_plus_2);
}

TEST_CASE("audit rejects sizes beyond the feasibility limit") {
    CHECK_THROWS_AS(audit(6), Error);
    CHECK_THROWS_AS(audit(1), Error);
}

TEST_CASE("report text carries the machine trailer") {
    BoundReport report = audit(3);
    std::string text = report.to_string();
    CHECK(text.find("crossing-bound=pass") != std::string::npos);
    CHECK(text.find("border-crossings=pass") != std::string::npos);
}
