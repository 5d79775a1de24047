#include <doctest.h>

#include "knotmosaic/bounds.hpp"
#include "knotmosaic/error.hpp"
#include "knotmosaic/gauss.hpp"
#include "knotmosaic/invariants.hpp"
#include "knotmosaic/topology.hpp"
#include "support.hpp"

using namespace knotmosaic;
using kmtest::circle_2mosaic;

namespace {

int virtual_tiles(const Mosaic& m) {
    int k = 0;
    for (TileKind t : m.tiles())
        if (is_virtual_crossing(t)) ++k;
    return k;
}

void check_layout_contract(const GaussCode& code, const Mosaic& m) {
    CHECK(is_suitably_connected(m).ok());
    Counts ct = counts(m);
    CHECK(ct.components == 1);
    CHECK(ct.crossings == code.crossing_count());
    CHECK(m.size() <= max_mosaic_number(code.crossing_count()));
    CHECK(roundtrip_check(code, m));
}

} // namespace

TEST_CASE("empty code compiles to the circle") {
    CHECK(layout(GaussCode{}) == circle_2mosaic());
}

TEST_CASE("single kink compiles") {
    GaussCode code = parse_gauss("O1U1");
    Mosaic m = layout(code);
    check_layout_contract(code, m);
    CHECK(virtual_tiles(m) == 0);
    CHECK(jones(m).is_one()); // a kinked unknot
}

TEST_CASE("trefoil code compiles within the bound") {
    GaussCode code = parse_gauss("O1U2O3U1O2U3");
    Mosaic m = layout(code);
    check_layout_contract(code, m);
    CHECK(virtual_tiles(m) == 0);
    std::string j = jones(m).to_string("t");
    // left- or right-handed trefoil, depending on realized signs
    CHECK((j == "t + t^3 - t^4" || j == "-t^-4 + t^-3 + t^-1"));
}

TEST_CASE("figure-eight code compiles and round-trips") {
    GaussCode code = parse_gauss("O1U2O3U4O2U1O4U3");
    Mosaic m = layout(code);
    check_layout_contract(code, m);
    CHECK(virtual_tiles(m) == 0);
    CHECK(jones(m).to_string("t") == "t^-2 - t^-1 + 1 - t + t^2");
}

TEST_CASE("signed trefoil honours the requested signs") {
    GaussCode code = parse_gauss("O1+U2+O3+U1+O2+U3+");
    Mosaic m = layout(code);
    check_layout_contract(code, m);
    GaussCode traced = gauss_code(m);
    CHECK(gauss_equivalent(traced, code, true));
}

TEST_CASE("non-realizable codes need the virtual alphabet") {
    GaussCode code = parse_gauss("O1U2U1O2");
    CHECK_THROWS_AS(layout(code, false), Error);
    Mosaic m = layout(code, true);
    check_layout_contract(code, m);
    CHECK(virtual_tiles(m) >= 1);
    // the virtual bound from the census module holds on the output
    Counts ct = counts(m);
    CHECK(ct.crossings + ct.virtual_crossings <=
          (m.size() - 2) * (m.size() - 2));
}

TEST_CASE("exhaustive roundtrip over every code with up to three chords") {
    for (int c = 0; c <= 3; ++c) {
        for (const auto& word : kmtest::all_chord_words(c)) {
            for (unsigned mask = 0; mask < (1u << c); ++mask) {
                GaussCode code = kmtest::decorate(word, mask);
                Mosaic m = layout(code, true);
                CHECK(is_suitably_connected(m).ok());
                CHECK(counts(m).components == 1);
                CHECK(m.size() <= max_mosaic_number(c));
                CHECK(roundtrip_check(code, m));
                if (is_realizable(code)) CHECK(virtual_tiles(m) == 0);
            }
        }
    }
}

TEST_CASE("sampled roundtrip at five and six chords") {
    // the (2,5) torus knot word and a non-realizable 6-chord word
    GaussCode five = kmtest::decorate({1, 2, 3, 4, 5, 1, 2, 3, 4, 5});
    REQUIRE(is_realizable(five));
    Mosaic m5 = layout(five);
    check_layout_contract(five, m5);
    CHECK(virtual_tiles(m5) == 0);

    GaussCode six = kmtest::decorate({1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6});
    REQUIRE(!is_realizable(six));
    Mosaic m6 = layout(six, true);
    check_layout_contract(six, m6);
    CHECK(virtual_tiles(m6) >= 1);
}
