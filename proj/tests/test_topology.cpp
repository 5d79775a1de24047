#include <doctest.h>

#include "knotmosaic/error.hpp"
#include "knotmosaic/topology.hpp"
#include "support.hpp"

using namespace knotmosaic;
using kmtest::circle_2mosaic;
using kmtest::from_rows;
using kmtest::trefoil_4mosaic;

TEST_CASE("trace of the circle") {
    ComponentSet cs = trace(circle_2mosaic());
    REQUIRE(cs.count() == 1);
    CHECK(cs.components[0].size() == 4);
}

TEST_CASE("trace of the blank mosaic") {
    CHECK(trace(Mosaic(3)).count() == 0);
}

TEST_CASE("trace rejects unsuitable mosaics") {
    CHECK_THROWS_AS(trace(from_rows({"1"})), Error);
}

TEST_CASE("every connection point is traversed exactly once") {
    for (const Mosaic& m : {circle_2mosaic(), trefoil_4mosaic()}) {
        ComponentSet cs = trace(m);
        int steps = 0;
        for (const auto& comp : cs.components)
            steps += static_cast<int>(comp.size());
        int points = 0;
        for (TileKind k : m.tiles())
            for (Side s : kSides)
                if (connections(k) & side_bit(s)) ++points;
        CHECK(2 * steps == points);
    }
}

TEST_CASE("counts") {
    Counts c = counts(circle_2mosaic());
    CHECK(c.components == 1);
    CHECK(c.crossings == 0);
    CHECK(c.virtual_crossings == 0);

    Counts t = counts(trefoil_4mosaic());
    CHECK(t.components == 1);
    CHECK(t.crossings == 3);
    CHECK(t.virtual_crossings == 0);
}

TEST_CASE("two disjoint circles") {
    Mosaic two = from_rows({"2 1 0 0", "3 4 0 0", "0 0 2 1", "0 0 3 4"});
    CHECK(counts(two).components == 2);
    CHECK_THROWS_AS(gauss_code(two), Error);
    CHECK_THROWS_AS(writhe(two), Error);
}

TEST_CASE("gauss code of the unknot is empty") {
    CHECK(gauss_code(circle_2mosaic()).empty());
    CHECK(writhe(circle_2mosaic()) == 0);
}

TEST_CASE("gauss code of the trefoil witness") {
    GaussCode code = gauss_code(trefoil_4mosaic());
    REQUIRE(code.entries.size() == 6);
    GaussCode expected = parse_gauss("O1U2O3U1O2U3");
    CHECK(gauss_equivalent(code, expected));
    // alternating and all crossings share one sign
    for (const GaussEntry& e : code.entries) CHECK(e.sign == code.entries[0].sign);
    CHECK(gauss_to_string(code) == "O1-U2-O3-U1-O2-U3-");
}

TEST_CASE("writhe of the trefoil witness and its mirror") {
    Mosaic m = trefoil_4mosaic();
    int w = writhe(m);
    CHECK((w == 3 || w == -3));
    CHECK(writhe(mirror(m)) == -w);
}

TEST_CASE("counts are transform invariant") {
    Mosaic m = trefoil_4mosaic();
    Counts base = counts(m);
    for (D4Element g : d4_elements()) {
        Counts t = counts(transform(m, g));
        CHECK(t.components == base.components);
        CHECK(t.crossings == base.crossings);
        // |writhe| is preserved; plain rotations preserve the sign
        Mosaic tm = transform(m, g);
        if (!g.flip)
            CHECK(writhe(tm) == writhe(m));
        else
            CHECK(writhe(tm) == -writhe(m));
    }
}

TEST_CASE("gauss code is transform invariant up to relabeling") {
    Mosaic m = trefoil_4mosaic();
    GaussCode base = gauss_code(m);
    for (D4Element g : d4_elements())
        CHECK(gauss_equivalent(gauss_code(transform(m, g)), base));
}

TEST_CASE("grow preserves the topology outputs") {
    Mosaic m = trefoil_4mosaic();
    Mosaic g = grow(m);
    CHECK(counts(g).components == counts(m).components);
    CHECK(counts(g).crossings == counts(m).crossings);
    CHECK(gauss_equivalent(gauss_code(g), gauss_code(m), true));
    CHECK(writhe(g) == writhe(m));
}

TEST_CASE("gauss text round trip and validation") {
    GaussCode code = parse_gauss("O1+U2+O3+U1+O2+U3+");
    CHECK(code.entries.size() == 6);
    CHECK(code.crossing_count() == 3);
    CHECK(code.has_signs());
    CHECK(gauss_to_string(code) == "O1+U2+O3+U1+O2+U3+");
    CHECK(parse_gauss("  O1 \n U1 ").entries.size() == 2);

    CHECK_THROWS_AS(parse_gauss("O1U2O1U2X"), Error);
    CHECK_THROWS_AS(parse_gauss("O1O1"), Error);     // twice over
    CHECK_THROWS_AS(parse_gauss("O1U1O1"), Error);   // three times
    CHECK_THROWS_AS(parse_gauss("O1"), Error);       // once
    CHECK_THROWS_AS(parse_gauss("O0U0"), Error);     // label must be positive
}

TEST_CASE("gauss equivalence modulo relabeling, rotation, reversal") {
    GaussCode a = parse_gauss("O1U2O3U1O2U3");
    CHECK(gauss_equivalent(a, parse_gauss("U2O3U1O2U3O1")));  // rotated
    CHECK(gauss_equivalent(a, parse_gauss("O7U9O4U7O9U4")));  // relabeled
    GaussCode reversed;
    for (auto it = a.entries.rbegin(); it != a.entries.rend(); ++it)
        reversed.entries.push_back(*it);
    CHECK(gauss_equivalent(a, reversed));
    CHECK(!gauss_equivalent(a, parse_gauss("O1U1")));
    CHECK(!gauss_equivalent(a, parse_gauss("O1U1O2U2O3U3"))); // three kinks
    // the alternating code is phase-flipped by a one-step rotation
    CHECK(gauss_equivalent(a, parse_gauss("U1O2U3O1U2O3")));
}
