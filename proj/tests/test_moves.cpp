#include <doctest.h>

#include <set>

#include "knotmosaic/error.hpp"
#include "knotmosaic/invariants.hpp"
#include "knotmosaic/moves.hpp"
#include "knotmosaic/topology.hpp"
#include "support.hpp"

using namespace knotmosaic;
using kmtest::circle_2mosaic;
using kmtest::from_rows;
using kmtest::trefoil_4mosaic;

namespace {

std::vector<TileKind> concrete_cells(const Pattern& p) {
    std::vector<TileKind> out;
    for (const auto& c : p.cells) out.push_back(*c);
    return out;
}

// A kink-insertion placement: an R1 rule whose after side gains a crossing.
Placement find_kink_insertion(const Mosaic& m, const MoveCatalog& cat) {
    for (const Placement& p : applicable_moves(m, cat)) {
        const MoveRule& rule = cat.rule(p.rule_id);
        if (rule.kind != MoveKind::R1) continue;
        int before_crossings = 0, after_crossings = 0;
        for (const auto& c : rule.before.cells)
            if (c && is_crossing(*c)) ++before_crossings;
        for (const auto& c : rule.after.cells)
            if (c && is_crossing(*c)) ++after_crossings;
        if (after_crossings > before_crossings) return p;
    }
    REQUIRE(false);
    return {};
}

} // namespace

TEST_CASE("catalog structure") {
    const MoveCatalog& classical = MoveCatalog::builtin(Alphabet::Classical);
    const MoveCatalog& with_virtual = MoveCatalog::builtin(Alphabet::Virtual);
    CHECK(classical.size() > 300); // the exhaustive planar family is large
    CHECK(with_virtual.size() > classical.size());

    // classical rules form a subset of the virtual catalog
    std::set<std::string> virtual_shapes;
    for (const MoveRule& r : with_virtual.rules())
        virtual_shapes.insert(r.before.key() + "|" + r.after.key());
    for (const MoveRule& r : classical.rules())
        CHECK(virtual_shapes.contains(r.before.key() + "|" + r.after.key()));

    // every rule's reverse is present
    for (int id = 0; id < with_virtual.size(); ++id) {
        int rev = with_virtual.reverse_rule_id(id);
        CHECK(with_virtual.reverse_rule_id(rev) == id);
    }

    // no rule is a no-op; boundary profiles and pairings agree; no loops
    for (const MoveRule& r : with_virtual.rules()) {
        CHECK(r.before.cells != r.after.cells);
        auto bs = patch_shape(concrete_cells(r.before), r.before.k);
        auto as = patch_shape(concrete_cells(r.after), r.after.k);
        REQUIRE(bs.has_value());
        REQUIRE(as.has_value());
        CHECK(bs->profile == as->profile);
        CHECK(bs->pairing == as->pairing);
        CHECK(bs->loops == 0);
        CHECK(as->loops == 0);
    }
}

TEST_CASE("catalog is closed under the grid symmetries") {
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Virtual);
    std::set<std::string> shapes;
    for (const MoveRule& r : cat.rules())
        shapes.insert(r.before.key() + "|" + r.after.key());
    auto image = [](const Pattern& p, D4Element g) {
        Pattern out;
        out.k = p.k;
        out.cells.assign(p.cells.size(), std::nullopt);
        for (int r = 0; r < p.k; ++r)
            for (int c = 0; c < p.k; ++c) {
                int nr, nc;
                d4_apply_cell(g, p.k, r, c, nr, nc);
                out.cells[nr * p.k + nc] = d4_apply_kind(g, *p.at(r, c));
            }
        return out;
    };
    for (const MoveRule& r : cat.rules()) {
        for (D4Element g : d4_elements()) {
            CHECK(shapes.contains(image(r.before, g).key() + "|" +
                                  image(r.after, g).key()));
        }
    }
}

TEST_CASE("every catalog rule preserves the tangle bracket") {
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Virtual);
    for (int id = 0; id < cat.size(); ++id) {
        const MoveRule& rule = cat.rule(id);
        auto tb = tangle_bracket(concrete_cells(rule.before), rule.before.k);
        auto ta = tangle_bracket(concrete_cells(rule.after), rule.after.k);
        if (rule.kind == MoveKind::R1) {
            // a kink multiplies the bracket by -A^(+-3)
            auto scaled_plus = ta;
            auto scaled_minus = ta;
            for (auto& [pairing, poly] : scaled_plus)
                poly = poly.times_monomial(BigInt(-1), 3);
            for (auto& [pairing, poly] : scaled_minus)
                poly = poly.times_monomial(BigInt(-1), -3);
            CHECK((tb == scaled_plus || tb == scaled_minus));
        } else {
            CHECK(tb == ta);
        }
    }
}

TEST_CASE("the catalog straightens detour arcs") {
    // the detour [[T2,T4],[T3,T1]] rewrites to the straight [[T0,T5],[T0,T5]]
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    bool found = false;
    for (const MoveRule& r : cat.rules())
        if (r.before.key() == "2:2 4;3 1;" && r.after.key() == "2:0 5;0 5;")
            found = true;
    CHECK(found);
}

TEST_CASE("applicable moves on the blank mosaic") {
    CHECK(applicable_moves(Mosaic(3), MoveCatalog::builtin(Alphabet::Classical))
              .empty());
}

TEST_CASE("kink removal is applicable on a kink") {
    Mosaic kink = from_rows({"0 2 1", "2 9 4", "3 4 0"});
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    bool found_r1 = false;
    for (const Placement& p : applicable_moves(kink, cat))
        if (cat.rule(p.rule_id).kind == MoveKind::R1) found_r1 = true;
    CHECK(found_r1);
}

TEST_CASE("applicable moves are equivariant under the grid symmetries") {
    Mosaic m = trefoil_4mosaic();
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    size_t base = applicable_moves(m, cat).size();
    for (D4Element g : d4_elements())
        CHECK(applicable_moves(transform(m, g), cat).size() == base);
}

TEST_CASE("apply then reverse is the identity") {
    Mosaic m = trefoil_4mosaic();
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    auto placements = applicable_moves(m, cat);
    REQUIRE(!placements.empty());
    for (size_t i = 0; i < std::min<size_t>(placements.size(), 10); ++i) {
        const Placement& p = placements[i];
        Mosaic moved = apply_move(m, cat, p);
        CHECK(is_suitably_connected(moved).ok());
        Placement reverse{cat.reverse_rule_id(p.rule_id), p.row, p.col};
        CHECK(apply_move(moved, cat, reverse) == m);
    }
}

TEST_CASE("moves preserve components and jones") {
    Mosaic m = trefoil_4mosaic();
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    LaurentPoly j = jones(m);
    for (const Placement& p : applicable_moves(m, cat)) {
        Mosaic moved = apply_move(m, cat, p);
        CHECK(counts(moved).components == 1);
        CHECK(jones(moved) == j);
    }
}

TEST_CASE("apply_move rejects bad placements") {
    Mosaic m = circle_2mosaic();
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    CHECK_THROWS_AS(apply_move(m, cat, Placement{0, 5, 5}), Error);
    CHECK_THROWS_AS(apply_move(m, cat, Placement{-1, 0, 0}), Error);
}

TEST_CASE("kink insertion and simplification") {
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    Mosaic grown = grow(trefoil_4mosaic());
    Placement insertion = find_kink_insertion(grown, cat);
    Mosaic kinked = apply_move(grown, cat, insertion);
    REQUIRE(counts(kinked).crossings == 4);
    CHECK(jones(kinked) == jones(trefoil_4mosaic()));

    Mosaic reduced = simplify(kinked, cat, {.max_steps = 128, .max_grow = 0});
    CHECK(counts(reduced).crossings == 3);
    CHECK(jones(reduced) == jones(trefoil_4mosaic()));
}

TEST_CASE("simplify leaves the minimal circle alone") {
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    Mosaic reduced = simplify(circle_2mosaic(), cat, {.max_steps = 32});
    CHECK(reduced == circle_2mosaic());
}

TEST_CASE("simplify never increases the crossing count") {
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    Mosaic m = trefoil_4mosaic();
    Mosaic reduced = simplify(m, cat, {.max_steps = 64});
    CHECK(counts(reduced).crossings <= counts(m).crossings);
}

TEST_CASE("equivalence search, trivial cases") {
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    Mosaic circle = circle_2mosaic();
    auto self = equivalent_bfs(circle, circle, cat);
    REQUIRE(self.has_value());
    CHECK(self->empty());

    auto grown = equivalent_bfs(circle, grow(circle), cat, {.max_nodes = 64});
    REQUIRE(grown.has_value());
    CHECK(grown->size() == 1);
    CHECK(grown->front().kind == PathStep::Kind::Grow);
    CHECK(apply_path(circle, cat, *grown) == grow(circle));
}

TEST_CASE("equivalence search finds the rotated trefoil") {
    const MoveCatalog& cat = MoveCatalog::builtin(Alphabet::Classical);
    Mosaic m = trefoil_4mosaic();
    Mosaic rotated = transform(m, D4Element{1, false});
    REQUIRE(m != rotated);
    auto path = equivalent_bfs(m, rotated, cat,
                               {.max_nodes = 3000, .max_grow = 0});
    REQUIRE(path.has_value());
    CHECK(apply_path(m, cat, *path) == rotated);
}

TEST_CASE("move rule parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_move_rules("rule x\nkind: R1\nbefore:\n1\n9\n"),
                    Error);
    CHECK_THROWS_AS(
        parse_move_rules("rule x\nkind: bogus\nbefore:\n1\n0\nafter:\n1\n5\n"),
        Error);
    // wildcard positions must coincide
    CHECK_THROWS_AS(parse_move_rules("rule x\nkind: R1\nbefore:\n2\n? 1\n3 4\n"
                                     "after:\n2\n4 0\n0 ?\n"),
                    Error);
    // mismatched boundary profile
    CHECK_THROWS_AS(parse_move_rules("rule x\nkind: R1\nbefore:\n2\n9 1\n3 4\n"
                                     "after:\n2\n0 0\n0 0\n"),
                    Error);
}

TEST_CASE("wildcard rules match anything and copy cells through") {
    // a vertical run detours east; the third column is a wildcard
    std::string text =
        "rule wild-detour\nkind: planar\n"
        "before:\n3\n5 0 ?\n5 0 ?\n5 0 ?\n"
        "after:\n3\n3 1 ?\n2 4 ?\n5 0 ?\n";
    MoveCatalog cat = MoveCatalog::build_from_text(Alphabet::Classical, text);
    REQUIRE(!cat.wildcard_rule_ids().empty());

    Mosaic tall = from_rows(
        {"2 1 0 0 0", "5 5 0 0 0", "5 5 0 0 0", "5 5 0 0 0", "3 4 0 0 0"});
    REQUIRE(is_suitably_connected(tall).ok());
    auto placements = applicable_moves(tall, cat);
    REQUIRE(!placements.empty());
    for (const Placement& p : placements) {
        Mosaic moved = apply_move(tall, cat, p);
        CHECK(is_suitably_connected(moved).ok());
        CHECK(counts(moved).components == 1);
    }

    // a wildcard whose copied content breaks connectivity filters the
    // placement out
    std::string bad =
        "rule wild-kink\nkind: R1\nbefore:\n2\n9 1\n3 ?\nafter:\n2\n4 0\n0 ?\n";
    MoveCatalog cat2 = MoveCatalog::build_from_text(Alphabet::Classical, bad);
    Mosaic kink = from_rows({"2 1 0 0", "3 9 1 0", "0 3 4 0", "0 0 0 0"});
    REQUIRE(is_suitably_connected(kink).ok());
    int kink_removal = -1;
    for (int id = 0; id < cat2.size(); ++id)
        if (cat2.rule(id).before.key() == "2:9 1;3 ?;") kink_removal = id;
    REQUIRE(kink_removal >= 0);
    for (const Placement& p : applicable_moves(kink, cat2)) {
        // the literal match at (1,1) must have been rejected: its wildcard
        // keeps an arc that would dangle
        CHECK(!(p.rule_id == kink_removal && p.row == 1 && p.col == 1));
        CHECK(is_suitably_connected(apply_move(kink, cat2, p)).ok());
    }
}
