// Tests for the directed-square shift: the per-square symbol function, the
// harvested 2x2 rule set, the block checker, lift/project round trips, and
// the small-window equivalence between block-valid and realizable windows.
#include "doctest.h"
#include "seasq/sea_gen.hpp"
#include "seasq/y_shift.hpp"

#include <random>

using namespace seasq;

namespace {

Pattern yp(int w, int h, const std::vector<std::string>& top_first) {
    REQUIRE(static_cast<int>(top_first.size()) == h);
    std::string text = "pattern " + std::to_string(w) + " " +
                       std::to_string(h) + " y\n";
    for (const auto& line : top_first) text += line + "\n";
    return parse_pattern(text);
}

Pattern bp(int w, int h, const std::vector<std::string>& top_first) {
    std::string text = "pattern " + std::to_string(w) + " " +
                       std::to_string(h) + " bin\n";
    for (const auto& line : top_first) text += line + "\n";
    return parse_pattern(text);
}

} // namespace

TEST_CASE("square_symbol renders whole squares ring by ring") {
    // Side 1: a lone center.
    CHECK(square_symbol(1, 0, 0) == Y_CENTER);

    // Side 2: four outer corners.
    CHECK(square_symbol(2, 0, 0) == Y_OUT_LL);
    CHECK(square_symbol(2, 1, 0) == Y_OUT_LR);
    CHECK(square_symbol(2, 0, 1) == Y_OUT_UL);
    CHECK(square_symbol(2, 1, 1) == Y_OUT_UR);

    // Side 3: outer ring plus center.
    CHECK(square_symbol(3, 1, 1) == Y_CENTER);
    CHECK(square_symbol(3, 1, 0) == Y_RIGHT);
    CHECK(square_symbol(3, 1, 2) == Y_LEFT);
    CHECK(square_symbol(3, 0, 1) == Y_DOWN);
    CHECK(square_symbol(3, 2, 1) == Y_UP);
    CHECK(square_symbol(3, 0, 0) == Y_OUT_LL);

    // Side 4: ring 1 uses inner corners.
    CHECK(square_symbol(4, 1, 1) == Y_IN_LL);
    CHECK(square_symbol(4, 2, 1) == Y_IN_LR);
    CHECK(square_symbol(4, 1, 2) == Y_IN_UL);
    CHECK(square_symbol(4, 2, 2) == Y_IN_UR);
    CHECK(square_symbol(4, 0, 3) == Y_OUT_UL);

    // Side 5: arrows between ring corners.
    CHECK(square_symbol(5, 2, 2) == Y_CENTER);
    CHECK(square_symbol(5, 2, 0) == Y_RIGHT);  // bottom edge runs right
    CHECK(square_symbol(5, 2, 4) == Y_LEFT);   // top edge runs left
    CHECK(square_symbol(5, 0, 2) == Y_DOWN);   // left edge runs down
    CHECK(square_symbol(5, 4, 2) == Y_UP);     // right edge runs up
    CHECK(square_symbol(5, 1, 1) == Y_IN_LL);
    CHECK(square_symbol(5, 3, 3) == Y_IN_UR);
    CHECK(square_symbol(5, 1, 2) == Y_DOWN);   // ring 1 left edge
}

TEST_CASE("whole 5x5 square lift") {
    Pattern p = bp(5, 5, {
        "#####",
        "#####",
        "#####",
        "#####",
        "#####",
    });
    // A square all-1 window reads as an exactly fitting full square.
    Sea sea;
    sea.width = 5;
    sea.height = 5;
    sea.squares.push_back(PlacedSquare{5, 0, 0});
    Pattern q = render_sea(sea);
    CHECK(q == p);

    Pattern direct(5, 5, Alphabet::y);
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 5; ++x)
            direct.at(x, y) = static_cast<uint8_t>(square_symbol(5, x, y));
    Pattern expect = yp(5, 5, {
        "A<<<B",
        "va<b^",
        "vvo^^",
        "vc>d^",
        "C>>>D",
    });
    CHECK(direct == expect);
    CHECK(check_y(direct).valid);

    LiftResult lifted = lift(p);
    REQUIRE_FALSE(lifted.malformed);
    CHECK(lifted.y == expect);
}

TEST_CASE("worked 10x12 window lifts to the directed rendering") {
    Pattern binw = bp(10, 12, {
        "##........",
        "##.#####..",
        "##.#####..",
        "##.#####..",
        "##.#####..",
        "##.#####..",
        "##........",
        "##.....###",
        "##.....###",
        "##..#..###",
        "##.#...###",
        "##........",
    });
    Pattern expect = yp(10, 12, {
        "^^........",
        "^^.A<<<B..",
        "^^.va<b^..",
        "^^.vvo^^..",
        "^^.vc>d^..",
        "^^.C>>>D..",
        "^^........",
        "^^.....A<<",
        "^^.....vab",
        "^^..o..vcd",
        "^^.o...C>>",
        "^^........",
    });
    LiftResult r = lift(binw);
    REQUIRE_FALSE(r.malformed);
    CHECK(r.y == expect);
    CHECK(check_y(r.y).valid);
    CHECK(project(r.y) == binw);
}

TEST_CASE("corner piece lift") {
    // LL corner of a huge square visible as a 3x2 rectangle hugging the
    // top-right window corner.
    Pattern binw = bp(4, 4, {
        ".###",
        ".###",
        "....",
        "....",
    });
    LiftResult r = lift(binw);
    REQUIRE_FALSE(r.malformed);
    // Cells (x,y) with 1<=x<4, 2<=y<4; dv = x-1 (distance to the left side),
    // dh = y-2 (distance to the bottom side); equal -> LL corner symbol
    // (outer at distance 0), dv<dh -> 'v' (left side runs down),
    // dv>dh -> '>' (bottom side runs right).
    Pattern truth = yp(4, 4, {
        ".vc>",
        ".C>>",
        "....",
        "....",
    });
    CHECK(r.y == truth);
    CHECK(check_y(r.y).valid);
    CHECK(project(r.y) == binw);
}

TEST_CASE("side piece and infinite region lifts") {
    // Two-column strip clipped top, bottom and left: the visible right side
    // of a huge square.  The side line and every body cell left of it carry
    // '^' (interior cells near a right side belong to deeper rings whose
    // nearest feature is still that side).
    Pattern binw = bp(4, 4, {
        "##..",
        "##..",
        "##..",
        "##..",
    });
    LiftResult r = lift(binw);
    REQUIRE_FALSE(r.malformed);
    for (int y = 0; y < 4; ++y) {
        CHECK(r.y.at(0, y) == Y_UP);
        CHECK(r.y.at(1, y) == Y_UP);
        CHECK(r.y.at(2, y) == Y_ZERO);
        CHECK(r.y.at(3, y) == Y_ZERO);
    }
    CHECK(check_y(r.y).valid);
    CHECK(project(r.y) == binw);

    // Horizontal strip at the top: the bottom side of a huge square runs
    // right, so everything is '>'.
    Pattern binh = bp(4, 4, {
        "####",
        "####",
        "....",
        "....",
    });
    LiftResult rh = lift(binh);
    REQUIRE_FALSE(rh.malformed);
    for (int x = 0; x < 4; ++x) {
        CHECK(rh.y.at(x, 3) == Y_RIGHT);
        CHECK(rh.y.at(x, 2) == Y_RIGHT);
    }
    CHECK(check_y(rh.y).valid);

    // All-1 window: infinite region, rendered with the right-side wedge
    // convention (every cell '^').
    Pattern binw3 = bp(2, 3, {"##", "##", "##"});
    LiftResult r3 = lift(binw3);
    REQUIRE_FALSE(r3.malformed);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 2; ++x) CHECK(r3.y.at(x, y) == Y_UP);
    CHECK(check_y(r3.y).valid);

    // Malformed windows refuse to lift.
    CHECK(lift(bp(2, 2, {"##", ".."})).malformed);  // domino
    CHECK(lift(bp(3, 3, {".#.", ".#.", ".#."})).malformed); // bare line
}

TEST_CASE("harvest is stable and catches the canonical violations") {
    const YRules& rules = y_rules();
    REQUIRE(rules.allowed.size() == 14u * 14 * 14 * 14);

    // The all-blank block is allowed.
    CHECK(rules.allowed[YRules::code(Y_ZERO, Y_ZERO, Y_ZERO, Y_ZERO)]);

    // A lone center with blank around it is allowed (1-square).
    CHECK(rules.allowed[YRules::code(Y_CENTER, Y_ZERO, Y_ZERO, Y_ZERO)]);

    // '>' (bottom edge) directly left of '<' (top edge): two squares meeting
    // orthogonally -- forbidden.
    CHECK_FALSE(rules.allowed[YRules::code(Y_RIGHT, Y_LEFT, Y_ZERO, Y_ZERO)]);

    // Two centers side by side: 1-squares orthogonally adjacent, forbidden.
    CHECK_FALSE(rules.allowed[YRules::code(Y_CENTER, Y_CENTER, Y_ZERO, Y_ZERO)]);

    // Checkerboard of centers: diagonal contact, allowed.
    CHECK(rules.allowed[YRules::code(Y_CENTER, Y_ZERO, Y_ZERO, Y_CENTER)]);

    // forbidden_2x2 is the complement, in ascending code order.
    auto forb = forbidden_2x2();
    std::size_t allowed_count = 0;
    for (bool b : rules.allowed) allowed_count += b ? 1 : 0;
    CHECK(forb.size() + allowed_count == rules.allowed.size());
    for (std::size_t i = 1; i < forb.size(); ++i) {
        int c0 = YRules::code(forb[i - 1][0], forb[i - 1][1], forb[i - 1][2],
                              forb[i - 1][3]);
        int c1 = YRules::code(forb[i][0], forb[i][1], forb[i][2], forb[i][3]);
        CHECK(c0 < c1);
    }
}

TEST_CASE("check_y reports the first violation in scan order") {
    Pattern p = yp(3, 2, {
        "...",
        "><.",
    });
    YCheckResult r = check_y(p);
    CHECK_FALSE(r.valid);
    CHECK(r.x == 0);
    CHECK(r.y == 0);

    Pattern ok = yp(2, 2, {"..", "o."});
    CHECK(check_y(ok).valid);

    // Width-1 windows have no 2x2 blocks at all.
    Pattern thin = yp(1, 3, {">", "<", "o"});
    CHECK(check_y(thin).valid);
}

TEST_CASE("random seas lift to valid windows that project back") {
    std::mt19937_64 rng(811);
    for (int iter = 0; iter < 120; ++iter) {
        SeaGenOptions opt;
        opt.width = 6 + static_cast<int>(rng() % 15);
        opt.height = 6 + static_cast<int>(rng() % 15);
        opt.max_side = 1 + static_cast<int>(rng() % 9);
        Sea sea = random_sea(opt, rng);
        Pattern binw = render_sea(sea);
        LiftResult r = lift(binw);
        INFO("iteration ", iter, "\n", render_pattern(binw));
        REQUIRE_FALSE(r.malformed);
        YCheckResult c = check_y(r.y);
        INFO("violation at ", c.x, ",", c.y, "\n", render_pattern(r.y));
        CHECK(c.valid);
        CHECK(project(r.y) == binw);
    }
}

TEST_CASE("block validity is sound and exactly tight at 2x2") {
    // Every window cut from a legal sea passes the block checker (soundness)
    // and at 2x2 — the block size itself — the two sets coincide exactly.
    auto valid22 = enumerate_valid_y_windows(2, 2);
    auto real22 = enumerate_realizable_y_windows(2, 2);
    CHECK(valid22.size() == 67);
    CHECK(valid22 == real22);

    // Beyond 2x2 the checker over-accepts: blocks harvested from squares of
    // different sizes can be stacked inconsistently (local/global gap that
    // every 2x2-block rule set shares).  Soundness still holds, and the gap
    // sizes are frozen here as regression anchors.
    for (auto [w, h, nvalid, nreal] :
         std::vector<std::array<std::size_t, 4>>{{2, 3, 199, 195},
                                                 {3, 2, 199, 195}}) {
        auto valid = enumerate_valid_y_windows(static_cast<int>(w),
                                               static_cast<int>(h));
        auto real = enumerate_realizable_y_windows(static_cast<int>(w),
                                                   static_cast<int>(h));
        INFO("window ", w, "x", h);
        CHECK(valid.size() == nvalid);
        CHECK(real.size() == nreal);
        for (auto v : real) CHECK(valid.count(v) == 1);
    }
}

TEST_CASE("the 2x3 gap witnesses mix squares of different sizes") {
    // All four block-valid-but-unrealizable 2x3 windows pair a 3-square's
    // outer corner adjacent to its center with a >=5-square's inner corner
    // adjacent to its center; the blocks conflict on the square's size.
    auto real = enumerate_realizable_y_windows(2, 3);
    std::vector<Pattern> witnesses = {
        yp(2, 3, {"a<", "vo", "C>"}),
        yp(2, 3, {"A<", "vo", "c>"}),
        yp(2, 3, {"<b", "o^", ">D"}),
        yp(2, 3, {"<B", "o^", ">d"}),
    };
    for (const Pattern& p : witnesses) {
        INFO(render_pattern(p));
        CHECK(check_y(p).valid);               // block-local: accepted
        CHECK(real.count(encode_y_window(p)) == 0);  // global: impossible
    }
}

TEST_CASE("a bare-line projection is block-valid but not detectable") {
    // The right side of a huge square seen through a 2x2 keyhole at the left
    // window edge: a '^' column with blank to its right.  This is a genuine
    // piece of a legal configuration, so the block checker accepts it, but
    // its projection is a bare 1-wide line, which the closed-world detector
    // rejects (no body cell shows).  The asymmetry is confined to bare-line
    // projections; tests that compare the two sides carve this family out.
    Pattern p = yp(2, 2, {"^.", "^."});
    CHECK(check_y(p).valid);
    DetectResult d = detect_inventory(project(p));
    CHECK(d.malformed);

    // A blank cell directly LEFT of '^' is impossible (cells left of a right
    // side belong to the same square), so the interior bare '^' line is
    // already block-invalid.
    Pattern q = yp(3, 2, {".^.", ".^."});
    CHECK_FALSE(check_y(q).valid);
}
