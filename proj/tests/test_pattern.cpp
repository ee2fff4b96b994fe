// Tests for the pattern container and its text round trip: coordinate
// conventions (x right, y up, text lines top-first), parse errors, and the
// two alphabets.
#include "doctest.h"
#include "seasq/pattern.hpp"

#include <sstream>

using namespace seasq;

TEST_CASE("binary pattern parse and coordinate convention") {
    std::string text =
        "pattern 3 2 bin\n"
        "..#\n"
        "#..\n";
    Pattern p = parse_pattern(text);
    CHECK(p.width == 3);
    CHECK(p.height == 2);
    CHECK(p.alphabet == Alphabet::binary);
    // First text line is the TOP row (y = 1).
    CHECK(p.at(2, 1) == 1);
    CHECK(p.at(0, 1) == 0);
    CHECK(p.at(0, 0) == 1);
    CHECK(p.at(1, 0) == 0);
    CHECK(p.at(2, 0) == 0);
}

TEST_CASE("render is the inverse of parse") {
    std::string text =
        "pattern 4 3 bin\n"
        "#..#\n"
        "....\n"
        "##.#\n";
    Pattern p = parse_pattern(text);
    CHECK(render_pattern(p) == text);
    Pattern q = parse_pattern(render_pattern(p));
    CHECK(p == q);
}

TEST_CASE("digit aliases for the binary alphabet") {
    Pattern p = parse_pattern("pattern 2 2 bin\n01\n10\n");
    CHECK(p.at(0, 1) == 0);
    CHECK(p.at(1, 1) == 1);
    CHECK(p.at(0, 0) == 1);
    CHECK(p.at(1, 0) == 0);
}

TEST_CASE("y alphabet parse and render") {
    std::string text =
        "pattern 5 5 y\n"
        "A<<<B\n"
        "va<b^\n"
        "vvo^^\n"
        "vc>d^\n"
        "C>>>D\n";
    Pattern p = parse_pattern(text);
    CHECK(p.alphabet == Alphabet::y);
    CHECK(p.at(0, 4) == Y_OUT_UL);
    CHECK(p.at(4, 4) == Y_OUT_UR);
    CHECK(p.at(0, 0) == Y_OUT_LL);
    CHECK(p.at(4, 0) == Y_OUT_LR);
    CHECK(p.at(2, 2) == Y_CENTER);
    CHECK(p.at(1, 3) == Y_IN_UL);
    CHECK(p.at(3, 3) == Y_IN_UR);
    CHECK(p.at(1, 1) == Y_IN_LL);
    CHECK(p.at(3, 1) == Y_IN_LR);
    CHECK(p.at(0, 2) == Y_DOWN);
    CHECK(p.at(4, 2) == Y_UP);
    CHECK(p.at(2, 4) == Y_LEFT);
    CHECK(p.at(2, 0) == Y_RIGHT);
    CHECK(render_pattern(p) == text);
}

TEST_CASE("every y symbol has a distinct character") {
    for (int a = 0; a < y_alphabet_size; ++a)
        for (int b = a + 1; b < y_alphabet_size; ++b)
            CHECK(symbol_to_char(Alphabet::y, static_cast<uint8_t>(a)) !=
                  symbol_to_char(Alphabet::y, static_cast<uint8_t>(b)));
}

TEST_CASE("parse errors carry a reason") {
    CHECK_THROWS(parse_pattern("not a pattern\n"));
    CHECK_THROWS(parse_pattern("pattern 0 2 bin\n"));
    CHECK_THROWS(parse_pattern("pattern 2 2 bin\n##\n#\n"));      // short line
    CHECK_THROWS(parse_pattern("pattern 2 2 bin\n##\n"));         // missing line
    CHECK_THROWS(parse_pattern("pattern 2 2 bin\n##\n##\n##\n")); // extra line
    CHECK_THROWS(parse_pattern("pattern 2 2 bin\n#x\n##\n"));     // bad char
    CHECK_THROWS(parse_pattern("pattern 2 2 wat\n##\n##\n"));     // bad alphabet
    CHECK_THROWS(parse_pattern("pattern 2 2 bin\n#o\n##\n"));     // y char in bin
}

TEST_CASE("crlf line endings are tolerated") {
    Pattern p = parse_pattern("pattern 2 2 bin\r\n#.\r\n.#\r\n");
    CHECK(p.at(0, 1) == 1);
    CHECK(p.at(1, 0) == 1);
}

TEST_CASE("stream parse leaves the stream after the pattern") {
    std::istringstream in("pattern 1 2 bin\n#\n.\ntrailer");
    Pattern p = parse_pattern(in);
    CHECK(p.at(0, 1) == 1);
    CHECK(p.at(0, 0) == 0);
    std::string rest;
    in >> rest;
    CHECK(rest == "trailer");
}
