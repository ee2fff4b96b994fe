#pragma once
/*
 * Finite rectangular patterns over the two alphabets used throughout this
 * project:
 *
 *   bin  --  {0, 1}; 1-cells form the squares of a sea-of-squares pattern.
 *   y    --  the 14-symbol alphabet of nested counterclockwise directed
 *            squares: blank, four arrows, four inner corners, four outer
 *            corners, and a center mark.
 *
 * Coordinate convention (used by every module): x grows to the right, y grows
 * upward, and (0,0) is the lower-left cell of the window.  Text files list
 * rows top first, so line k of a grid holds row y = height-1-k.
 */

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace seasq {

enum class Alphabet { binary, y };

// Y-alphabet symbols.  Arrows point along the direction of travel of the
// counterclockwise cycle they belong to: top edges run left, left edges run
// down, bottom edges run right, right edges run up.  Corners come in an
// inner variant (interior rings) and an outer variant (outermost ring).
enum YSym : std::uint8_t {
  Y_ZERO = 0,
  Y_LEFT = 1,   // '<'
  Y_RIGHT = 2,  // '>'
  Y_UP = 3,     // '^'
  Y_DOWN = 4,   // 'v'
  Y_IN_UL = 5,  // 'a'
  Y_IN_UR = 6,  // 'b'
  Y_IN_LL = 7,  // 'c'
  Y_IN_LR = 8,  // 'd'
  Y_OUT_UL = 9,  // 'A'
  Y_OUT_UR = 10, // 'B'
  Y_OUT_LL = 11, // 'C'
  Y_OUT_LR = 12, // 'D'
  Y_CENTER = 13, // 'o'
};

inline constexpr int y_alphabet_size = 14;

// ASCII codes for the Y alphabet, indexed by YSym.
inline constexpr char y_ascii[y_alphabet_size + 1] = ".<>^vabcdABCDo";

struct Pattern {
  int width = 0;
  int height = 0;
  Alphabet alphabet = Alphabet::binary;
  // Row-major from the bottom row: cells[y*width + x].
  std::vector<std::uint8_t> cells;

  Pattern() = default;
  Pattern(int w, int h, Alphabet a)
      : width(w), height(h), alphabet(a),
        cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {
    if (w <= 0 || h <= 0)
      throw std::invalid_argument("pattern dimensions must be positive");
  }

  std::uint8_t at(int x, int y) const {
    return cells[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return cells[static_cast<std::size_t>(y) * width + x];
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  bool operator==(const Pattern& o) const = default;
};

// Parse the text form:
//   pattern <width> <height> <bin|y>
//   <height lines, top row first>
// Throws std::runtime_error with a line-oriented message on malformed input.
Pattern parse_pattern(std::istream& in);
Pattern parse_pattern(const std::string& text);

// Render back to the text form (ends with a newline).
std::string render_pattern(const Pattern& p);

// Symbol <-> ASCII helpers.
char symbol_to_char(Alphabet a, std::uint8_t sym);
std::uint8_t char_to_symbol(Alphabet a, char c);  // throws on unknown char

}  // namespace seasq
