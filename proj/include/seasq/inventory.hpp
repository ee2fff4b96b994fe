#pragma once
/*
 * Square inventory extraction from binary windows.
 *
 * A legal window is a finite viewport onto a sea of squares: filled squares
 * of 1s, pairwise non-overlapping, never orthogonally adjacent (diagonal
 * contact is allowed), clipped by the window boundary.  detect_inventory
 * classifies every 4-connected component of 1s:
 *
 *   - full square: all four sides accounted for, side length determined.
 *     This includes squares clipped by exactly one window edge whose
 *     opposite side is visible (the side length is still determined); their
 *     lower-left corner is then signed and may lie outside the window.
 *   - partial corner: exactly two adjacent sides visible, meeting at a
 *     corner; the square's size is not determined.  The stored orientation
 *     names which corner of the square is visible.
 *   - partial side: exactly one side visible as a line whose endpoints both
 *     leave the window; the square extends beyond the window on three sides.
 *   - infinite region: no side visible at all (an all-1 non-square window).
 *
 * Closed-world conventions (documented here once, relied on by tests):
 *   - a component that is not a rectangle is malformed;
 *   - a fully visible rectangle must be square;
 *   - a partial piece must show at least one cell beyond its visible side
 *     lines (a bare 1-wide line on the window edge is malformed);
 *   - a component clipped on two opposite window edges has no determined
 *     position and is malformed.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seasq/pattern.hpp"

namespace seasq {

using coord = std::int64_t;

// Which corner of the (partially visible) square is inside the window.
enum class Corner : std::uint8_t { UL, UR, LL, LR };

// Axis of a visible side line.
enum class Axis : std::uint8_t { horizontal, vertical };

const char* corner_name(Corner c);

struct FullSquare {
  coord side = 0;
  coord x = 0, y = 0;  // lower-left cell; signed, may lie outside the window
  auto operator<=>(const FullSquare&) const = default;
};

struct PartialCorner {
  coord x = 0, y = 0;  // the visible corner cell of the square
  Corner orient = Corner::UL;
  auto operator<=>(const PartialCorner&) const = default;
};

struct PartialSide {
  Axis axis = Axis::horizontal;
  coord offset = 0;    // row (horizontal) or column (vertical) of the line
  coord lo = 0, hi = 0;  // visible span [lo, hi) along the line
  int fill_dir = 0;    // +1: square body on the positive side of the line
  auto operator<=>(const PartialSide&) const = default;
};

// An all-1 window with no visible boundary line; the window lies in the
// interior of a single huge square.
struct InfiniteRegion {
  coord x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // covered rectangle
  auto operator<=>(const InfiniteRegion&) const = default;
};

struct SquareInventory {
  std::vector<FullSquare> full_squares;
  std::vector<PartialCorner> partial_corners;
  std::vector<PartialSide> partial_sides;
  std::vector<InfiniteRegion> infinite_regions;

  // Sort all lists into the canonical comparison order.
  void canonicalize();
  bool operator==(const SquareInventory&) const = default;
};

struct DetectResult {
  bool malformed = false;
  std::string reason;  // set when malformed
  SquareInventory inventory;
};

// Classify every component of 1s in a binary window.
DetectResult detect_inventory(const Pattern& p);

// The area bound on the number of distinct full-square sides in an L x L
// window: the largest m with 1^2 + ... + m^2 < L^2.
coord max_distinct_full(coord L);

// Axis-aligned rectangle [x0,x1) x [y0,y1) plus the classification shared by
// the detector and by generators that need to canonicalize what a clipped
// square looks like in a window.
struct Rect {
  coord x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  coord width() const { return x1 - x0; }
  coord height() const { return y1 - y0; }
  bool operator==(const Rect&) const = default;
};

// Classification of a single rectangular component inside a w x h window.
// Exactly one of the optionals is set on success; none when malformed.
struct ComponentClass {
  bool malformed = false;
  std::string reason;
  std::optional<FullSquare> full;
  std::optional<PartialCorner> corner;
  std::optional<PartialSide> side;
  std::optional<InfiniteRegion> infinite;
};

ComponentClass classify_component(const Rect& r, coord w, coord h);

// Human-readable dump of an inventory (one record per line).
std::string render_inventory(const DetectResult& r);

}  // namespace seasq
