#pragma once
/*
 * The directed-square shift: an SFT over 14 symbols whose configurations are
 * seas of nested counterclockwise square cycles.  Every square of 1s lifts
 * to concentric rings: top edges '<', left edges 'v', bottom edges '>',
 * right edges '^'; ring corners use the inner corner symbols except on the
 * outermost ring, which uses the outer variants; an odd square has a center
 * 'o' (a side-1 square is just 'o').
 *
 * The SFT is defined by its allowed 2x2 blocks.  The allowed set is not
 * hand-written: it is harvested by rendering every legal local configuration
 * (single squares of every side up to a stabilization bound at every
 * clipping offset, plus diagonally touching pairs) on two window sizes and
 * keeping the blocks seen.  The harvest is accepted when both window sizes
 * agree.
 */

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "seasq/inventory.hpp"
#include "seasq/pattern.hpp"

namespace seasq {

// Symbol of cell (dx, dy) counted from the lower-left of a side-n square.
YSym square_symbol(coord n, coord dx, coord dy);

// Allowed 2x2 blocks, indexed by code(ll, lr, ul, ur) in base 14.
struct YRules {
  std::vector<bool> allowed;  // 14^4 entries
  static int code(int ll, int lr, int ul, int ur) {
    return ll + 14 * (lr + 14 * (ul + 14 * ur));
  }
};

// The harvested rule set (computed once per process and cached).
const YRules& y_rules();

// Forbidden blocks as (ll, lr, ul, ur) tuples in ascending code order.
std::vector<std::array<std::uint8_t, 4>> forbidden_2x2();

struct YCheckResult {
  bool valid = true;
  int x = -1, y = -1;  // lower-left cell of the first forbidden block
};

// Scan all 2x2 blocks; the first violation in lexicographic (x, y) order is
// reported.  Windows with a dimension of 1 have no blocks and are valid.
YCheckResult check_y(const Pattern& p);

struct LiftResult {
  bool malformed = false;
  std::string reason;
  Pattern y;
};

// Lift a binary window to its directed-square rendering.  Partial pieces are
// completed maximally: a visible corner belongs to a square too large for
// any of its other sides to show, a visible side likewise, and an all-1
// non-square window sits deep inside a huge square (rendered as '^', the
// right-edge wedge convention).
LiftResult lift(const Pattern& bin);

// Forget the ring structure: nonzero symbols project to 1.
Pattern project(const Pattern& yp);

// --- window enumeration oracles (desk scale, both dimensions in [2,4]) ---

// A window with w*h <= 16 cells packs into 4-bit nibbles, cell (x,y) at
// nibble y*w+x.
std::uint64_t encode_y_window(const Pattern& p);

// All windows passing check_y, via backtracking over the allowed blocks.
std::unordered_set<std::uint64_t> enumerate_valid_y_windows(int w, int h);

// All windows that occur in a legal sea: depth-first search over all sets of
// pairwise-compatible squares intersecting the viewport.  Square sides are
// capped at 24: any square can be replaced by one of side <= 24 anchored at
// its near corner without changing the viewport rendering or creating a
// conflict, since the viewport has diameter <= 4.
std::unordered_set<std::uint64_t> enumerate_realizable_y_windows(int w, int h);

}  // namespace seasq
