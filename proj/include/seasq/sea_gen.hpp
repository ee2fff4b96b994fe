#pragma once
/*
 * Random sea-of-squares instances and constructive packings.
 *
 * A Sea is a set of squares in true plane coordinates (possibly sticking out
 * of the window).  render_sea draws the window viewport; expected_inventory
 * runs the same closed-world classification the detector uses on each
 * square's visible rectangle, giving the ground truth for round-trip tests.
 */

#include <optional>
#include <random>
#include <vector>

#include "seasq/inventory.hpp"
#include "seasq/pattern.hpp"

namespace seasq {

struct PlacedSquare {
  coord side = 1;
  coord x = 0, y = 0;  // true lower-left, signed
  auto operator<=>(const PlacedSquare&) const = default;
};

struct Sea {
  int width = 0, height = 0;
  std::vector<PlacedSquare> squares;
};

// Overlap or orthogonal adjacency (diagonal contact is legal).
bool squares_conflict(const PlacedSquare& a, const PlacedSquare& b);

// Part of the square inside the w x h window; nullopt when disjoint from it.
std::optional<Rect> visible_rect(const PlacedSquare& s, int w, int h);

Pattern render_sea(const Sea& sea);

// Classify each square's visible rectangle exactly as the detector would.
// A sea whose squares were placed with reject_unclassifiable never yields a
// malformed result here.
DetectResult expected_inventory(const Sea& sea);

struct SeaGenOptions {
  int width = 32;
  int height = 32;
  int max_side = 12;
  int attempts = 96;        // placement attempts, not placed squares
  bool allow_clipping = true;
};

// Rejection-sampling generator: every placement must be plane-legal against
// the squares already placed and must classify cleanly in the window.
Sea random_sea(const SeaGenOptions& opt, std::mt19937_64& rng);

// Constructive witness for the distinct-side bound: a sea over an L x L
// window whose detected full-square sides are exactly {1, ..., m} with
// m = max_distinct_full(L).  Works for L >= 5; throws otherwise.
Sea distinct_packing(coord L);

}  // namespace seasq
