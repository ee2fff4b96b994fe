/*
 * Sea-of-squares generation: rejection sampling for random instances and a
 * shelf packer for the distinct-side constructive witness.
 */

#include "seasq/sea_gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace seasq {

bool squares_conflict(const PlacedSquare& a, const PlacedSquare& b) {
  // Projection overlaps: > 0 overlapping, == 0 touching, < 0 separated.
  const coord ox = std::min(a.x + a.side, b.x + b.side) - std::max(a.x, b.x);
  const coord oy = std::min(a.y + a.side, b.y + b.side) - std::max(a.y, b.y);
  if (ox < 0 || oy < 0) return false;
  if (ox == 0 && oy == 0) return false;  // diagonal corner contact is legal
  return true;  // overlap, or edge contact along one axis
}

std::optional<Rect> visible_rect(const PlacedSquare& s, int w, int h) {
  Rect r{std::max<coord>(s.x, 0), std::max<coord>(s.y, 0),
         std::min<coord>(s.x + s.side, w), std::min<coord>(s.y + s.side, h)};
  if (r.x0 >= r.x1 || r.y0 >= r.y1) return std::nullopt;
  return r;
}

Pattern render_sea(const Sea& sea) {
  Pattern p(sea.width, sea.height, Alphabet::binary);
  for (const auto& s : sea.squares) {
    auto r = visible_rect(s, sea.width, sea.height);
    if (!r) continue;
    for (coord y = r->y0; y < r->y1; ++y)
      for (coord x = r->x0; x < r->x1; ++x)
        p.at(static_cast<int>(x), static_cast<int>(y)) = 1;
  }
  return p;
}

DetectResult expected_inventory(const Sea& sea) {
  DetectResult out;
  for (const auto& s : sea.squares) {
    auto r = visible_rect(s, sea.width, sea.height);
    if (!r) continue;
    ComponentClass cls = classify_component(*r, sea.width, sea.height);
    if (cls.malformed) {
      out.malformed = true;
      out.reason = cls.reason;
      return out;
    }
    if (cls.full) out.inventory.full_squares.push_back(*cls.full);
    if (cls.corner) out.inventory.partial_corners.push_back(*cls.corner);
    if (cls.side) out.inventory.partial_sides.push_back(*cls.side);
    if (cls.infinite) out.inventory.infinite_regions.push_back(*cls.infinite);
  }
  out.inventory.canonicalize();
  return out;
}

Sea random_sea(const SeaGenOptions& opt, std::mt19937_64& rng) {
  Sea sea{opt.width, opt.height, {}};
  std::uniform_int_distribution<coord> side_dist(1, opt.max_side);
  for (int t = 0; t < opt.attempts; ++t) {
    PlacedSquare cand;
    cand.side = side_dist(rng);
    const coord xlo = opt.allow_clipping ? -(cand.side - 1) : 0;
    const coord xhi = opt.allow_clipping ? opt.width - 1
                                         : opt.width - cand.side;
    const coord ylo = opt.allow_clipping ? -(cand.side - 1) : 0;
    const coord yhi = opt.allow_clipping ? opt.height - 1
                                         : opt.height - cand.side;
    if (xhi < xlo || yhi < ylo) continue;  // square larger than the window
    cand.x = std::uniform_int_distribution<coord>(xlo, xhi)(rng);
    cand.y = std::uniform_int_distribution<coord>(ylo, yhi)(rng);

    bool ok = true;
    for (const auto& s : sea.squares)
      if (squares_conflict(cand, s)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    auto r = visible_rect(cand, opt.width, opt.height);
    if (!r) continue;
    if (classify_component(*r, opt.width, opt.height).malformed) continue;
    sea.squares.push_back(cand);
  }
  return sea;
}

namespace {

// Try to add the square; true iff it is plane-legal against the sea and its
// viewport classification is a full square of the expected side.
bool try_place(Sea& sea, const PlacedSquare& cand) {
  for (const auto& s : sea.squares)
    if (squares_conflict(cand, s)) return false;
  auto r = visible_rect(cand, sea.width, sea.height);
  if (!r) return false;
  ComponentClass cls = classify_component(*r, sea.width, sea.height);
  if (!cls.full || cls.full->side != cand.side) return false;
  sea.squares.push_back(cand);
  return true;
}

}  // namespace

Sea distinct_packing(coord L) {
  if (L < 5) throw std::invalid_argument("distinct_packing needs L >= 5");
  const coord m = max_distinct_full(L);
  Sea sea{static_cast<int>(L), static_cast<int>(L), {}};

  // Largest square sits fully inside; centered when there is room for
  // clipped shelves on all four edges, in the corner otherwise.
  const coord g = L - m;
  const coord c = g >= 3 ? (L - m) / 2 : 0;
  if (!try_place(sea, {m, c, c}))
    throw std::logic_error("distinct_packing: anchor square failed");

  // Edge shelves hold clipped squares that show one full side while spending
  // only a thin slab of window cells.  A slab must stay clear of the two
  // perpendicular edges, so its cursor runs over [1, L-1).
  coord top_x = 1, right_y = 1, bottom_x = 1, left_y = 1;
  const bool top_ok = c + m <= L - 2;
  const bool right_ok = c + m <= L - 2;
  const bool bottom_ok = c >= 2;
  const bool left_ok = c >= 2;

  for (coord s = m - 1; s >= 1; --s) {
    bool placed = false;
    if (top_ok && top_x + s <= L - 1 &&
        try_place(sea, {s, top_x, L - 1})) {  // square extends above
      top_x += s + 1;
      placed = true;
    }
    if (!placed && right_ok && right_y + s <= L - 1 &&
        try_place(sea, {s, L - 1, right_y})) {  // extends right
      right_y += s + 1;
      placed = true;
    }
    if (!placed && bottom_ok && bottom_x + s <= L - 1 &&
        try_place(sea, {s, bottom_x, -(s - 1)})) {  // extends below
      bottom_x += s + 1;
      placed = true;
    }
    if (!placed && left_ok && left_y + s <= L - 1 &&
        try_place(sea, {s, -(s - 1), left_y})) {  // extends left
      left_y += s + 1;
      placed = true;
    }
    // Fall back to scanning for a fully visible interior spot.
    for (coord y = 0; !placed && y + s <= L; ++y)
      for (coord x = 0; !placed && x + s <= L; ++x)
        placed = try_place(sea, {s, x, y});
    if (!placed)
      throw std::logic_error("distinct_packing: no spot for side " +
                             std::to_string(s));
  }
  return sea;
}

}  // namespace seasq
