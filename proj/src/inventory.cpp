/*
 * Component extraction and closed-world classification of binary windows.
 */

#include "seasq/inventory.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace seasq {

const char* corner_name(Corner c) {
  switch (c) {
    case Corner::UL: return "UL";
    case Corner::UR: return "UR";
    case Corner::LL: return "LL";
    case Corner::LR: return "LR";
  }
  return "?";
}

void SquareInventory::canonicalize() {
  std::sort(full_squares.begin(), full_squares.end());
  std::sort(partial_corners.begin(), partial_corners.end());
  std::sort(partial_sides.begin(), partial_sides.end());
  std::sort(infinite_regions.begin(), infinite_regions.end());
}

coord max_distinct_full(coord L) {
  if (L < 1) throw std::invalid_argument("max_distinct_full: L must be >= 1");
  coord m = 0, sum = 0;
  while (sum + (m + 1) * (m + 1) < L * L) {
    ++m;
    sum += m * m;
  }
  return m;
}

namespace {

ComponentClass fail(std::string why) {
  ComponentClass c;
  c.malformed = true;
  c.reason = std::move(why);
  return c;
}

ComponentClass make_full(coord side, coord x, coord y) {
  ComponentClass c;
  c.full = FullSquare{side, x, y};
  return c;
}

}  // namespace

ComponentClass classify_component(const Rect& r, coord w, coord h) {
  const coord a = r.width(), b = r.height();
  const bool tL = r.x0 == 0, tR = r.x1 == w;
  const bool tB = r.y0 == 0, tT = r.y1 == h;
  const bool free_x = tL || tR;
  const bool free_y = tB || tT;

  if (!free_x && !free_y) {
    // Fully visible component: must be an exact square.
    if (a == b) return make_full(a, r.x0, r.y0);
    return fail("interior component is a non-square rectangle");
  }

  if (free_x != free_y) {
    // Clipped along exactly one axis; the other axis determines the side.
    const coord s = free_x ? b : a;       // fully visible extent
    const coord clipped = free_x ? a : b; // extent along the clipped axis
    if (clipped > s)
      return fail("clipped component is longer than its visible side");
    if (clipped == s) return make_full(s, r.x0, r.y0);
    // clipped < s: the position along the clipped axis is determined only
    // when exactly one window edge cuts the component.
    if (free_x) {
      if (tL && tR)
        return fail("component clipped on both vertical window edges");
      return tL ? make_full(s, r.x1 - s, r.y0) : make_full(s, r.x0, r.y0);
    }
    if (tB && tT)
      return fail("component clipped on both horizontal window edges");
    return tB ? make_full(s, r.x0, r.y1 - s) : make_full(s, r.x0, r.y0);
  }

  // Clipped along both axes.
  if (a == b) return make_full(a, r.x0, r.y0);

  // Side lines of the rectangle that lie strictly inside the window are
  // visible sides of the square.
  const bool line_left = r.x0 > 0, line_right = r.x1 < w;
  const bool line_bottom = r.y0 > 0, line_top = r.y1 < h;
  const int nlines = int(line_left) + int(line_right) + int(line_bottom) +
                     int(line_top);

  if (nlines == 0) {
    ComponentClass c;
    c.infinite = InfiniteRegion{r.x0, r.y0, r.x1, r.y1};
    return c;
  }

  if (nlines == 1) {
    // One visible side whose endpoints both leave the window: partial side.
    // The square's body must show at least one cell beyond the line.
    ComponentClass c;
    if (line_left || line_right) {
      if (a < 2) return fail("bare side line with no square body visible");
      c.side = PartialSide{Axis::vertical, line_left ? r.x0 : r.x1 - 1, r.y0,
                           r.y1, line_left ? +1 : -1};
    } else {
      if (b < 2) return fail("bare side line with no square body visible");
      c.side = PartialSide{Axis::horizontal, line_bottom ? r.y0 : r.y1 - 1,
                           r.x0, r.x1, line_bottom ? +1 : -1};
    }
    return c;
  }

  if (nlines == 2) {
    // Two visible sides.  In the both-axes-clipped case they are always one
    // vertical and one horizontal line meeting at a corner of the square.
    if (a < 2 || b < 2)
      return fail("bare corner lines with no square body visible");
    ComponentClass c;
    if (line_left && line_bottom)
      c.corner = PartialCorner{r.x0, r.y0, Corner::LL};
    else if (line_left && line_top)
      c.corner = PartialCorner{r.x0, r.y1 - 1, Corner::UL};
    else if (line_right && line_bottom)
      c.corner = PartialCorner{r.x1 - 1, r.y0, Corner::LR};
    else
      c.corner = PartialCorner{r.x1 - 1, r.y1 - 1, Corner::UR};
    return c;
  }

  // Three or four lines cannot occur when both axes touch the window edge.
  return fail("inconsistent component boundary");
}

DetectResult detect_inventory(const Pattern& p) {
  if (p.alphabet != Alphabet::binary)
    throw std::invalid_argument("detect_inventory expects a binary pattern");

  DetectResult out;
  const int w = p.width, h = p.height;
  std::vector<int> comp(static_cast<std::size_t>(w) * h, -1);
  int ncomp = 0;

  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      if (p.at(x0, y0) == 0 || comp[static_cast<std::size_t>(y0) * w + x0] >= 0)
        continue;
      // Flood-fill one component, tracking its bounding box and size.
      const int id = ncomp++;
      coord bx0 = x0, bx1 = x0 + 1, by0 = y0, by1 = y0 + 1;
      coord count = 0;
      std::queue<std::pair<int, int>> q;
      q.push({x0, y0});
      comp[static_cast<std::size_t>(y0) * w + x0] = id;
      while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        ++count;
        bx0 = std::min<coord>(bx0, x);
        bx1 = std::max<coord>(bx1, x + 1);
        by0 = std::min<coord>(by0, y);
        by1 = std::max<coord>(by1, y + 1);
        static const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const int nx = x + dx[d], ny = y + dy[d];
          if (!p.in_bounds(nx, ny) || p.at(nx, ny) == 0) continue;
          int& c = comp[static_cast<std::size_t>(ny) * w + nx];
          if (c < 0) {
            c = id;
            q.push({nx, ny});
          }
        }
      }
      const Rect r{bx0, by0, bx1, by1};
      if (count != r.width() * r.height()) {
        out.malformed = true;
        out.reason = "component is not a filled rectangle";
        return out;
      }
      ComponentClass cls = classify_component(r, w, h);
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
  }
  out.inventory.canonicalize();
  return out;
}

std::string render_inventory(const DetectResult& r) {
  std::ostringstream os;
  if (r.malformed) {
    os << "malformed: " << r.reason << '\n';
    return os.str();
  }
  const SquareInventory& inv = r.inventory;
  for (const auto& f : inv.full_squares)
    os << "full side=" << f.side << " at=(" << f.x << ',' << f.y << ")\n";
  for (const auto& c : inv.partial_corners)
    os << "corner " << corner_name(c.orient) << " at=(" << c.x << ',' << c.y
       << ")\n";
  for (const auto& s : inv.partial_sides)
    os << "side axis=" << (s.axis == Axis::horizontal ? 'H' : 'V')
       << " offset=" << s.offset << " span=[" << s.lo << ',' << s.hi
       << ") fill=" << (s.fill_dir > 0 ? '+' : '-') << '\n';
  for (const auto& i : inv.infinite_regions)
    os << "infinite [" << i.x0 << ',' << i.x1 << ")x[" << i.y0 << ',' << i.y1
       << ")\n";
  if (inv.full_squares.empty() && inv.partial_corners.empty() &&
      inv.partial_sides.empty() && inv.infinite_regions.empty())
    os << "empty\n";
  return os.str();
}

}  // namespace seasq
