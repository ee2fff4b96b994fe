/*
 * Directed-square shift: harvested 2x2 rules, lift/project, window
 * enumeration oracles.
 */

#include "seasq/y_shift.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "seasq/sea_gen.hpp"

namespace seasq {

YSym square_symbol(coord n, coord dx, coord dy) {
  const coord dL = dx, dR = n - 1 - dx, dB = dy, dT = n - 1 - dy;
  if (dL < 0 || dR < 0 || dB < 0 || dT < 0)
    throw std::invalid_argument("square_symbol: cell outside square");
  const coord d = std::min(std::min(dL, dR), std::min(dB, dT));
  const bool L = dL == d, R = dR == d, B = dB == d, T = dT == d;
  const int ties = int(L) + int(R) + int(B) + int(T);
  if (ties == 4) return Y_CENTER;  // odd square center (side 1 included)
  if (ties == 1) {
    if (L) return Y_DOWN;   // left edges run down
    if (R) return Y_UP;     // right edges run up
    if (B) return Y_RIGHT;  // bottom edges run right
    return Y_LEFT;          // top edges run left
  }
  // Two adjacent sides tie: a ring corner.  Opposite sides can only tie at
  // the center, which the four-way case above already handled.
  const bool outer = d == 0;
  if (L && T) return outer ? Y_OUT_UL : Y_IN_UL;
  if (R && T) return outer ? Y_OUT_UR : Y_IN_UR;
  if (L && B) return outer ? Y_OUT_LL : Y_IN_LL;
  return outer ? Y_OUT_LR : Y_IN_LR;
}

namespace {

// Paint the visible part of a square onto a W x W canvas of Y symbols.
void paint_square(std::vector<std::uint8_t>& canvas, int W, coord X, coord Y,
                  coord n) {
  const coord x0 = std::max<coord>(X, 0), x1 = std::min<coord>(X + n, W);
  const coord y0 = std::max<coord>(Y, 0), y1 = std::min<coord>(Y + n, W);
  for (coord y = y0; y < y1; ++y)
    for (coord x = x0; x < x1; ++x)
      canvas[static_cast<std::size_t>(y) * W + x] =
          static_cast<std::uint8_t>(square_symbol(n, x - X, y - Y));
}

void harvest_canvas(const std::vector<std::uint8_t>& canvas, int W,
                    std::vector<bool>& seen) {
  for (int y = 0; y + 1 < W; ++y)
    for (int x = 0; x + 1 < W; ++x)
      seen[YRules::code(canvas[static_cast<std::size_t>(y) * W + x],
                        canvas[static_cast<std::size_t>(y) * W + x + 1],
                        canvas[(static_cast<std::size_t>(y) + 1) * W + x],
                        canvas[(static_cast<std::size_t>(y) + 1) * W + x +
                               1])] = true;
}

// Harvest all 2x2 blocks visible in some legal sea, using one window size.
// Configurations rendered: single squares of side 1..max_side at every
// offset meeting the window, and diagonally touching pairs.  A 2x2 block can
// meet at most two squares, and two squares meet a block only at a diagonal
// corner contact, so these renderings exhaust the legal blocks.
std::vector<bool> harvest_blocks(int W, int max_side) {
  std::vector<bool> seen(14 * 14 * 14 * 14, false);
  std::vector<std::uint8_t> canvas(static_cast<std::size_t>(W) * W);

  for (coord n = 1; n <= max_side; ++n)
    for (coord X = -n; X <= W; ++X)
      for (coord Y = -n; Y <= W; ++Y) {
        std::fill(canvas.begin(), canvas.end(), 0);
        paint_square(canvas, W, X, Y, n);
        harvest_canvas(canvas, W, seen);
      }

  for (coord n1 = 1; n1 <= max_side; ++n1)
    for (coord n2 = 1; n2 <= max_side; ++n2)
      for (int orient = 0; orient < 4; ++orient)
        for (coord X = -n1 - n2; X <= W + n2; ++X)
          for (coord Y = -n1 - n2; Y <= W + n2; ++Y) {
            coord X2, Y2;
            switch (orient) {
              case 0: X2 = X + n1; Y2 = Y + n1; break;   // NE contact
              case 1: X2 = X + n1; Y2 = Y - n2; break;   // SE
              case 2: X2 = X - n2; Y2 = Y + n1; break;   // NW
              default: X2 = X - n2; Y2 = Y - n2; break;  // SW
            }
            std::fill(canvas.begin(), canvas.end(), 0);
            paint_square(canvas, W, X, Y, n1);
            paint_square(canvas, W, X2, Y2, n2);
            harvest_canvas(canvas, W, seen);
          }

  return seen;
}

}  // namespace

const YRules& y_rules() {
  static const YRules rules = [] {
    // Two stabilization windows must agree on the harvested block set.
    std::vector<bool> a = harvest_blocks(10, 12);
    std::vector<bool> b = harvest_blocks(12, 12);
    if (a != b)
      throw std::logic_error("2x2 block harvest did not stabilize");
    YRules r;
    r.allowed = std::move(a);
    return r;
  }();
  return rules;
}

std::vector<std::array<std::uint8_t, 4>> forbidden_2x2() {
  const YRules& r = y_rules();
  std::vector<std::array<std::uint8_t, 4>> out;
  for (int ur = 0; ur < 14; ++ur)
    for (int ul = 0; ul < 14; ++ul)
      for (int lr = 0; lr < 14; ++lr)
        for (int ll = 0; ll < 14; ++ll)
          if (!r.allowed[YRules::code(ll, lr, ul, ur)])
            out.push_back({static_cast<std::uint8_t>(ll),
                           static_cast<std::uint8_t>(lr),
                           static_cast<std::uint8_t>(ul),
                           static_cast<std::uint8_t>(ur)});
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
    return YRules::code(p[0], p[1], p[2], p[3]) <
           YRules::code(q[0], q[1], q[2], q[3]);
  });
  return out;
}

YCheckResult check_y(const Pattern& p) {
  if (p.alphabet != Alphabet::y)
    throw std::invalid_argument("check_y expects a y pattern");
  const YRules& r = y_rules();
  for (int x = 0; x + 1 < p.width; ++x)
    for (int y = 0; y + 1 < p.height; ++y)
      if (!r.allowed[YRules::code(p.at(x, y), p.at(x + 1, y), p.at(x, y + 1),
                                  p.at(x + 1, y + 1))])
        return {false, x, y};
  return {};
}

LiftResult lift(const Pattern& bin) {
  DetectResult det = detect_inventory(bin);
  if (det.malformed) return {true, det.reason, Pattern()};

  LiftResult out;
  out.y = Pattern(bin.width, bin.height, Alphabet::y);
  const coord W = bin.width, H = bin.height;

  for (const auto& f : det.inventory.full_squares) {
    const coord x0 = std::max<coord>(f.x, 0), x1 = std::min(f.x + f.side, W);
    const coord y0 = std::max<coord>(f.y, 0), y1 = std::min(f.y + f.side, H);
    for (coord y = y0; y < y1; ++y)
      for (coord x = x0; x < x1; ++x)
        out.y.at(static_cast<int>(x), static_cast<int>(y)) =
            static_cast<std::uint8_t>(square_symbol(f.side, x - f.x, y - f.y));
  }

  for (const auto& c : det.inventory.partial_corners) {
    // The square is larger than anything visible, so rings are measured from
    // the two visible sides only.
    coord x0, x1, y0, y1;
    switch (c.orient) {
      case Corner::LL: x0 = c.x; x1 = W; y0 = c.y; y1 = H; break;
      case Corner::UL: x0 = c.x; x1 = W; y0 = 0; y1 = c.y + 1; break;
      case Corner::LR: x0 = 0; x1 = c.x + 1; y0 = c.y; y1 = H; break;
      default:         x0 = 0; x1 = c.x + 1; y0 = 0; y1 = c.y + 1; break;
    }
    const bool vert_is_left =
        c.orient == Corner::LL || c.orient == Corner::UL;
    const bool horiz_is_bottom =
        c.orient == Corner::LL || c.orient == Corner::LR;
    for (coord y = y0; y < y1; ++y)
      for (coord x = x0; x < x1; ++x) {
        const coord dv = vert_is_left ? x - c.x : c.x - x;
        const coord dh = horiz_is_bottom ? y - c.y : c.y - y;
        std::uint8_t sym;
        if (dv == dh) {
          const bool outer = dv == 0;
          switch (c.orient) {
            case Corner::LL: sym = outer ? Y_OUT_LL : Y_IN_LL; break;
            case Corner::UL: sym = outer ? Y_OUT_UL : Y_IN_UL; break;
            case Corner::LR: sym = outer ? Y_OUT_LR : Y_IN_LR; break;
            default:         sym = outer ? Y_OUT_UR : Y_IN_UR; break;
          }
        } else if (dv < dh) {
          sym = vert_is_left ? Y_DOWN : Y_UP;
        } else {
          sym = horiz_is_bottom ? Y_RIGHT : Y_LEFT;
        }
        out.y.at(static_cast<int>(x), static_cast<int>(y)) = sym;
      }
  }

  for (const auto& s : det.inventory.partial_sides) {
    if (s.axis == Axis::vertical) {
      const coord x0 = s.fill_dir > 0 ? s.offset : 0;
      const coord x1 = s.fill_dir > 0 ? W : s.offset + 1;
      // fill right of the line: the line is the square's left side.
      const std::uint8_t sym = s.fill_dir > 0 ? Y_DOWN : Y_UP;
      for (coord y = s.lo; y < s.hi; ++y)
        for (coord x = x0; x < x1; ++x)
          out.y.at(static_cast<int>(x), static_cast<int>(y)) = sym;
    } else {
      const coord y0 = s.fill_dir > 0 ? s.offset : 0;
      const coord y1 = s.fill_dir > 0 ? H : s.offset + 1;
      const std::uint8_t sym = s.fill_dir > 0 ? Y_RIGHT : Y_LEFT;
      for (coord y = y0; y < y1; ++y)
        for (coord x = s.lo; x < s.hi; ++x)
          out.y.at(static_cast<int>(x), static_cast<int>(y)) = sym;
    }
  }

  for (const auto& r : det.inventory.infinite_regions)
    for (coord y = r.y0; y < r.y1; ++y)
      for (coord x = r.x0; x < r.x1; ++x)
        out.y.at(static_cast<int>(x), static_cast<int>(y)) = Y_UP;

  return out;
}

Pattern project(const Pattern& yp) {
  if (yp.alphabet != Alphabet::y)
    throw std::invalid_argument("project expects a y pattern");
  Pattern out(yp.width, yp.height, Alphabet::binary);
  for (int y = 0; y < yp.height; ++y)
    for (int x = 0; x < yp.width; ++x)
      out.at(x, y) = yp.at(x, y) == Y_ZERO ? 0 : 1;
  return out;
}

std::uint64_t encode_y_window(const Pattern& p) {
  if (p.width * p.height > 16)
    throw std::invalid_argument("encode_y_window: window too large");
  std::uint64_t code = 0;
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x)
      code |= static_cast<std::uint64_t>(p.at(x, y))
              << (4 * (y * p.width + x));
  return code;
}

std::unordered_set<std::uint64_t> enumerate_valid_y_windows(int w, int h) {
  if (w < 2 || h < 2 || w > 4 || h > 4)
    throw std::invalid_argument("enumerate_valid_y_windows: need 2..4 sizes");
  const YRules& rules = y_rules();
  std::unordered_set<std::uint64_t> out;
  std::vector<std::uint8_t> cell(static_cast<std::size_t>(w) * h, 0);

  // Depth-first over cells in row-major order; a block is checked as soon as
  // its upper-right cell is placed.
  const int total = w * h;
  std::vector<int> sym(total, -1);
  int pos = 0;
  while (pos >= 0) {
    if (pos == total) {
      std::uint64_t code = 0;
      for (int i = 0; i < total; ++i)
        code |= static_cast<std::uint64_t>(cell[i]) << (4 * i);
      out.insert(code);
      --pos;
      continue;
    }
    int s = ++sym[pos];
    if (s >= 14) {
      sym[pos] = -1;
      --pos;
      continue;
    }
    const int x = pos % w, y = pos / w;
    cell[pos] = static_cast<std::uint8_t>(s);
    if (x >= 1 && y >= 1 &&
        !rules.allowed[YRules::code(cell[pos - w - 1], cell[pos - w],
                                    cell[pos - 1], cell[pos])])
      continue;  // try next symbol at this position
    ++pos;
  }
  return out;
}

std::unordered_set<std::uint64_t> enumerate_realizable_y_windows(int w,
                                                                 int h) {
  if (w < 2 || h < 2 || w > 4 || h > 4)
    throw std::invalid_argument(
        "enumerate_realizable_y_windows: need 2..4 sizes");
  constexpr coord side_cap = 24;

  struct Cand {
    PlacedSquare sq;
    std::vector<std::pair<int, std::uint8_t>> cells;  // index -> symbol
  };
  std::vector<Cand> cands;
  for (coord n = 1; n <= side_cap; ++n)
    for (coord X = -n + 1; X <= w - 1; ++X)
      for (coord Y = -n + 1; Y <= h - 1; ++Y) {
        Cand c;
        c.sq = {n, X, Y};
        for (coord y = std::max<coord>(Y, 0); y < std::min<coord>(Y + n, h);
             ++y)
          for (coord x = std::max<coord>(X, 0); x < std::min<coord>(X + n, w);
               ++x)
            c.cells.push_back(
                {static_cast<int>(y) * w + static_cast<int>(x),
                 static_cast<std::uint8_t>(square_symbol(n, x - X, y - Y))});
        cands.push_back(std::move(c));
      }

  const int nc = static_cast<int>(cands.size());
  const int words = (nc + 63) / 64;
  // compat[i] holds the candidates with index > i compatible with i.
  std::vector<std::uint64_t> compat(static_cast<std::size_t>(nc) * words, 0);
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j)
      if (!squares_conflict(cands[i].sq, cands[j].sq))
        compat[static_cast<std::size_t>(i) * words + j / 64] |=
            std::uint64_t(1) << (j % 64);

  std::unordered_set<std::uint64_t> out;
  std::vector<std::uint8_t> cell(static_cast<std::size_t>(w) * h, 0);

  auto encode_cells = [&] {
    std::uint64_t code = 0;
    for (int i = 0; i < w * h; ++i)
      code |= static_cast<std::uint64_t>(cell[i]) << (4 * i);
    return code;
  };

  out.insert(encode_cells());  // the empty sea

  // Recursive search over pairwise-compatible sets in index order.  Depth is
  // bounded by the number of disjoint squares meeting the viewport (<= 16).
  std::function<void(const std::uint64_t*)> dfs = [&](const std::uint64_t*
                                                          av) {
    for (int wd = 0; wd < words; ++wd) {
      std::uint64_t bits = av[wd];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        const int j = wd * 64 + b;
        const Cand& c = cands[j];
        for (const auto& [idx, sym] : c.cells) cell[idx] = sym;
        out.insert(encode_cells());
        // Candidates after j that stay compatible with everything chosen.
        std::vector<std::uint64_t> nav(words);
        bool any = false;
        for (int k = 0; k < words; ++k) {
          nav[k] = av[k] & compat[static_cast<std::size_t>(j) * words + k];
          any = any || nav[k];
        }
        if (any) dfs(nav.data());
        for (const auto& [idx, sym] : c.cells) {
          (void)sym;
          cell[idx] = 0;
        }
      }
    }
  };
  std::vector<std::uint64_t> all(words, 0);
  for (int i = 0; i < nc; ++i) all[i / 64] |= std::uint64_t(1) << (i % 64);
  dfs(all.data());
  return out;
}

}  // namespace seasq
