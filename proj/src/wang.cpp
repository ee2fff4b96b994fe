/*
 * Wang tileset parsing, the region solver, and the simulation checker.
 *
 * Solver: cells are indexed row-major from the bottom row.  A candidate
 * table indexed by (west color, south color) -- with a wildcard slot for
 * unconstrained edges -- implements forward checking: a tile is only ever
 * tried against edges that already match.  North/east boundary colors and
 * anchor requirements are filtered per cell.  The parallel variant runs one
 * serial search per first-cell candidate and merges results in input order,
 * so both variants return identical output.
 */

#include "seasq/wang.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace seasq {

int WangTileset::color_index(const std::string& name) const {
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == name) return static_cast<int>(i);
  return -1;
}

void WangTileset::validate() const {
  std::set<std::string> seen;
  for (const auto& c : colors) {
    if (c.empty()) throw std::runtime_error("tileset: empty color name");
    if (!seen.insert(c).second)
      throw std::runtime_error("tileset: duplicate color '" + c + "'");
  }
  const int nc = static_cast<int>(colors.size());
  std::set<std::array<int, 4>> tuples;
  for (const auto& t : tiles) {
    for (int c : {t.n, t.e, t.s, t.w})
      if (c < 0 || c >= nc)
        throw std::runtime_error("tileset: color index out of range");
    if (!tuples.insert({t.n, t.e, t.s, t.w}).second)
      throw std::runtime_error("tileset: duplicate tile 4-tuple");
  }
}

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(std::string("tileset: missing ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// "N=red" -> "red", enforcing the key.
std::string keyed(const std::string& tok, const char* key) {
  const std::size_t klen = std::string(key).size();
  if (tok.size() < klen + 1 || tok.compare(0, klen, key) != 0 ||
      tok[klen] != '=')
    throw std::runtime_error("tileset: expected " + std::string(key) +
                             "=<color>, got '" + tok + "'");
  return tok.substr(klen + 1);
}

}  // namespace

WangTileset parse_tileset(std::istream& in) {
  std::istringstream header(next_line(in, "header"));
  std::string tag;
  int ncolors = -1, ntiles = -1;
  header >> tag >> ncolors >> ntiles;
  if (tag != "tileset" || ncolors < 1 || ntiles < 0)
    throw std::runtime_error("tileset: bad header line");

  WangTileset ts;
  for (int i = 0; i < ncolors; ++i) {
    std::istringstream cl(next_line(in, "color line"));
    std::string name, extra;
    cl >> name;
    if (name.empty() || (cl >> extra))
      throw std::runtime_error("tileset: bad color line");
    ts.colors.push_back(name);
  }
  for (int i = 0; i < ntiles; ++i) {
    std::istringstream tl(next_line(in, "tile line"));
    std::string kw, tn, te, tss, tw, flag;
    int id = -1;
    tl >> kw >> id >> tn >> te >> tss >> tw;
    if (kw != "tile" || id != i)
      throw std::runtime_error("tileset: tile lines must be 'tile <id> ...' "
                               "with sequential ids");
    WangTile t;
    auto col = [&](const std::string& tok, const char* key) {
      int c = ts.color_index(keyed(tok, key));
      if (c < 0) throw std::runtime_error("tileset: unknown color in " + tok);
      return c;
    };
    t.n = col(tn, "N");
    t.e = col(te, "E");
    t.s = col(tss, "S");
    t.w = col(tw, "W");
    if (tl >> flag) {
      if (flag != "anchor")
        throw std::runtime_error("tileset: unexpected token '" + flag + "'");
      t.anchor = true;
      std::string extra;
      if (tl >> extra) throw std::runtime_error("tileset: trailing tokens");
    }
    ts.tiles.push_back(t);
  }
  ts.validate();
  return ts;
}

WangTileset parse_tileset(const std::string& text) {
  std::istringstream in(text);
  return parse_tileset(in);
}

std::string render_tileset(const WangTileset& ts) {
  std::ostringstream out;
  out << "tileset " << ts.colors.size() << ' ' << ts.tiles.size() << '\n';
  for (const auto& c : ts.colors) out << c << '\n';
  for (std::size_t i = 0; i < ts.tiles.size(); ++i) {
    const WangTile& t = ts.tiles[i];
    out << "tile " << i << " N=" << ts.colors[t.n] << " E=" << ts.colors[t.e]
        << " S=" << ts.colors[t.s] << " W=" << ts.colors[t.w];
    if (t.anchor) out << " anchor";
    out << '\n';
  }
  return out.str();
}

namespace {

// Tiles indexed by (west color, south color), with slot nc standing for
// "unconstrained".  Each tile lands in exactly four slots, preserving input
// order within each slot, so lookups are exact and O(1).
struct CandTable {
  int nc;
  std::vector<std::vector<int>> by_ws;

  explicit CandTable(const WangTileset& ts)
      : nc(static_cast<int>(ts.colors.size())),
        by_ws(static_cast<std::size_t>(nc + 1) * (nc + 1)) {
    for (std::size_t t = 0; t < ts.tiles.size(); ++t) {
      const int wc = ts.tiles[t].w, sc = ts.tiles[t].s;
      const int ti = static_cast<int>(t);
      by_ws[static_cast<std::size_t>(wc) * (nc + 1) + sc].push_back(ti);
      by_ws[static_cast<std::size_t>(wc) * (nc + 1) + nc].push_back(ti);
      by_ws[static_cast<std::size_t>(nc) * (nc + 1) + sc].push_back(ti);
      by_ws[static_cast<std::size_t>(nc) * (nc + 1) + nc].push_back(ti);
    }
  }
  const std::vector<int>& get(int wc, int sc) const {
    return by_ws[static_cast<std::size_t>(wc) * (nc + 1) + sc];
  }
};

// Search context for one serial depth-first run.
struct SearchCtx {
  const WangTileset& ts;
  int w, h;
  const Boundary* bnd;
  const AnchorRule* anch;
  int nc;
  const CandTable& tab;

  SolveMode mode;
  std::uint64_t cap;

  // outputs
  bool cap_exceeded = false;
  std::uint64_t count = 0;
  std::vector<Tiling> tilings;
  std::optional<Tiling> first;

  std::vector<int> grid;

  SearchCtx(const WangTileset& ts_, int w_, int h_, const Boundary* b,
            const AnchorRule* a, SolveMode m, std::uint64_t cap_,
            const CandTable& tab_)
      : ts(ts_), w(w_), h(h_), bnd(b), anch(a),
        nc(static_cast<int>(ts_.colors.size())), tab(tab_), mode(m),
        cap(cap_), grid(static_cast<std::size_t>(w_) * h_, -1) {}

  int west_color_at(int x, int y, int idx) const {
    if (x > 0) return ts.tiles[grid[idx - 1]].e;
    if (bnd && !bnd->west.empty() && bnd->west[y]) return *bnd->west[y];
    return nc;
  }
  int south_color_at(int x, int y, int idx) const {
    if (y > 0) return ts.tiles[grid[idx - w]].n;
    if (bnd && !bnd->south.empty() && bnd->south[x]) return *bnd->south[x];
    return nc;
  }
  bool tile_fits(int t, int x, int y, int idx) const {
    const WangTile& tile = ts.tiles[t];
    if (x == w - 1 && bnd && !bnd->east.empty() && bnd->east[y] &&
        tile.e != *bnd->east[y])
      return false;
    if (y == h - 1 && bnd && !bnd->north.empty() && bnd->north[x] &&
        tile.n != *bnd->north[x])
      return false;
    if (anch && !anch->cells.empty()) {
      AnchorReq r = anch->cells[idx];
      if (r == AnchorReq::must && !tile.anchor) return false;
      if (r == AnchorReq::must_not && tile.anchor) return false;
    }
    return true;
  }

  // Returns false to abort the whole search (found/cap reached).
  bool emit() {
    switch (mode) {
      case SolveMode::find:
        first = Tiling{w, h, grid};
        return false;
      case SolveMode::count:
        if (count == cap) {
          cap_exceeded = true;
          return false;
        }
        ++count;
        return true;
      case SolveMode::enumerate_all:
        if (tilings.size() == cap) {
          cap_exceeded = true;
          return false;
        }
        tilings.push_back(Tiling{w, h, grid});
        return true;
    }
    return true;
  }

  bool dfs(int idx) {
    if (idx == w * h) return emit();
    const int x = idx % w, y = idx / w;
    const int wc = west_color_at(x, y, idx);
    const int sc = south_color_at(x, y, idx);
    const auto& cand = tab.get(wc, sc);
    for (int t : cand) {
      if (!tile_fits(t, x, y, idx)) continue;
      grid[idx] = t;
      if (!dfs(idx + 1)) {
        grid[idx] = -1;
        return false;
      }
    }
    grid[idx] = -1;
    return true;
  }

  // Run with cell 0 fixed to tile t0 (which must already fit).
  void run_fixed_first(int t0) {
    grid[0] = t0;
    dfs(1);
    grid[0] = -1;
  }
};

SolveResult finish(SearchCtx& ctx, SolveMode mode) {
  SolveResult r;
  r.cap_exceeded = ctx.cap_exceeded;
  switch (mode) {
    case SolveMode::find:
      if (ctx.first)
        r.tiling = std::move(ctx.first);
      else
        r.unsat = true;
      break;
    case SolveMode::count:
      r.count = ctx.count;
      r.unsat = ctx.count == 0 && !ctx.cap_exceeded;
      break;
    case SolveMode::enumerate_all:
      r.tilings = std::move(ctx.tilings);
      r.unsat = r.tilings.empty() && !ctx.cap_exceeded;
      break;
  }
  return r;
}

void check_args(const WangTileset& ts, int w, int h, const Boundary* bnd,
                const AnchorRule* anch) {
  if (w < 1 || h < 1)
    throw std::invalid_argument("solve_region: region must be at least 1x1");
  if (bnd) {
    auto want = [&](const std::vector<std::optional<int>>& v, std::size_t n,
                    const char* side) {
      if (!v.empty() && v.size() != n)
        throw std::invalid_argument(std::string("solve_region: ") + side +
                                    " boundary has the wrong length");
      for (const auto& c : v)
        if (c && (*c < 0 || *c >= static_cast<int>(ts.colors.size())))
          throw std::invalid_argument("solve_region: boundary color out of "
                                      "range");
    };
    want(bnd->north, static_cast<std::size_t>(w), "north");
    want(bnd->south, static_cast<std::size_t>(w), "south");
    want(bnd->east, static_cast<std::size_t>(h), "east");
    want(bnd->west, static_cast<std::size_t>(h), "west");
  }
  if (anch && !anch->cells.empty() &&
      anch->cells.size() != static_cast<std::size_t>(w) * h)
    throw std::invalid_argument("solve_region: anchor rule has the wrong "
                                "length");
}

}  // namespace

SolveResult solve_region_serial(const WangTileset& ts, int width, int height,
                                const Boundary* boundary, SolveMode mode,
                                std::uint64_t cap,
                                const AnchorRule* anchors) {
  check_args(ts, width, height, boundary, anchors);
  CandTable tab(ts);
  SearchCtx ctx(ts, width, height, boundary, anchors, mode, cap, tab);
  ctx.dfs(0);
  return finish(ctx, mode);
}

SolveResult solve_region(const WangTileset& ts, int width, int height,
                         const Boundary* boundary, SolveMode mode,
                         std::uint64_t cap, const AnchorRule* anchors,
                         bool parallel) {
#if !defined(SEASQ_HAVE_OPENMP)
  (void)parallel;
  return solve_region_serial(ts, width, height, boundary, mode, cap, anchors);
#else
  // find mode stays serial: its contract is "first solution in input
  // order", which a race would have to re-sort anyway.
  if (!parallel || mode == SolveMode::find || width * height == 1)
    return solve_region_serial(ts, width, height, boundary, mode, cap,
                               anchors);
  check_args(ts, width, height, boundary, anchors);
  CandTable tab(ts);

  // First-cell candidates, in input order.
  SearchCtx probe(ts, width, height, boundary, anchors, mode, cap, tab);
  const int wc = probe.west_color_at(0, 0, 0);
  const int sc = probe.south_color_at(0, 0, 0);
  std::vector<int> firsts;
  for (int t : tab.get(wc, sc))
    if (probe.tile_fits(t, 0, 0, 0)) firsts.push_back(t);

  std::vector<SearchCtx> branches;
  branches.reserve(firsts.size());
  for (std::size_t i = 0; i < firsts.size(); ++i)
    branches.emplace_back(ts, width, height, boundary, anchors, mode, cap,
                          tab);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < firsts.size(); ++i)
    branches[i].run_fixed_first(firsts[i]);

  // Merge in input order so the output equals the serial result.
  SolveResult r;
  for (auto& b : branches) {
    if (mode == SolveMode::count) {
      const std::uint64_t room = cap - r.count;
      if (b.count > room) {
        r.count = cap;
        r.cap_exceeded = true;
      } else {
        r.count += b.count;
        if (b.cap_exceeded) r.cap_exceeded = true;
      }
    } else {
      for (auto& t : b.tilings) {
        if (r.tilings.size() == cap) {
          r.cap_exceeded = true;
          break;
        }
        r.tilings.push_back(std::move(t));
      }
      if (b.cap_exceeded) r.cap_exceeded = true;
    }
    if (r.cap_exceeded) break;
  }
  if (mode == SolveMode::count)
    r.unsat = r.count == 0 && !r.cap_exceeded;
  else
    r.unsat = r.tilings.empty() && !r.cap_exceeded;
  return r;
#endif
}

bool tiling_valid(const WangTileset& ts, const Tiling& t,
                  const Boundary* boundary) {
  const int w = t.width, h = t.height;
  if (w < 1 || h < 1 || t.cells.size() != static_cast<std::size_t>(w) * h)
    return false;
  for (int c : t.cells)
    if (c < 0 || c >= static_cast<int>(ts.tiles.size())) return false;
  auto tile = [&](int x, int y) -> const WangTile& {
    return ts.tiles[t.cells[static_cast<std::size_t>(y) * w + x]];
  };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w && tile(x, y).e != tile(x + 1, y).w) return false;
      if (y + 1 < h && tile(x, y).n != tile(x, y + 1).s) return false;
    }
  if (boundary) {
    for (int x = 0; x < w; ++x) {
      if (!boundary->south.empty() && boundary->south[x] &&
          tile(x, 0).s != *boundary->south[x])
        return false;
      if (!boundary->north.empty() && boundary->north[x] &&
          tile(x, h - 1).n != *boundary->north[x])
        return false;
    }
    for (int y = 0; y < h; ++y) {
      if (!boundary->west.empty() && boundary->west[y] &&
          tile(0, y).w != *boundary->west[y])
        return false;
      if (!boundary->east.empty() && boundary->east[y] &&
          tile(w - 1, y).e != *boundary->east[y])
        return false;
    }
  }
  return true;
}

namespace {

std::string cell_name(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

SimCheckResult check_simulation(const WangTileset& T, const WangTileset& S,
                                const SimulationMap& phi,
                                std::uint64_t budget) {
  SimCheckResult res;
  const int N = phi.N;
  if (N < 1) {
    res.detail = "zoom must be at least 1";
    return res;
  }
  if (phi.phi.size() != S.tiles.size()) {
    res.detail = "phi must map every S tile";
    return res;
  }
  for (std::size_t s = 0; s < phi.phi.size(); ++s) {
    if (phi.phi[s].size() != static_cast<std::size_t>(N) * N) {
      res.detail = "phi block for S tile " + std::to_string(s) +
                   " is not N x N";
      return res;
    }
    for (int t : phi.phi[s])
      if (t < 0 || t >= static_cast<int>(T.tiles.size())) {
        res.detail = "phi block for S tile " + std::to_string(s) +
                     " references a missing T tile";
        return res;
      }
  }
  // Injectivity precondition.
  std::map<std::vector<int>, int> image;
  for (std::size_t s = 0; s < phi.phi.size(); ++s) {
    auto [it, fresh] = image.insert({phi.phi[s], static_cast<int>(s)});
    if (!fresh) {
      res.detail = "phi is not injective: S tiles " +
                   std::to_string(it->second) + " and " + std::to_string(s) +
                   " share a block";
      return res;
    }
  }

  // Bullet 1: phi-images of S-tilings of small windows are valid T-tilings.
  for (auto [sw, sh] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    SolveResult sr = solve_region(S, sw, sh, nullptr,
                                  SolveMode::enumerate_all, budget);
    if (sr.cap_exceeded) {
      res.budget_exceeded = true;
      res.detail = "budget exceeded enumerating S-tilings of " +
                   std::to_string(sw) + "x" + std::to_string(sh);
      return res;
    }
    for (const Tiling& st : sr.tilings) {
      Tiling img;
      img.width = sw * N;
      img.height = sh * N;
      img.cells.assign(static_cast<std::size_t>(img.width) * img.height, -1);
      for (int Y = 0; Y < img.height; ++Y)
        for (int X = 0; X < img.width; ++X) {
          const int s = st.cells[static_cast<std::size_t>(Y / N) * sw + X / N];
          img.cells[static_cast<std::size_t>(Y) * img.width + X] =
              phi.phi[s][static_cast<std::size_t>(Y % N) * N + X % N];
        }
      if (!tiling_valid(T, img)) {
        res.detail = "bullet 1: phi-image of an S-tiling of " +
                     std::to_string(sw) + "x" + std::to_string(sh) +
                     " is not a valid T-tiling";
        return res;
      }
    }
  }

  // Bullets 2 and 3 on the (2N)x(2N) window.
  SolveResult tr = solve_region(T, 2 * N, 2 * N, nullptr,
                                SolveMode::enumerate_all, budget);
  if (tr.cap_exceeded) {
    res.budget_exceeded = true;
    res.detail = "budget exceeded enumerating T-tilings of the (2N)x(2N) "
                 "window";
    return res;
  }
  for (std::size_t ti = 0; ti < tr.tilings.size(); ++ti) {
    const Tiling& tt = tr.tilings[ti];
    auto block_tile = [&](int bx, int by, int ox, int oy) {
      // S-tile index of the N x N block whose lower-left T-cell is
      // (ox + bx*N, oy + by*N), or -1 when it is not in phi's image.
      std::vector<int> block(static_cast<std::size_t>(N) * N);
      for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i)
          block[static_cast<std::size_t>(j) * N + i] =
              tt.cells[static_cast<std::size_t>(oy + by * N + j) * tt.width +
                       (ox + bx * N + i)];
      auto it = image.find(block);
      return it == image.end() ? -1 : it->second;
    };
    int good_ox = -1, good_oy = -1, ngood = 0;
    for (int ox = 0; ox < N; ++ox)
      for (int oy = 0; oy < N; ++oy) {
        const int bw = ox == 0 ? 2 : 1;  // fully contained blocks per axis
        const int bh = oy == 0 ? 2 : 1;
        bool all = true;
        for (int by = 0; by < bh && all; ++by)
          for (int bx = 0; bx < bw && all; ++bx)
            all = block_tile(bx, by, ox, oy) >= 0;
        if (all) {
          ++ngood;
          good_ox = ox;
          good_oy = oy;
        }
      }
    if (ngood != 1) {
      res.detail = "bullet 2: T-tiling " + std::to_string(ti) + " admits " +
                   std::to_string(ngood) + " block divisions (want 1)";
      return res;
    }
    // Bullet 3: the decoded grid of full blocks is a valid S-tiling.
    const int bw = good_ox == 0 ? 2 : 1;
    const int bh = good_oy == 0 ? 2 : 1;
    Tiling dec;
    dec.width = bw;
    dec.height = bh;
    dec.cells.assign(static_cast<std::size_t>(bw) * bh, -1);
    for (int by = 0; by < bh; ++by)
      for (int bx = 0; bx < bw; ++bx)
        dec.cells[static_cast<std::size_t>(by) * bw + bx] =
            block_tile(bx, by, good_ox, good_oy);
    if (!tiling_valid(S, dec)) {
      res.detail = "bullet 3: decoded block grid of T-tiling " +
                   std::to_string(ti) + " at offset " +
                   cell_name(good_ox, good_oy) + " is not a valid S-tiling";
      return res;
    }
  }

  res.ok = true;
  res.detail = "pass";
  return res;
}

WangTileset single_tile_tileset() {
  WangTileset s;
  s.colors = {"c"};
  s.tiles.push_back(WangTile{0, 0, 0, 0, false});
  return s;
}

WangTileset coordinate_tileset(int N) {
  if (N < 2) throw std::invalid_argument("coordinate_tileset: N must be >= 2");
  WangTileset t;
  // Horizontal colors h<p>_<q> live on E/W edges, vertical v<p>_<q> on N/S;
  // both carry the full coordinate pair so neighbours agree on the
  // orthogonal coordinate too.
  auto hname = [](int p, int q) {
    return "h" + std::to_string(p) + "_" + std::to_string(q);
  };
  auto vname = [](int p, int q) {
    return "v" + std::to_string(p) + "_" + std::to_string(q);
  };
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p) t.colors.push_back(hname(p, q));
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p) t.colors.push_back(vname(p, q));
  auto hidx = [&](int p, int q) { return q * N + p; };
  auto vidx = [&](int p, int q) { return N * N + q * N + p; };
  for (int q = 0; q < N; ++q)
    for (int p = 0; p < N; ++p) {
      WangTile tile;
      tile.w = hidx(p, q);
      tile.e = hidx((p + 1) % N, q);
      tile.s = vidx(p, q);
      tile.n = vidx(p, (q + 1) % N);
      t.tiles.push_back(tile);
    }
  t.validate();
  return t;
}

SimulationMap coordinate_simulation(int N) {
  SimulationMap m;
  m.N = N;
  std::vector<int> block(static_cast<std::size_t>(N) * N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i)
      block[static_cast<std::size_t>(j) * N + i] = j * N + i;
  m.phi.push_back(std::move(block));
  return m;
}

}  // namespace seasq
