#pragma once
/*
 * Wang tilesets, a finite-region tiling solver, and the zoom-N simulation
 * checker.
 *
 * A tileset is a list of tiles, each a 4-tuple of edge colors
 * (north, east, south, west) over an interned color list, with an optional
 * anchor flag.  A tiling of a w x h region assigns a tile to every cell so
 * that neighbouring tiles show the same color on their shared edge, plus
 * optional fixed colors on the region boundary and per-cell anchor
 * requirements.
 *
 * The solver is a backtracking search with forward checking on edge colors:
 * cells are filled in row-major order from the bottom row, candidate tiles
 * come from a (west color, south color) lookup table, and tiles are tried in
 * input order, so find/count/enumerate results are deterministic.  Count and
 * enumerate are bounded by an explicit cap and report truncation instead of
 * silently clipping.  The parallel variant splits on the first cell's
 * candidates and merges per-branch results in input order, giving the same
 * observable output as the serial reference.
 *
 * check_simulation verifies, on finite windows, the three bullets that make
 * phi: S -> T^(N^2) a zoom-N simulation: (1) phi-images of S-tilings are
 * valid T-tilings, (2) every T-tiling of a (2N)x(2N) window cuts uniquely
 * into N x N blocks from phi's image, and (3) the decoded block grid is a
 * valid S-tiling.  The finite-window verdict refutes broken maps; it is not
 * a proof of whole-plane simulation.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace seasq {

struct WangTile {
  int n = 0, e = 0, s = 0, w = 0;  // color indices
  bool anchor = false;
  auto operator<=>(const WangTile&) const = default;
};

struct WangTileset {
  std::vector<std::string> colors;
  std::vector<WangTile> tiles;

  int color_index(const std::string& name) const;  // -1 when absent

  // Enforces: nonempty color names, distinct names, color indices in range,
  // distinct (n,e,s,w) 4-tuples.  Throws std::runtime_error.
  void validate() const;
};

// Text form (exactly ntiles tile lines; embeddable in a larger stream):
//   tileset <ncolors> <ntiles>
//   <color token>                      (ncolors lines)
//   tile <id> N=<tok> E=<tok> S=<tok> W=<tok> [anchor]   (ids 0,1,...)
WangTileset parse_tileset(std::istream& in);
WangTileset parse_tileset(const std::string& text);
std::string render_tileset(const WangTileset& ts);

// Fixed colors on the outer boundary of the region.  Each vector is either
// empty (unconstrained side) or has one entry per cell along that side
// (north/south: width entries indexed by x; east/west: height entries
// indexed by y); nullopt entries are unconstrained.
struct Boundary {
  std::vector<std::optional<int>> north, south, east, west;
};

enum class AnchorReq : std::uint8_t { any, must, must_not };

// Per-cell anchor requirements, row-major from the bottom row; empty = no
// requirements.
struct AnchorRule {
  std::vector<AnchorReq> cells;
};

enum class SolveMode { find, count, enumerate_all };

struct Tiling {
  int width = 0, height = 0;
  std::vector<int> cells;  // tile indices, row-major from the bottom row
  bool operator==(const Tiling&) const = default;
};

struct SolveResult {
  bool unsat = false;         // find mode: no tiling exists
  bool cap_exceeded = false;  // count/enumerate: more results than the cap
  std::optional<Tiling> tiling;  // find mode
  std::uint64_t count = 0;       // count mode (clamped to cap when exceeded)
  std::vector<Tiling> tilings;   // enumerate mode, at most cap entries
};

SolveResult solve_region(const WangTileset& ts, int width, int height,
                         const Boundary* boundary, SolveMode mode,
                         std::uint64_t cap = 1000000,
                         const AnchorRule* anchors = nullptr,
                         bool parallel = true);

// Serial reference implementation with identical observable behaviour; the
// parallel variant is tested against it.
SolveResult solve_region_serial(const WangTileset& ts, int width, int height,
                                const Boundary* boundary, SolveMode mode,
                                std::uint64_t cap = 1000000,
                                const AnchorRule* anchors = nullptr);

// Adjacency + boundary check of a complete assignment (anchors are placement
// rules for the solver, not part of validity).
bool tiling_valid(const WangTileset& ts, const Tiling& t,
                  const Boundary* boundary = nullptr);

// phi: S-tile index -> N*N T-tile indices (row-major from the bottom row of
// the block).
struct SimulationMap {
  int N = 1;
  std::vector<std::vector<int>> phi;
};

struct SimCheckResult {
  bool ok = false;
  bool budget_exceeded = false;
  std::string detail;  // first failure, or the truncation notice
};

// Verify the three simulation bullets on finite windows.  budget caps every
// internal enumeration; exceeding it is reported, not silently ignored.
SimCheckResult check_simulation(const WangTileset& T, const WangTileset& S,
                                const SimulationMap& phi,
                                std::uint64_t budget = 1000000);

// The worked example: S has a single tile with all four edges the same
// color; T has N^2 coordinate tiles (p,q) whose edge colors carry both
// coordinates mod N, so every T-tiling is a translate of the coordinate
// grid and cuts uniquely.
WangTileset single_tile_tileset();
WangTileset coordinate_tileset(int N);
SimulationMap coordinate_simulation(int N);

}  // namespace seasq
