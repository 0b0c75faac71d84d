#pragma once

// Grid-level representation of squares, ribbon tiles and strip regions,
// plus an exhaustive backtracking oracle that counts tilings directly
// from the geometry.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ribbon/bigint.hpp"

namespace ribbon {

struct Square {
  int x = 0;  // column
  int y = 0;  // row; row 0 is the bottom row of the strip
  friend bool operator==(const Square&, const Square&) = default;
};

// level l = x + y
int level(const Square& s);

// color c = (x + y) mod n, in [0, n)
int color(const Square& s, int n);

enum class Step : std::uint8_t { Right, Up };

// An order-n ribbon tile: n edge-connected squares, each step going up
// or to the right of its predecessor.
struct RibbonTile {
  Square start;             // the lowest-level square
  std::vector<Step> steps;  // n - 1 moves

  std::vector<Square> squares() const;
  int tile_level() const { return start.x + start.y; }
  friend bool operator==(const RibbonTile&, const RibbonTile&) = default;
};

// True iff the tile is a well-formed order-n ribbon: n-1 steps and one
// square of each color (automatic given the step structure; asserted).
bool validate_tile(const RibbonTile& t, int n);

// A residual region of a strip: in row y, the untiled part is the
// column range [offsets[y], right_edge). `length` is the tile count.
// The row count is offsets.size(); it equals n for strip regions but
// may differ (oracle_count_rect uses M rows).
struct RegionProfile {
  int n = 2;
  std::vector<long> offsets;
  long length = 0;

  static RegionProfile strip(int n, long N);

  int rows() const { return static_cast<int>(offsets.size()); }
  long area() const { return length * n; }
  // Common right edge; -1 if no flat right edge is consistent with the
  // offsets and length (malformed region).
  long right_edge() const;
  bool well_formed() const;

  std::string to_json() const;
  static RegionProfile from_json(const std::string& text);

  friend bool operator==(const RegionProfile&, const RegionProfile&) = default;
};

using Tiling = std::vector<RibbonTile>;

// Exact number of order-n ribbon tilings of the region: the recursion
// over the lowest-level (then lowest-x) uncovered square, evaluated as
// a level sweep with the per-tile commitments deferred one level at a
// time. Untileable-by-construction regions (malformed profile) count 0.
BigInt oracle_count(const RegionProfile& region);

// Count for an M-by-N rectangle. Throws std::invalid_argument when
// neither M nor N is divisible by n (no ribbon tiling exists).
BigInt oracle_count_rect(int M, long N, int n);

// All tilings in backtracking order, truncated at `limit`.
std::vector<Tiling> enumerate_tilings(const RegionProfile& region,
                                      std::size_t limit = SIZE_MAX);

// Explicit cell grid for regions that are not right-open profiles
// (used by boundary-sequence checks and the renderer).
struct CellGrid {
  int rows = 0;
  long cols = 0;
  std::vector<std::uint8_t> covered;  // rows*cols, row-major

  static CellGrid from_profile(const RegionProfile& region);
  bool cell_covered(long x, int y) const { return covered[y * cols + x] != 0; }
  void set_covered(long x, int y, bool v) { covered[y * cols + x] = v ? 1 : 0; }
  long uncovered_area() const;
};

BigInt oracle_count_grid(const CellGrid& grid, int n);
std::vector<Tiling> enumerate_tilings_grid(const CellGrid& grid, int n,
                                           std::size_t limit = SIZE_MAX);

}  // namespace ribbon
