#include "ribbon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace ribbon {

double log_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log_big: value must be positive");
  if (v < BigInt(1) << 900) return std::log(v.convert_to<double>());
  const unsigned bits = boost::multiprecision::msb(v);
  const BigInt top = v >> (bits - 52);
  return std::log(top.convert_to<double>()) + (bits - 52) * std::log(2.0);
}

int level(const Square& s) { return s.x + s.y; }

int color(const Square& s, int n) {
  const int m = (s.x + s.y) % n;
  return m < 0 ? m + n : m;
}

std::vector<Square> RibbonTile::squares() const {
  std::vector<Square> out;
  out.reserve(steps.size() + 1);
  Square cur = start;
  out.push_back(cur);
  for (Step st : steps) {
    if (st == Step::Right)
      cur.x += 1;
    else
      cur.y += 1;
    out.push_back(cur);
  }
  return out;
}

bool validate_tile(const RibbonTile& t, int n) {
  if (n < 2 || static_cast<int>(t.steps.size()) != n - 1) return false;
  std::vector<bool> seen(n, false);
  for (const Square& s : t.squares()) {
    const int c = color(s, n);
    if (seen[c]) return false;  // cannot happen for up/right steps
    seen[c] = true;
  }
  return true;
}

RegionProfile RegionProfile::strip(int n, long N) {
  RegionProfile p;
  p.n = n;
  p.offsets.assign(n, 0);
  p.length = N;
  return p;
}

long RegionProfile::right_edge() const {
  if (offsets.empty()) return -1;
  const long total = length * n + std::accumulate(offsets.begin(), offsets.end(), 0L);
  if (total % rows() != 0) return -1;
  const long edge = total / rows();
  for (long off : offsets)
    if (off < 0 || off > edge) return -1;
  return edge;
}

bool RegionProfile::well_formed() const {
  return n >= 2 && length >= 0 && right_edge() >= 0;
}

std::string RegionProfile::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["offsets"] = offsets;
  j["length"] = length;
  return j.dump();
}

RegionProfile RegionProfile::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RegionProfile p;
  p.n = j.at("n").get<int>();
  p.offsets = j.at("offsets").get<std::vector<long>>();
  p.length = j.at("length").get<long>();
  return p;
}

CellGrid CellGrid::from_profile(const RegionProfile& region) {
  const long edge = region.right_edge();
  if (edge < 0) throw std::invalid_argument("malformed region profile");
  CellGrid g;
  g.rows = region.rows();
  g.cols = edge;
  g.covered.assign(g.rows * g.cols, 0);
  for (int y = 0; y < g.rows; ++y)
    for (long x = 0; x < region.offsets[y]; ++x) g.set_covered(x, y, true);
  return g;
}

long CellGrid::uncovered_area() const {
  return std::count(covered.begin(), covered.end(), 0);
}

namespace {

// State key for memoized counting. Every tile starts at the pivot of
// the moment it was placed, and the pivot level never decreases, so all
// tiled cells sit in levels below pivot + n. Relative to the fixed
// grid, the search state is therefore the pivot level plus the covered
// pattern of the n-level diagonal band starting there: everything below
// the band is covered, everything above it is untouched.
struct BandState {
  std::uint32_t level = 0;
  std::uint64_t lo = 0, hi = 0;
  friend bool operator==(const BandState&, const BandState&) = default;
};

struct BandHash {
  std::size_t operator()(const BandState& s) const {
    std::uint64_t h = s.lo;
    h = h * 0x9e3779b97f4a7c15ULL + s.hi;
    h = h * 0x9e3779b97f4a7c15ULL + s.level;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

// Backtracking search over the lowest-level, lowest-x uncovered square.
struct Search {
  int n;
  CellGrid grid;
  int max_level;
  bool memoize;
  std::unordered_map<BandState, BigInt, BandHash> memo;

  Search(int n_in, CellGrid grid_in)
      : n(n_in),
        grid(std::move(grid_in)),
        max_level(grid.rows + static_cast<int>(grid.cols) - 2),
        memoize(static_cast<long>(n) * grid.rows <= 128) {}

  // Pivot: minimal (level, x) uncovered square at level >= lmin, or
  // x = -1 when the region is fully covered.
  Square pivot_from(int lmin) const {
    for (int l = lmin; l <= max_level; ++l) {
      for (int y = std::min(grid.rows - 1, l); y >= 0; --y) {
        const long x = static_cast<long>(l) - y;
        if (x >= grid.cols) break;
        if (!grid.cell_covered(x, y)) return {static_cast<int>(x), y};
      }
    }
    return {-1, -1};
  }

  BandState band_state(int pivot_level) const {
    BandState s;
    s.level = static_cast<std::uint32_t>(pivot_level);
    int bit = 0;
    for (int k = 0; k < n; ++k) {
      const int l = pivot_level + k;
      for (int y = 0; y < grid.rows; ++y, ++bit) {
        const long x = static_cast<long>(l) - y;
        if (x < 0 || x >= grid.cols || !grid.cell_covered(x, y)) continue;
        if (bit < 64)
          s.lo |= 1ULL << bit;
        else
          s.hi |= 1ULL << (bit - 64);
      }
    }
    return s;
  }

  bool tile_from_mask(const Square& at, unsigned mask, RibbonTile* out) const {
    RibbonTile t;
    t.start = at;
    t.steps.reserve(n - 1);
    Square cur = at;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        cur.y += 1;
        t.steps.push_back(Step::Up);
      } else {
        cur.x += 1;
        t.steps.push_back(Step::Right);
      }
      if (cur.y >= grid.rows || cur.x >= grid.cols || grid.cell_covered(cur.x, cur.y))
        return false;
    }
    *out = std::move(t);
    return true;
  }

  void mark(const RibbonTile& t, bool v) {
    for (const Square& s : t.squares()) grid.set_covered(s.x, s.y, v);
  }

  BigInt count(int lmin) {
    const Square at = pivot_from(lmin);
    if (at.x < 0) return 1;
    const int l = level(at);
    BandState key;
    if (memoize) {
      key = band_state(l);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    BigInt total = 0;
    RibbonTile t;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      if (!tile_from_mask(at, mask, &t)) continue;
      mark(t, true);
      total += count(l);
      mark(t, false);
    }
    if (memoize) memo.emplace(key, total);
    return total;
  }

  void enumerate(Tiling* current, std::vector<Tiling>* out, std::size_t limit) {
    if (out->size() >= limit) return;
    const Square at = pivot_from(0);
    if (at.x < 0) {
      out->push_back(*current);
      return;
    }
    RibbonTile t;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      if (out->size() >= limit) return;
      if (!tile_from_mask(at, mask, &t)) continue;
      mark(t, true);
      current->push_back(t);
      enumerate(current, out, limit);
      current->pop_back();
      mark(t, false);
    }
  }
};

}  // namespace

// Level-sweep tiling count. A ribbon tile occupies one square per level
// for n consecutive levels, moving from (x, y) to (x+1, y) or (x, y+1);
// sweeping levels upward, the full search state is the age of the tile
// occupying each row's square at the current level (4 bits per row).
// This is the same recursion as the backtracking search with the tile
// commitments deferred one level at a time, which collapses the state
// space; enumerate_tilings keeps the explicit backtracking order.
struct LevelSweep {
  const CellGrid& grid;
  const int n;
  const int max_level;
  // Alive threads after the current level: per row, squares covered so
  // far (1..n-1), or 0 when the row's square is free of alive tiles.
  std::unordered_map<std::uint64_t, BigInt> cur;
  std::unordered_map<std::uint64_t, BigInt> next;

  LevelSweep(const CellGrid& g, int n_in)
      : grid(g), n(n_in), max_level(g.rows + static_cast<int>(g.cols) - 2) {}

  bool in_region(long x, int y) const {
    return y >= 0 && y < grid.rows && x >= 0 && x < grid.cols &&
           !grid.cell_covered(x, y);
  }

  static int age_of(std::uint64_t s, int row) { return (s >> (4 * row)) & 0xf; }

  // Distribute the level-(l+1) squares among upward movers, rightward
  // movers and fresh tile starts, row by row. `pending` marks a thread
  // in the previous row that still has to move up into this row.
  void expand(std::uint64_t s, const BigInt& cnt, int l1, int row,
              bool pending, std::uint64_t acc) {
    if (row == grid.rows) {
      if (!pending) next[acc] += cnt;
      return;
    }
    const bool cell = in_region(static_cast<long>(l1) - row, row);
    const int here = age_of(s, row);
    if (pending) {
      if (!cell) return;  // the upward mover has nowhere to go
      const int age = age_of(s, row - 1) + 1;
      const std::uint64_t occ =
          age < n ? acc | (static_cast<std::uint64_t>(age) << (4 * row)) : acc;
      expand(s, cnt, l1, row + 1, here != 0, occ);
      return;
    }
    if (here != 0) {
      // Move right into this row's square.
      if (cell)
        expand(s, cnt, l1, row + 1, false,
               here + 1 < n
                   ? acc | (static_cast<std::uint64_t>(here + 1) << (4 * row))
                   : acc);
      // Or move up, leaving this square to a fresh tile when it exists.
      if (cell && n > 1)
        expand(s, cnt, l1, row + 1, true,
               acc | (1ULL << (4 * row)));
      else if (!cell)
        expand(s, cnt, l1, row + 1, true, acc);
      return;
    }
    if (cell)
      expand(s, cnt, l1, row + 1, false,
             n > 1 ? acc | (1ULL << (4 * row)) : acc);
    else
      expand(s, cnt, l1, row + 1, false, acc);
  }

  BigInt run() {
    cur[0] = 1;
    // Level 0 squares are seeded by the same expansion with no threads.
    for (int l = 0; l <= max_level; ++l) {
      next.clear();
      for (const auto& [s, cnt] : cur) expand(s, cnt, l, 0, false, 0);
      std::swap(cur, next);
      if (cur.empty()) return 0;
    }
    const auto it = cur.find(0);
    return it == cur.end() ? 0 : it->second;
  }
};

BigInt oracle_count_grid(const CellGrid& grid, int n) {
  if (grid.uncovered_area() % n != 0) return 0;
  if (n <= 16 && grid.rows <= 16) return LevelSweep(grid, n).run();
  Search s(n, grid);
  return s.count(0);
}

std::vector<Tiling> enumerate_tilings_grid(const CellGrid& grid, int n,
                                           std::size_t limit) {
  std::vector<Tiling> out;
  if (grid.uncovered_area() % n != 0) return out;
  Search s(n, grid);
  Tiling current;
  s.enumerate(&current, &out, limit);
  return out;
}

BigInt oracle_count(const RegionProfile& region) {
  if (!region.well_formed()) return 0;  // untileable by construction
  if (region.length == 0) return 1;     // empty region
  return oracle_count_grid(CellGrid::from_profile(region), region.n);
}

BigInt oracle_count_rect(int M, long N, int n) {
  if (M % n != 0 && N % n != 0)
    throw std::invalid_argument("no ribbon tiling exists for this shape");
  RegionProfile p;
  p.n = n;
  p.offsets.assign(M, 0);
  p.length = static_cast<long>(M) * N / n;
  return oracle_count(p);
}

std::vector<Tiling> enumerate_tilings(const RegionProfile& region,
                                      std::size_t limit) {
  if (!region.well_formed() || region.area() == 0) {
    std::vector<Tiling> out;
    if (region.well_formed()) out.push_back({});
    return out;
  }
  return enumerate_tilings_grid(CellGrid::from_profile(region), region.n, limit);
}

}  // namespace ribbon
