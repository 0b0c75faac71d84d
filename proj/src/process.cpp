#include "ribbon/process.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbon {

bool InitialSegment::contains(int w) const {
  return std::find(labels.begin(), labels.end(), w) != labels.end();
}

int InitialSegment::last() const { return labels.back(); }

int InitialSegment::max_label() const {
  return *std::max_element(labels.begin(), labels.end());
}

CandidateSets candidate_core(int n, long N, const std::vector<std::uint8_t>& in_x,
                             bool x_empty, long w_last, long max_x) {
  CandidateSets out;
  if (x_empty) {
    for (long w = 0; w < std::min<long>(n, N); ++w)
      out.c_bar.push_back(static_cast<int>(w));
  } else {
    const long lo = std::max<long>(0, w_last - n + 1);
    const long hi = std::min<long>(N - 1, max_x + n);
    for (long w = lo; w <= hi; ++w) {
      if (w < static_cast<long>(in_x.size()) && in_x[w]) continue;
      if (w - n >= 0 && (w - n >= static_cast<long>(in_x.size()) || !in_x[w - n]))
        continue;
      out.c_bar.push_back(static_cast<int>(w));
    }
  }
  for (std::size_t i = 0; i < out.c_bar.size(); ++i) {
    if (i > 0 && out.c_bar[i] - out.c_bar[i - 1] >= n) break;
    out.c.push_back(out.c_bar[i]);
  }
  return out;
}

CandidateSets candidate_sets(const InitialSegment& seg) {
  std::vector<std::uint8_t> in_x(seg.N, 0);
  for (int w : seg.labels) in_x[w] = 1;
  if (seg.labels.empty())
    return candidate_core(seg.n, seg.N, in_x, true, 0, 0);
  return candidate_core(seg.n, seg.N, in_x, false, seg.last(), seg.max_label());
}

InitialSegment declare(const InitialSegment& seg, int w) {
  const CandidateSets cs = candidate_sets(seg);
  if (std::find(cs.c.begin(), cs.c.end(), w) == cs.c.end())
    throw std::invalid_argument("not a valid leftmost tile");
  InitialSegment next = seg;
  next.labels.push_back(w);
  return next;
}

bool is_valid_segment(int n, long N, const std::vector<int>& labels) {
  InitialSegment seg = InitialSegment::empty(n, N);
  std::vector<std::uint8_t> in_x(N, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int w = labels[i];
    if (w < 0 || w >= N || in_x[w]) return false;
    const CandidateSets cs = candidate_sets(seg);
    if (std::find(cs.c.begin(), cs.c.end(), w) == cs.c.end()) return false;
    seg.labels.push_back(w);
    in_x[w] = 1;
  }
  return true;
}

namespace {

struct SequenceSearch {
  int n;
  long N;
  std::vector<std::uint8_t> in_x;
  std::vector<int> stack;
  long max_x = 0;

  BigInt count(long depth, long w_last) {
    if (depth == N) return 1;
    const CandidateSets cs =
        candidate_core(n, N, in_x, depth == 0, w_last, max_x);
    BigInt total = 0;
    for (int w : cs.c) {
      in_x[w] = 1;
      const long saved = max_x;
      max_x = std::max<long>(max_x, w);
      total += count(depth + 1, w);
      max_x = saved;
      in_x[w] = 0;
    }
    return total;
  }

  void collect(long depth, long w_last, std::vector<std::vector<int>>* out) {
    if (depth == N) {
      out->push_back(stack);
      return;
    }
    const CandidateSets cs =
        candidate_core(n, N, in_x, depth == 0, w_last, max_x);
    for (int w : cs.c) {
      in_x[w] = 1;
      stack.push_back(w);
      const long saved = max_x;
      max_x = std::max<long>(max_x, w);
      collect(depth + 1, w, out);
      max_x = saved;
      stack.pop_back();
      in_x[w] = 0;
    }
  }
};

}  // namespace

BigInt count_by_leftmost(int n, long N) {
  SequenceSearch s{n, N, std::vector<std::uint8_t>(std::max<long>(N, 1), 0), {}};
  return s.count(0, 0);
}

std::vector<std::vector<int>> enumerate_sequences(int n, long N) {
  SequenceSearch s{n, N, std::vector<std::uint8_t>(std::max<long>(N, 1), 0), {}};
  std::vector<std::vector<int>> out;
  s.collect(0, 0, &out);
  return out;
}

std::vector<int> return_op(const std::vector<int>& seq) {
  auto it = std::find(seq.begin(), seq.end(), 0);
  if (it == seq.end()) throw std::invalid_argument("sequence has no 0");
  std::vector<int> out;
  out.reserve(seq.size());
  out.push_back(0);
  for (int w : seq)
    if (w != 0) out.push_back(w);
  return out;
}

std::vector<int> deduction_op(const std::vector<int>& seq) {
  if (seq.empty() || seq.front() != 0)
    throw std::invalid_argument("sequence does not start with 0");
  std::vector<int> out;
  out.reserve(seq.size() - 1);
  for (std::size_t i = 1; i < seq.size(); ++i) out.push_back(seq[i] - 1);
  return out;
}

std::vector<int> phi(const std::vector<int>& seq, int n) {
  if (seq.empty()) return {0};
  const int max_w = *std::max_element(seq.begin(), seq.end());
  const long N_work = max_w + 2L * n + 2;
  ProfileReplay replay(n, N_work);
  for (int w : seq) {
    if (!replay.place(w))
      throw std::invalid_argument("sequence is not a tiling sequence");
  }
  const long d = replay.full_columns();
  std::vector<int> out;
  for (int w : seq)
    if (w >= d) out.push_back(w - static_cast<int>(d));
  std::sort(out.begin(), out.end());
  if (out.empty()) out.push_back(0);
  return out;
}

std::vector<int> essential_sequence(const std::vector<int>& labels, int n) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int w : sorted)
    if (!std::binary_search(sorted.begin(), sorted.end(), w + n))
      out.push_back(w);
  return out;
}

bool has_connectivity(const std::vector<int>& increasing, int n) {
  for (std::size_t i = 1; i < increasing.size(); ++i)
    if (increasing[i] - increasing[i - 1] >= n) return false;
  return true;
}

ProfileReplay::ProfileReplay(int n, long N) : n_(n), N_(N), offsets_(n, 0) {}

bool ProfileReplay::place(int label) { return place(label, nullptr); }

bool ProfileReplay::place(int label, RibbonTile* tile_out) {
  if (label < 0 || label >= N_) return false;
  std::vector<int> chosen_rows;
  chosen_rows.reserve(n_);
  const auto roll_back = [&] {
    for (int row : chosen_rows) offsets_[row] -= 1;
    return false;
  };
  Square prev{-1, -1};
  RibbonTile tile;
  for (int k = 0; k < n_; ++k) {
    const long l = label + k;
    int row = -1;
    for (int y = std::min<long>(n_ - 1, l); y >= 0; --y) {
      const long x = l - y;
      if (x >= offsets_[y] && x < N_) {
        row = y;
        break;
      }
    }
    if (row < 0) return roll_back();
    const long x = l - row;
    if (x != offsets_[row]) return roll_back();  // would split the row
    const Square sq{static_cast<int>(x), row};
    if (k == 0) {
      tile.start = sq;
    } else {
      const bool right = sq.y == prev.y && sq.x == prev.x + 1;
      const bool up = sq.x == prev.x && sq.y == prev.y + 1;
      if (!right && !up) return roll_back();
      tile.steps.push_back(right ? Step::Right : Step::Up);
    }
    prev = sq;
    chosen_rows.push_back(row);
    offsets_[row] += 1;
  }
  if (tile_out) *tile_out = std::move(tile);
  return true;
}

long ProfileReplay::full_columns() const {
  return *std::min_element(offsets_.begin(), offsets_.end());
}

RegionProfile ProfileReplay::profile(long tiles_remaining) const {
  RegionProfile p;
  p.n = n_;
  p.offsets = offsets_;
  p.length = tiles_remaining;
  return p;
}

RegionProfile residual_profile(const InitialSegment& seg) {
  ProfileReplay replay(seg.n, seg.N);
  for (int w : seg.labels) {
    if (!replay.place(w))
      throw std::logic_error("declared labels do not replay on the strip");
  }
  return replay.profile(seg.N - static_cast<long>(seg.labels.size()));
}

}  // namespace ribbon
