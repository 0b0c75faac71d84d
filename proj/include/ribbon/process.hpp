#pragma once

// The leftmost tiling process: candidate sets, declaration, sequence
// operators and the geometric replay that realizes residual regions.

#include <vector>

#include "ribbon/geometry.hpp"

namespace ribbon {

// A valid prefix of a tiling sequence for an n-by-N strip.
struct InitialSegment {
  int n = 2;
  long N = 0;
  std::vector<int> labels;  // declared order, no duplicates

  static InitialSegment empty(int n, long N) { return {n, N, {}}; }
  bool contains(int w) const;
  int last() const;     // w_X; requires non-empty
  int max_label() const;
};

struct CandidateSets {
  std::vector<int> c_bar;  // increasing
  std::vector<int> c;      // prefix of c_bar up to the first gap >= n
};

// Candidate labels for the next leftmost tile.
CandidateSets candidate_sets(const InitialSegment& seg);

// Declares w the next leftmost tile. Throws std::invalid_argument when
// w is not in the candidate set C ("not a valid leftmost tile").
InitialSegment declare(const InitialSegment& seg, int w);

// True iff `labels` is accepted step by step from the empty segment.
bool is_valid_segment(int n, long N, const std::vector<int>& labels);

// Number of complete tiling sequences of the n-by-N strip.
BigInt count_by_leftmost(int n, long N);

// All complete tiling sequences (small cases only).
std::vector<std::vector<int>> enumerate_sequences(int n, long N);

// zeta_0: moves the unique 0 to the front, preserving relative order.
std::vector<int> return_op(const std::vector<int>& seq);

// delta: drops a leading 0 and decrements every remaining label.
std::vector<int> deduction_op(const std::vector<int>& seq);

// phi: canonical fundamental sequence of an initial segment ending
// with 0, via d rounds of delta∘zeta_0 followed by sorting; the empty
// result is canonicalized as [0]. d is the number of full columns,
// read off the residual region.
std::vector<int> phi(const std::vector<int>& seq, int n);

// A_J = {w in J : w + n not in J}, sorted increasing.
std::vector<int> essential_sequence(const std::vector<int>& labels, int n);

// True iff all consecutive gaps of the increasing sequence are < n.
bool has_connectivity(const std::vector<int>& increasing, int n);

// Lemma-6 candidate rule for an arbitrary declared-label set given as a
// membership table; w_last may differ from the true last element (the
// transfer construction forces w_X = 0 on fundamental sequences).
CandidateSets candidate_core(int n, long N, const std::vector<std::uint8_t>& in_x,
                             bool x_empty, long w_last, long max_x);

// Geometric profile of the untiled part, by replaying the declared
// tiles greedily (each tile takes the leftmost untiled square at each
// of its n levels).
RegionProfile residual_profile(const InitialSegment& seg);

// Incremental greedy replay of declared tiles on a strip. Placements
// keep the untiled part of every row contiguous; place() returns false
// when a label cannot be realized that way.
class ProfileReplay {
 public:
  ProfileReplay(int n, long N);

  bool place(int label);
  bool place(int label, RibbonTile* tile_out);

  const std::vector<long>& offsets() const { return offsets_; }
  long full_columns() const;  // leading columns covered in every row
  int order() const { return n_; }
  long strip_length() const { return N_; }
  RegionProfile profile(long tiles_remaining) const;

 private:
  int n_;
  long N_;
  std::vector<long> offsets_;
};

}  // namespace ribbon
