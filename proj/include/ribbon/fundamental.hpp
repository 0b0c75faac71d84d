#pragma once

// Fundamental sequences, boundary sequences and the bijection between
// them.

#include <map>
#include <vector>

#include "ribbon/process.hpp"

namespace ribbon {

// Strictly increasing labels; the canonical empty sequence is [0].
using FundamentalSequence = std::vector<int>;

// n levels b_0 = 0 < b_1 < ... < b_{n-1} of the flush horizontal tiles.
using BoundarySequence = std::vector<int>;

struct FundamentalCatalog {
  int n = 2;
  std::vector<FundamentalSequence> sequences;  // by length, then lex

  std::size_t size() const { return sequences.size(); }
  // Position in the catalog, or -1 when absent.
  long index_of(const FundamentalSequence& f) const;

  std::map<FundamentalSequence, long> index;
};

// All (n-1)! fundamental sequences, found by expanding initial segments
// breadth-first and simplifying through phi as soon as 0 is declared.
FundamentalCatalog generate_fundamentals(int n);

// Number of declared labels of F; the canonical [0] carries none.
long fund_weight(const FundamentalSequence& f);

// The residual region R_F(m): offsets after replaying F, with m tiles
// remaining.
RegionProfile fundamental_region(const FundamentalSequence& f, int n, long m);

// Boundary sequence of R_F: the increasing levels of the n horizontal
// 1-by-n tiles flush against the left boundary.
BoundarySequence sigma(const FundamentalSequence& f, int n);

// All valid boundary sequences: b_0 = 0, consecutive gaps in [1, n],
// residues mod n pairwise distinct.
std::vector<BoundarySequence> generate_boundary_sequences(int n);

// Flush-tile levels of the residual region of an initial segment that
// has not yet declared 0. Throws std::invalid_argument otherwise.
std::vector<int> quasi_boundary(const InitialSegment& seg);

}  // namespace ribbon
