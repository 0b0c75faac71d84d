#pragma once

// Tiling transitions between fundamental regions and the transfer
// matrix A_n, including the inclusion-exclusion sign corrections.

#include <utility>
#include <vector>

#include "ribbon/fundamental.hpp"

namespace ribbon {

struct CandidateComparison {
  std::vector<int> c_after;  // C_{[F,J]}
  std::vector<int> c_zero;   // C^0_{F'}
  std::vector<int> surplus;  // C^0_{F'} \ C_{[F,J]}
};

struct TilingTransition {
  FundamentalSequence source;
  std::vector<int> path;  // J, including corrective labels
  FundamentalSequence target;
  int sign_power = 0;
  int size_shift = 0;  // |J|, in [1, n]
  bool deducting = false;  // Case (1): phi applied with d full columns
  long d = 0;              // full columns at the deducting moment
  CandidateComparison cmp;  // populated for Case (2) arrivals
};

// Candidate set of the first leftmost tile in R_F: Lemma 6 with X = F
// and w_X forced to 0.
CandidateSets candidate_zero(const FundamentalSequence& f, int n);

// All maximal leftmost paths from R_F until a fundamental region is
// first reached, plus the corrective transitions spawned by Case-(2)
// surpluses with the sign switched.
std::vector<TilingTransition> transitions_from(const FundamentalSequence& f,
                                               int n,
                                               const FundamentalCatalog& cat);

struct TransferMatrix {
  int n = 2;
  long dim = 0;  // n!
  FundamentalCatalog catalog;
  // Sparse rows: (column, value) pairs sorted by column.
  std::vector<std::vector<std::pair<long, int>>> rows;

  int entry(long r, long c) const;
  long block() const { return static_cast<long>(catalog.size()); }
};

TransferMatrix build_transfer_matrix(int n);

// Entries in {-1,0,1}; upper-right block the identity, lower-left block
// the identity, lower-right block zero.
bool check_structure(const TransferMatrix& a);

}  // namespace ribbon
