#pragma once

// Big-integer strip counts driven by the transfer-matrix recurrence,
// seeded from the geometric oracle.

#include "ribbon/transfer.hpp"

namespace ribbon {

struct CountVector {
  int n = 2;
  long N = 0;  // strip length the leading block refers to
  std::vector<BigInt> values;  // n! entries, matrix order
};

// Entries f_{F_i}(N0 - j) at the base length N0 = n + 2, each counted
// by the oracle on the fundamental region profile; malformed or
// untileable regions count 0.
CountVector base_vector(int n, const FundamentalCatalog& cat);
CountVector base_vector(int n);

// One exact matrix-vector step: f(N+1) = A f(N).
CountVector advance(const CountVector& v, const TransferMatrix& a);

class CountingEngine {
 public:
  explicit CountingEngine(int n);

  const TransferMatrix& matrix() const { return a_; }
  long base_length() const { return n_ + 2; }

  // f_N of the n-by-N strip. The recurrence is checked against the
  // oracle on the window (N0, N0+3] once, before any larger length is
  // reported; a mismatch throws std::logic_error.
  BigInt count(long N);

  bool self_consistent();

 private:
  int n_;
  TransferMatrix a_;
  CountVector base_;
  CountVector cur_;
  bool checked_ = false;
  bool ok_ = false;
};

BigInt count_strip(int n, long N);

}  // namespace ribbon
