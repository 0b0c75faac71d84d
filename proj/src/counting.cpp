#include "ribbon/counting.hpp"

#include <stdexcept>

namespace ribbon {

CountVector base_vector(int n, const FundamentalCatalog& cat) {
  const long N0 = n + 2;
  const long t = static_cast<long>(cat.size());
  CountVector v;
  v.n = n;
  v.N = N0;
  v.values.resize(t * n);
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < t; ++i) {
      const RegionProfile region =
          fundamental_region(cat.sequences[i], n, N0 - j);
      v.values[j * t + i] = oracle_count(region);
    }
  }
  return v;
}

CountVector base_vector(int n) {
  const FundamentalCatalog cat = generate_fundamentals(n);
  return base_vector(n, cat);
}

CountVector advance(const CountVector& v, const TransferMatrix& a) {
  if (static_cast<long>(v.values.size()) != a.dim)
    throw std::invalid_argument("dimension mismatch");
  CountVector out;
  out.n = v.n;
  out.N = v.N + 1;
  out.values.resize(a.dim);
  for (long r = 0; r < a.dim; ++r) {
    BigInt sum = 0;
    for (const auto& [c, val] : a.rows[r]) {
      if (val > 0)
        sum += v.values[c];
      else
        sum -= v.values[c];
    }
    out.values[r] = std::move(sum);
  }
  return out;
}

CountingEngine::CountingEngine(int n)
    : n_(n),
      a_(build_transfer_matrix(n)),
      base_(base_vector(n, a_.catalog)),
      cur_(base_) {}

bool CountingEngine::self_consistent() {
  if (checked_) return ok_;
  checked_ = true;
  CountVector v = base_;
  for (int k = 1; k <= 3; ++k) {
    v = advance(v, a_);
    if (v.values[0] != oracle_count(RegionProfile::strip(n_, v.N))) {
      ok_ = false;
      return ok_;
    }
  }
  ok_ = true;
  return ok_;
}

BigInt CountingEngine::count(long N) {
  if (N < 0) throw std::invalid_argument("negative strip length");
  if (N <= base_length())
    return oracle_count(RegionProfile::strip(n_, N));
  if (!self_consistent())
    throw std::logic_error("recurrence disagrees with the oracle");
  if (cur_.N > N) cur_ = base_;
  while (cur_.N < N) cur_ = advance(cur_, a_);
  return cur_.values[0];
}

BigInt count_strip(int n, long N) {
  if (N <= n + 2) return oracle_count(RegionProfile::strip(n, N));
  CountingEngine engine(n);
  return engine.count(N);
}

}  // namespace ribbon
