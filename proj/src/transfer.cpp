#include "ribbon/transfer.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbon {

CandidateSets candidate_zero(const FundamentalSequence& f, int n) {
  const bool empty = fund_weight(f) == 0;
  const int max_w = empty ? 0 : *std::max_element(f.begin(), f.end());
  const long N_work = max_w + 2L * n + 2;
  std::vector<std::uint8_t> in_x(N_work, 0);
  if (!empty)
    for (int w : f) in_x[w] = 1;
  return candidate_core(n, N_work, in_x, empty, 0, max_w);
}

namespace {

std::vector<int> set_difference_sorted(const std::vector<int>& a,
                                       const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

struct TransitionSearch {
  int n;
  long N_work;
  const FundamentalCatalog& cat;
  FundamentalSequence F;
  std::vector<int> f_labels;  // declared labels of F; empty for [0]
  std::vector<std::uint8_t> in_x;
  std::vector<int> path;
  std::vector<TilingTransition>* out;

  std::vector<int> sorted_labels() const {
    std::vector<int> all = f_labels;
    all.insert(all.end(), path.begin(), path.end());
    std::sort(all.begin(), all.end());
    return all;
  }

  TilingTransition base_record(int sign) const {
    TilingTransition t;
    t.source = F;
    t.path = path;
    t.sign_power = sign;
    t.size_shift = static_cast<int>(path.size());
    if (t.size_shift > n)
      throw std::logic_error("transition sequence longer than the order");
    return t;
  }

  void emit_case1(int sign) {
    ProfileReplay replay(n, N_work);
    for (int w : f_labels)
      if (!replay.place(w)) throw std::logic_error("replay of F failed");
    for (int w : path)
      if (!replay.place(w)) throw std::logic_error("replay of J failed");
    const long d = replay.full_columns();
    FundamentalSequence target;
    for (int w : sorted_labels())
      if (w >= d) target.push_back(w - static_cast<int>(d));
    if (target.empty()) target.push_back(0);
    if (cat.index_of(target) < 0)
      throw std::logic_error("phi landed outside the catalog");

    TilingTransition t = base_record(sign);
    t.target = target;
    t.deducting = true;
    t.d = d;
    t.cmp.c_after = candidate_core(n, N_work, in_x, false, 0,
                                   max_label()).c;
    t.cmp.c_zero = candidate_zero(target, n).c;
    out->push_back(std::move(t));
  }

  int max_label() const {
    int m = 0;
    for (int w : f_labels) m = std::max(m, w);
    for (int w : path) m = std::max(m, w);
    return m;
  }

  void dfs(int sign, int w_last) {
    if (path.back() == 0) {
      emit_case1(sign);
      return;
    }
    const std::vector<int> sorted_all = sorted_labels();
    if (cat.index_of(sorted_all) >= 0) {
      TilingTransition t = base_record(sign);
      t.target = sorted_all;
      t.cmp.c_after =
          candidate_core(n, N_work, in_x, false, w_last, max_label()).c;
      t.cmp.c_zero = candidate_zero(sorted_all, n).c;
      t.cmp.surplus = set_difference_sorted(t.cmp.c_zero, t.cmp.c_after);
      const CandidateComparison cmp = t.cmp;
      out->push_back(std::move(t));
      for (int w : cmp.surplus) {
        in_x[w] = 1;
        path.push_back(w);
        dfs(sign + 1, w);
        path.pop_back();
        in_x[w] = 0;
      }
      return;
    }
    const CandidateSets cs =
        candidate_core(n, N_work, in_x, false, w_last, max_label());
    for (int w : cs.c) {
      in_x[w] = 1;
      path.push_back(w);
      dfs(sign, w);
      path.pop_back();
      in_x[w] = 0;
    }
  }
};

}  // namespace

std::vector<TilingTransition> transitions_from(const FundamentalSequence& f,
                                               int n,
                                               const FundamentalCatalog& cat) {
  const long N_work = 4L * n * n + 4 * n;
  std::vector<int> f_labels;
  if (fund_weight(f) > 0) f_labels = f;
  std::vector<std::uint8_t> in_x(N_work, 0);
  for (int w : f_labels) in_x[w] = 1;
  std::vector<TilingTransition> out;
  TransitionSearch search{n, N_work, cat, f, std::move(f_labels),
                          std::move(in_x), {}, &out};
  for (int w : candidate_zero(f, n).c) {
    search.in_x[w] = 1;
    search.path.push_back(w);
    search.dfs(0, w);
    search.path.pop_back();
    search.in_x[w] = 0;
  }
  return out;
}

int TransferMatrix::entry(long r, long c) const {
  for (const auto& [col, v] : rows[r])
    if (col == c) return v;
  return 0;
}

TransferMatrix build_transfer_matrix(int n) {
  TransferMatrix a;
  a.n = n;
  a.catalog = generate_fundamentals(n);
  const long t = static_cast<long>(a.catalog.size());
  a.dim = t * n;
  std::vector<std::vector<int>> dense_rows(t);
  for (long i = 0; i < t; ++i) dense_rows[i].assign(a.dim, 0);

  for (long i = 0; i < t; ++i) {
    const FundamentalSequence& f = a.catalog.sequences[i];
    for (const TilingTransition& tr : transitions_from(f, n, a.catalog)) {
      const long j = a.catalog.index_of(tr.target);
      const long col = static_cast<long>(tr.size_shift - 1) * t + j;
      dense_rows[i][col] += (tr.sign_power % 2 == 0) ? 1 : -1;
    }
  }

  a.rows.assign(a.dim, {});
  for (long i = 0; i < t; ++i)
    for (long c = 0; c < a.dim; ++c)
      if (dense_rows[i][c] != 0) a.rows[i].push_back({c, dense_rows[i][c]});
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < t; ++i)
      a.rows[j * t + i].push_back({(j - 1) * t + i, 1});
  return a;
}

bool check_structure(const TransferMatrix& a) {
  const long t = a.block();
  const long dim = a.dim;
  std::vector<std::vector<int>> dense(dim);
  for (long r = 0; r < dim; ++r) {
    dense[r].assign(dim, 0);
    for (const auto& [c, v] : a.rows[r]) {
      if (v < -1 || v > 1 || v == 0) return false;
      dense[r][c] += v;
    }
  }
  for (long r = 0; r < t; ++r)
    for (long c = dim - t; c < dim; ++c)
      if (dense[r][c] != (c - (dim - t) == r ? 1 : 0)) return false;
  for (long r = t; r < dim; ++r) {
    for (long c = 0; c < dim - t; ++c)
      if (dense[r][c] != (c == r - t ? 1 : 0)) return false;
    for (long c = dim - t; c < dim; ++c)
      if (dense[r][c] != 0) return false;
  }
  for (long r = 0; r < t; ++r)
    for (long c = 0; c < dim; ++c)
      if (dense[r][c] < -1 || dense[r][c] > 1) return false;
  return true;
}

}  // namespace ribbon
