#include "ribbon/fundamental.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ribbon {

long FundamentalCatalog::index_of(const FundamentalSequence& f) const {
  auto it = index.find(f);
  return it == index.end() ? -1 : it->second;
}

long fund_weight(const FundamentalSequence& f) {
  if (f.size() == 1 && f[0] == 0) return 0;
  return static_cast<long>(f.size());
}

FundamentalCatalog generate_fundamentals(int n) {
  if (n < 2) throw std::invalid_argument("order must be at least 2");
  // Every branch declares 0 within n(n-1)/2 + 1 steps, so a work strip
  // of quadratic length never truncates a candidate set.
  const long N_work = static_cast<long>(n) * (n * (n - 1) / 2 + 2) + 2 * n;

  std::set<FundamentalSequence> found;
  std::set<std::pair<std::vector<int>, int>> seen;  // (sorted labels, last)
  std::vector<std::vector<int>> queue;

  for (int w = 0; w < n; ++w) queue.push_back({w});
  while (!queue.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& labels : queue) {
      if (std::find(labels.begin(), labels.end(), 0) != labels.end()) {
        found.insert(phi(labels, n));
        continue;
      }
      std::vector<int> sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (!seen.insert({sorted, labels.back()}).second) continue;
      const InitialSegment seg{n, N_work, labels};
      for (int w : candidate_sets(seg).c) {
        std::vector<int> ext = labels;
        ext.push_back(w);
        next.push_back(std::move(ext));
      }
    }
    queue = std::move(next);
  }

  FundamentalCatalog cat;
  cat.n = n;
  cat.sequences.assign(found.begin(), found.end());
  std::sort(cat.sequences.begin(), cat.sequences.end(),
            [](const FundamentalSequence& a, const FundamentalSequence& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (std::size_t i = 0; i < cat.sequences.size(); ++i)
    cat.index[cat.sequences[i]] = static_cast<long>(i);
  return cat;
}

RegionProfile fundamental_region(const FundamentalSequence& f, int n, long m) {
  if (fund_weight(f) == 0) return RegionProfile::strip(n, m);
  const int max_w = *std::max_element(f.begin(), f.end());
  ProfileReplay replay(n, max_w + 2L * n + 2);
  for (int w : f) {
    if (!replay.place(w))
      throw std::invalid_argument("not a fundamental sequence");
  }
  const RegionProfile at_zero = replay.profile(0);
  std::vector<int> boundary;
  for (int y = 0; y < n; ++y)
    boundary.push_back(static_cast<int>(at_zero.offsets[y]) + y);
  std::sort(boundary.begin(), boundary.end());
  if (boundary.front() != 0 || !has_connectivity(boundary, n))
    throw std::invalid_argument("not a fundamental sequence");
  return replay.profile(m);
}

BoundarySequence sigma(const FundamentalSequence& f, int n) {
  const RegionProfile region = fundamental_region(f, n, 0);
  BoundarySequence b;
  for (int y = 0; y < n; ++y)
    b.push_back(static_cast<int>(region.offsets[y]) + y);
  std::sort(b.begin(), b.end());
  return b;
}

namespace {

void extend_boundary(int n, std::vector<int>* b,
                     std::vector<BoundarySequence>* out) {
  if (static_cast<int>(b->size()) == n) {
    out->push_back(*b);
    return;
  }
  const int prev = b->back();
  for (int v = prev + 1; v <= prev + n; ++v) {
    bool fresh = true;
    for (int u : *b)
      if ((v - u) % n == 0) fresh = false;
    if (!fresh) continue;
    b->push_back(v);
    extend_boundary(n, b, out);
    b->pop_back();
  }
}

}  // namespace

std::vector<BoundarySequence> generate_boundary_sequences(int n) {
  std::vector<BoundarySequence> out;
  std::vector<int> b{0};
  extend_boundary(n, &b, &out);
  return out;
}

std::vector<int> quasi_boundary(const InitialSegment& seg) {
  if (seg.contains(0))
    throw std::invalid_argument("deducting moment already passed");
  const RegionProfile region = residual_profile(seg);
  std::vector<int> w;
  for (int y = 0; y < seg.n; ++y)
    w.push_back(static_cast<int>(region.offsets[y]) + y);
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace ribbon
