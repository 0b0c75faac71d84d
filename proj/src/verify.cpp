#include "ribbon/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "ribbon/analysis.hpp"

namespace ribbon {

bool VerifyReport::all_ok() const {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

namespace {

std::string join_labels(const std::vector<int>& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "]";
  return s.str();
}

void walk_segments(const InitialSegment& seg,
                   const std::function<void(const InitialSegment&)>& visit) {
  visit(seg);
  if (static_cast<long>(seg.labels.size()) == seg.N) return;
  for (int w : candidate_sets(seg).c)
    walk_segments(declare(seg, w), visit);
}

std::vector<std::vector<int>> sample_sequences(int n, long N, int count,
                                               unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::vector<int>> out;
  for (int k = 0; k < count; ++k) {
    InitialSegment seg = InitialSegment::empty(n, N);
    while (static_cast<long>(seg.labels.size()) < N) {
      const auto c = candidate_sets(seg).c;
      std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
      seg = declare(seg, c[pick(rng)]);
    }
    out.push_back(seg.labels);
  }
  return out;
}

VerifyResult check_oracle_vs_leftmost() {
  VerifyResult r{"oracle equals leftmost enumeration", true, ""};
  for (int n = 2; n <= 5 && r.ok; ++n) {
    for (long N = 0; N <= 8 && r.ok; ++N) {
      const BigInt a = oracle_count(RegionProfile::strip(n, N));
      const BigInt b = count_by_leftmost(n, N);
      if (a != b) {
        r.ok = false;
        std::ostringstream s;
        s << "n=" << n << " N=" << N << " oracle=" << a << " leftmost=" << b;
        r.detail = s.str();
      }
    }
  }
  return r;
}

VerifyResult check_oracle_vs_recurrence() {
  VerifyResult r{"oracle equals matrix recurrence", true, ""};
  for (int n = 2; n <= 5 && r.ok; ++n) {
    CountingEngine engine(n);
    for (long N = 1; N <= 8 && r.ok; ++N) {
      const BigInt a = oracle_count(RegionProfile::strip(n, N));
      const BigInt b = engine.count(N);
      if (a != b) {
        r.ok = false;
        std::ostringstream s;
        s << "n=" << n << " N=" << N << " oracle=" << a << " recurrence=" << b;
        r.detail = s.str();
      }
    }
  }
  return r;
}

VerifyResult check_return_operator() {
  VerifyResult r{"return operator preserves validity", true, ""};
  const auto test_sequences = [&r](int n, long N,
                                   const std::vector<std::vector<int>>& seqs) {
    for (const auto& t : seqs) {
      if (!is_valid_segment(n, N, return_op(t))) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + " T=" + join_labels(t);
        return;
      }
    }
  };
  for (int n = 2; n <= 4 && r.ok; ++n)
    for (long N = 1; N <= 6 && r.ok; ++N)
      test_sequences(n, N, enumerate_sequences(n, N));
  if (r.ok) test_sequences(5, 7, sample_sequences(5, 7, 200, 12345));
  return r;
}

VerifyResult check_growth_ratio() {
  VerifyResult r{"f_N at most n times f_{N-1}", true, ""};
  for (int n = 2; n <= 5 && r.ok; ++n) {
    CountingEngine engine(n);
    BigInt prev = engine.count(1);
    for (long N = 2; N <= 10 && r.ok; ++N) {
      const BigInt cur = engine.count(N);
      if (cur > n * prev || cur < prev) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + " N=" + std::to_string(N);
      }
      prev = cur;
    }
  }
  return r;
}

VerifyResult check_permutation_invariance() {
  VerifyResult r{"residual region is order-invariant", true, ""};
  for (int n = 2; n <= 4 && r.ok; ++n) {
    const long N = 6;
    std::map<std::vector<int>, RegionProfile> seen;
    walk_segments(InitialSegment::empty(n, N), [&](const InitialSegment& seg) {
      if (!r.ok || seg.labels.empty()) return;
      std::vector<int> key = seg.labels;
      std::sort(key.begin(), key.end());
      const RegionProfile profile = residual_profile(seg);
      auto [it, inserted] = seen.insert({key, profile});
      if (!inserted && !(it->second == profile)) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + " X=" + join_labels(seg.labels);
      }
    });
  }
  return r;
}

VerifyResult check_essential_connectivity() {
  VerifyResult r{"essential sequences have connectivity", true, ""};
  for (int n = 2; n <= 4 && r.ok; ++n) {
    walk_segments(InitialSegment::empty(n, 6), [&](const InitialSegment& seg) {
      if (!r.ok || seg.labels.empty() || seg.labels.back() != 0) return;
      const auto a = essential_sequence(seg.labels, n);
      std::vector<int> sorted = seg.labels;
      std::sort(sorted.begin(), sorted.end());
      if (!has_connectivity(a, n) || !has_connectivity(sorted, n)) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + " J=" + join_labels(seg.labels);
      }
    });
  }
  return r;
}

VerifyResult check_deducting_moment() {
  VerifyResult r{"deducting moment within n(n-1)/2+1 steps", true, ""};
  const auto test_sequences = [&r](int n,
                                   const std::vector<std::vector<int>>& seqs) {
    const long bound = n * (n - 1) / 2 + 1;
    for (const auto& t : seqs) {
      const auto it = std::find(t.begin(), t.end(), 0);
      if (it == t.end() || (it - t.begin()) + 1 > bound) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + " T=" + join_labels(t);
        return;
      }
    }
  };
  for (int n = 2; n <= 4 && r.ok; ++n)
    test_sequences(n, enumerate_sequences(n, 6));
  if (r.ok) test_sequences(5, sample_sequences(5, 11, 200, 777));
  return r;
}

VerifyResult check_transitions() {
  VerifyResult r{"transition lemmas (cases, signs, lengths)", true, ""};
  for (int n = 2; n <= 5 && r.ok; ++n) {
    const FundamentalCatalog cat = generate_fundamentals(n);
    for (const auto& f : cat.sequences) {
      // Direct transitions are unique per (target, size). The pair
      // ([0], [0]) genuinely carries two paths: the immediate deduction
      // [0] of size 1 and the full reversed-boundary loop of size n.
      std::map<std::pair<FundamentalSequence, int>, int> direct;
      for (const TilingTransition& tr : transitions_from(f, n, cat)) {
        std::ostringstream ctx;
        ctx << "n=" << n << " F=" << join_labels(f)
            << " J=" << join_labels(tr.path);
        if (tr.size_shift < 1 || tr.size_shift > n) {
          r.ok = false;
          r.detail = ctx.str() + " bad length";
          break;
        }
        if (tr.deducting) {
          // Case (1): w in C_{[F,J]} iff w - d in C^0_{F'}.
          std::vector<int> shifted;
          for (int w : tr.cmp.c_after) shifted.push_back(w - tr.d);
          if (shifted != tr.cmp.c_zero) {
            r.ok = false;
            r.detail = ctx.str() + " candidate bijection broken";
            break;
          }
        } else {
          if (!std::includes(tr.cmp.c_zero.begin(), tr.cmp.c_zero.end(),
                             tr.cmp.c_after.begin(), tr.cmp.c_after.end())) {
            r.ok = false;
            r.detail = ctx.str() + " candidate inclusion broken";
            break;
          }
          if (!tr.cmp.surplus.empty() && !tr.cmp.c_after.empty() &&
              tr.cmp.surplus.back() >= tr.cmp.c_after.front()) {
            r.ok = false;
            r.detail = ctx.str() + " surplus not below the candidate set";
            break;
          }
        }
        if (tr.sign_power == 0) {
          if (!std::is_sorted(tr.path.rbegin(), tr.path.rend()) ||
              std::adjacent_find(tr.path.begin(), tr.path.end()) !=
                  tr.path.end()) {
            r.ok = false;
            r.detail = ctx.str() + " path not strictly decreasing";
            break;
          }
          if (tr.size_shift == n && !(tr.target == f)) {
            r.ok = false;
            r.detail = ctx.str() + " length-n transition is not the self loop";
            break;
          }
          if (++direct[{tr.target, tr.size_shift}] > 1) {
            r.ok = false;
            r.detail = ctx.str() + " duplicate direct transition";
            break;
          }
        }
      }
      if (r.ok && direct[{f, n}] != 1) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + " F=" + join_labels(f) +
                   " missing the length-n self loop";
      }
      if (!r.ok) break;
    }
  }
  return r;
}

VerifyResult check_census() {
  VerifyResult r{"fundamental census and boundary bijection", true, ""};
  long expect = 1;
  for (int n = 2; n <= 6 && r.ok; ++n) {
    expect *= std::max(1, n - 1);
    const FundamentalCatalog cat = generate_fundamentals(n);
    if (static_cast<long>(cat.size()) != expect) {
      r.ok = false;
      r.detail = "n=" + std::to_string(n) + " census " +
                 std::to_string(cat.size());
      break;
    }
    std::vector<BoundarySequence> images;
    for (const auto& f : cat.sequences) images.push_back(sigma(f, n));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      r.ok = false;
      r.detail = "n=" + std::to_string(n) + " sigma not injective";
      break;
    }
    auto boundaries = generate_boundary_sequences(n);
    std::sort(boundaries.begin(), boundaries.end());
    if (images != boundaries) {
      r.ok = false;
      r.detail = "n=" + std::to_string(n) + " sigma not onto";
    }
  }
  return r;
}

VerifyResult check_matrix_structure() {
  VerifyResult r{"transfer matrix block structure", true, ""};
  for (int n = 2; n <= 6 && r.ok; ++n) {
    if (!check_structure(build_transfer_matrix(n))) {
      r.ok = false;
      r.detail = "n=" + std::to_string(n);
    }
  }
  return r;
}

VerifyResult check_genfun_series() {
  VerifyResult r{"series expansion matches strip counts", true, ""};
  for (int n = 3; n <= 4 && r.ok; ++n) {
    CountingEngine engine(n);
    const RationalFunction g = generating_function(engine.matrix());
    const auto series = series_expand(g, 30);
    if (series[0] != 1) {
      r.ok = false;
      r.detail = "n=" + std::to_string(n) + " f_0 != 1";
      break;
    }
    for (long N = 1; N <= 30 && r.ok; ++N) {
      if (series[N] != engine.count(N)) {
        r.ok = false;
        std::ostringstream s;
        s << "n=" << n << " N=" << N << " series=" << series[N]
          << " count=" << engine.count(N);
        r.detail = s.str();
      }
    }
  }
  return r;
}

VerifyResult check_genfun_closed_forms() {
  VerifyResult r{"printed generating functions reproduced", true, ""};
  const TransferMatrix a3 = build_transfer_matrix(3);
  const RationalFunction g3 = generating_function(a3, true);
  const Poly p3{1, 0, 0, -1};
  const Poly q3{1, -1, -1, -4, 0, 0, 1};
  if (g3.num != p3 || g3.den != q3) {
    r.ok = false;
    r.detail = "n=3 closed form mismatch";
    return r;
  }
  const TransferMatrix a4 = build_transfer_matrix(4);
  const RationalFunction g4 = generating_function(a4);
  const Poly p4{1, 0, -1, 0, -13, -2, 5,  -1, 39, 6, 0,
                6, -37, 0, -5, -1, 11, 0, 1,  0, -1};
  const Poly q4{1,    -1, -2,  -2, -25, 3,  12, 4,  109, 5,  -9, 7, -159,
                -4, -16, -7, 82,  0, 10, 1, -16, 0, -1, 0, 1};
  if (g4.num != p4 || g4.den != q4) {
    r.ok = false;
    r.detail = "n=4 p/q mismatch";
  }
  return r;
}

VerifyResult check_eigen_cross() {
  VerifyResult r{"power iteration agrees with root isolation", true, ""};
  for (int n = 2; n <= 4 && r.ok; ++n) {
    const TransferMatrix a = build_transfer_matrix(n);
    const double lp = dominant_eigenvalue(a, 1e-12);
    const double lr = largest_root_reciprocal(generating_function(a).den);
    if (std::abs(lp - lr) > 1e-9) {
      r.ok = false;
      std::ostringstream s;
      s << "n=" << n << " power=" << lp << " root=" << lr;
      r.detail = s.str();
    }
  }
  return r;
}

}  // namespace

VerifyReport verify(const std::string& suite) {
  VerifyReport rep;
  const bool all = suite == "all";
  if (all || suite == "oracle") {
    rep.results.push_back(check_oracle_vs_leftmost());
    rep.results.push_back(check_oracle_vs_recurrence());
  }
  if (all || suite == "lemmas") {
    rep.results.push_back(check_return_operator());
    rep.results.push_back(check_growth_ratio());
    rep.results.push_back(check_permutation_invariance());
    rep.results.push_back(check_essential_connectivity());
    rep.results.push_back(check_deducting_moment());
    rep.results.push_back(check_transitions());
    rep.results.push_back(check_census());
  }
  if (all || suite == "matrix") {
    rep.results.push_back(check_matrix_structure());
  }
  if (all || suite == "genfun") {
    rep.results.push_back(check_genfun_closed_forms());
    rep.results.push_back(check_genfun_series());
    rep.results.push_back(check_eigen_cross());
  }
  if (rep.results.empty())
    rep.results.push_back({"unknown suite: " + suite, false, ""});
  return rep;
}

}  // namespace ribbon
