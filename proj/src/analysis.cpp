#include "ribbon/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ribbon {

namespace {

// The pencil M(x) = I_t - sum_s C_s x^s, where C_s is the t-by-t block
// of the first row block of A at column block s-1. Solving the full
// resolvent system reduces to M(x) u = e_1, so g = det(M:1,1)/det(M).
std::vector<std::vector<Poly>> companion_pencil(const TransferMatrix& a) {
  const long t = a.block();
  std::vector<std::vector<Poly>> m(t, std::vector<Poly>(t));
  for (long i = 0; i < t; ++i) {
    m[i][i] = Poly{BigInt(1)};
    for (const auto& [col, v] : a.rows[i]) {
      const long s = col / t + 1;  // size shift
      const long j = col % t;
      Poly& cell = m[i][j];
      if (static_cast<long>(cell.size()) < s + 1) cell.resize(s + 1, 0);
      cell[s] -= v;
      cell = poly_trim(std::move(cell));
    }
  }
  return m;
}

std::vector<std::vector<Poly>> minor00(const std::vector<std::vector<Poly>>& m) {
  const std::size_t t = m.size();
  std::vector<std::vector<Poly>> out(t - 1, std::vector<Poly>(t - 1));
  for (std::size_t i = 1; i < t; ++i)
    for (std::size_t j = 1; j < t; ++j) out[i - 1][j - 1] = m[i][j];
  return out;
}

}  // namespace

RationalFunction generating_function(const TransferMatrix& a, bool reduce) {
  const auto m = companion_pencil(a);
  RationalFunction g;
  g.den = bareiss_det(m);
  g.num = a.block() == 1 ? Poly{BigInt(1)} : bareiss_det(minor00(m));
  if (g.den.empty() || (g.den[0] != 1 && g.den[0] != -1))
    throw std::logic_error("denominator is not normalized at 0");
  if (g.den[0] < 0) {
    g.den = poly_neg(g.den);
    g.num = poly_neg(g.num);
  }
  if (reduce) {
    const Poly d = poly_gcd(g.num, g.den);
    if (poly_deg(d) > 0 || (poly_deg(d) == 0 && d[0] != 1)) {
      g.num = poly_divide_exact(g.num, d);
      g.den = poly_divide_exact(g.den, d);
      if (g.den[0] < 0) {
        g.den = poly_neg(g.den);
        g.num = poly_neg(g.num);
      }
    }
  }
  return g;
}

std::vector<BigInt> series_expand(const RationalFunction& g, long K) {
  if (g.den.empty() || g.den[0] == 0)
    throw std::invalid_argument("denominator vanishes at 0");
  if (g.den[0] != 1 && g.den[0] != -1)
    throw std::invalid_argument("denominator is not unit-normalized at 0");
  const int unit = g.den[0] == 1 ? 1 : -1;
  std::vector<BigInt> f(K + 1, 0);
  for (long k = 0; k <= K; ++k) {
    BigInt acc = k < static_cast<long>(g.num.size()) ? g.num[k] : BigInt(0);
    for (long j = 1; j <= k && j < static_cast<long>(g.den.size()); ++j)
      acc -= g.den[j] * f[k - j];
    f[k] = unit == 1 ? acc : -acc;
  }
  return f;
}

namespace {

std::vector<double> matvec(const TransferMatrix& a, const std::vector<double>& x,
                           double shift) {
  std::vector<double> y(a.dim, 0.0);
  for (long r = 0; r < a.dim; ++r) {
    double sum = shift * x[r];
    for (const auto& [c, v] : a.rows[r]) sum += v * x[c];
    y[r] = sum;
  }
  return y;
}

double power_iterate(const TransferMatrix& a, double shift, double tol,
                     long max_iter, bool* converged) {
  std::vector<double> x(a.dim, 1.0 / std::sqrt(static_cast<double>(a.dim)));
  double lambda = 0.0;
  int stable = 0;
  for (long it = 0; it < max_iter; ++it) {
    std::vector<double> y = matvec(a, x, shift);
    double dot = 0.0, norm2 = 0.0;
    for (long i = 0; i < a.dim; ++i) {
      dot += x[i] * y[i];
      norm2 += y[i] * y[i];
    }
    const double est = dot;  // Rayleigh quotient with unit x
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) break;
    for (long i = 0; i < a.dim; ++i) x[i] = y[i] / norm;
    if (std::abs(est - lambda) < tol * std::max(1.0, std::abs(est))) {
      if (++stable >= 5) {
        *converged = true;
        return est - shift;
      }
    } else {
      stable = 0;
    }
    lambda = est;
  }
  *converged = false;
  return lambda - shift;
}

}  // namespace

double dominant_eigenvalue(const TransferMatrix& a, double tol) {
  bool ok = false;
  double lambda = power_iterate(a, 0.0, tol, 50000, &ok);
  if (!ok) lambda = power_iterate(a, 1.0, tol, 50000, &ok);
  if (!ok)
    throw std::runtime_error("power iteration failed; fall back to root isolation");
  return lambda;
}

double largest_root_reciprocal(const Poly& q, double tol) {
  const auto sign_at = [&q](const BigRational& x) {
    const BigRational v = poly_eval(q, x);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
  };
  const int s0 = sign_at(BigRational(0));
  if (s0 == 0) throw std::invalid_argument("root at 0");
  // Scan for the first sign change on a fine grid in (0, 1].
  const long grid = 4096;
  long hit = -1;
  for (long i = 1; i <= grid; ++i) {
    const int s = sign_at(BigRational(i, grid));
    if (s == 0) return static_cast<double>(grid) / static_cast<double>(i);
    if (s != s0) {
      hit = i;
      break;
    }
  }
  if (hit < 0) throw std::runtime_error("no positive real root in (0,1]");
  BigRational lo(hit - 1, grid), hi(hit, grid);
  for (int it = 0; it < 200; ++it) {
    const BigRational mid = (lo + hi) / 2;
    const int s = sign_at(mid);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    if (s == s0)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo).convert_to<double>() < tol * lo.convert_to<double>()) break;
  }
  return 1.0 / ((lo + hi) / 2).convert_to<double>();
}

SpectrumReport spectrum(const TransferMatrix& a) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.dim, a.dim);
  for (long r = 0; r < a.dim; ++r)
    for (const auto& [c, v] : a.rows[r]) m(r, c) += v;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  SpectrumReport rep;
  rep.n = a.n;
  rep.lambda_max = 0.0;
  for (long i = 0; i < a.dim; ++i) {
    const std::complex<double> ev = solver.eigenvalues()[i];
    rep.eigenvalues.push_back(ev);
    rep.lambda_max = std::max(rep.lambda_max, std::abs(ev));
  }
  rep.mu = std::log(rep.lambda_max);
  return rep;
}

GrowthBounds growth_rate_bounds(int n) {
  const TransferMatrix a = build_transfer_matrix(n);
  const double lambda = dominant_eigenvalue(a, 1e-10);
  GrowthBounds b;
  b.mu = std::log(lambda);
  b.lower = std::lgamma(n + 1.0) / n;
  b.upper = std::log(static_cast<double>(n));
  b.ok = b.lower <= b.mu + 1e-9 && b.mu <= b.upper + 1e-9;
  return b;
}

bool rect_bound_check(int M, long N, int n) {
  const BigInt f = oracle_count_rect(M, N, n);
  if (f <= 0) return true;
  const double per_tile = log_big(f) / (static_cast<double>(M) * N / n);
  return per_tile <= (n - 1) * std::log(2.0) + 1e-9;
}

}  // namespace ribbon
