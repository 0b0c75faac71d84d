#pragma once

// Generating functions, dominant eigenvalues and growth-rate bounds.

#include <complex>

#include "ribbon/counting.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

struct RationalFunction {
  Poly num;
  Poly den;  // den(0) = 1 after normalization
};

struct SpectrumReport {
  int n = 2;
  std::vector<std::complex<double>> eigenvalues;
  double lambda_max = 0.0;
  double mu = 0.0;
};

struct GrowthBounds {
  double lower = 0.0;
  double upper = 0.0;
  double mu = 0.0;
  bool ok = false;
};

// g_n(x) as an exact ratio of integer polynomials, via fraction-free
// determinants of the block-companion pencil of A. With reduce set,
// numerator and denominator are divided by their GCD.
RationalFunction generating_function(const TransferMatrix& a,
                                     bool reduce = false);

// First K+1 power-series coefficients of g.
std::vector<BigInt> series_expand(const RationalFunction& g, long K);

// Largest-modulus eigenvalue by power iteration on the sparse matrix;
// a diagonal shift is applied when plain iteration oscillates.
double dominant_eigenvalue(const TransferMatrix& a, double tol = 1e-10);

// 1/x0 where x0 is the smallest positive real root of q, located by
// exact rational bisection.
double largest_root_reciprocal(const Poly& q, double tol = 1e-12);

// All eigenvalues (dense solve; practical for n <= 7).
SpectrumReport spectrum(const TransferMatrix& a);

// ln(n!)/n <= mu_n <= ln(n).
GrowthBounds growth_rate_bounds(int n);

// ln(f_{M,N}) / (MN/n) <= (n-1) ln 2 on an oracle-computable rectangle.
bool rect_bound_check(int M, long N, int n);

}  // namespace ribbon
