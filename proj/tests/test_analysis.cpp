#include <cmath>
#include <complex>

#include "doctest.h"
#include "ribbon/analysis.hpp"

using namespace ribbon;

namespace {

Poly poly_from(const std::vector<long>& coeffs) {
  Poly p;
  for (long c : coeffs) p.push_back(c);
  return p;
}

// g_4 numerator and denominator, ascending coefficients.
const Poly kP4 = poly_from({1, 0, -1, 0, -13, -2, 5,  -1, 39, 6, 0,
                            6, -37, 0, -5, -1, 11, 0, 1, 0, -1});
const Poly kQ4 = poly_from({1,  -1, -2, -2, -25, 3,  12, 4,  109, 5, -9, 7, -159,
                            -4, -16, -7, 82, 0, 10, 1, -16, 0, -1, 0, 1});

}  // namespace

TEST_CASE("reduced generating function for n=3") {
  const RationalFunction g = generating_function(build_transfer_matrix(3), true);
  CHECK(g.num == poly_from({1, 0, 0, -1}));
  CHECK(g.den == poly_from({1, -1, -1, -4, 0, 0, 1}));
}

TEST_CASE("generating function for n=4 matches the printed ratio") {
  const RationalFunction g = generating_function(build_transfer_matrix(4));
  CHECK(g.num == kP4);
  CHECK(g.den == kQ4);
}

TEST_CASE("series expansion") {
  const RationalFunction g3 = generating_function(build_transfer_matrix(3), true);
  const auto s3 = series_expand(g3, 10);
  const long expect[] = {1, 1, 2, 6, 12, 26, 61, 134, 297, 669, 1490};
  REQUIRE(s3.size() == 11);
  for (int k = 0; k <= 10; ++k) CHECK(s3[k] == expect[k]);

  const RationalFunction one{{BigInt(1)}, {BigInt(1)}};
  const auto sc = series_expand(one, 4);
  CHECK(sc == std::vector<BigInt>{1, 0, 0, 0, 0});

  const RationalFunction g4 = generating_function(build_transfer_matrix(4));
  const auto s4 = series_expand(g4, 20);
  CHECK(s4[20] == 378725526);
  CHECK(s4[20] == count_strip(4, 20));
}

TEST_CASE("series convention: f_0 = 1 and one-slot offset to strips") {
  const RationalFunction g2 = generating_function(build_transfer_matrix(2), true);
  const auto s2 = series_expand(g2, 8);
  const long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int k = 0; k <= 8; ++k) CHECK(s2[k] == fib[k]);
  for (int n = 3; n <= 4; ++n) {
    const auto s = series_expand(generating_function(build_transfer_matrix(n)), 9);
    CountingEngine engine(n);
    CHECK(s[0] == 1);
    for (long N = 1; N <= 9; ++N) CHECK(s[N] == engine.count(N));
  }
}

TEST_CASE("dominant eigenvalues") {
  CHECK(dominant_eigenvalue(build_transfer_matrix(2)) ==
        doctest::Approx(1.618034).epsilon(1e-6));
  CHECK(dominant_eigenvalue(build_transfer_matrix(3)) ==
        doctest::Approx(2.232476).epsilon(1e-6));
  CHECK(dominant_eigenvalue(build_transfer_matrix(5)) ==
        doctest::Approx(3.458663).epsilon(1e-6));
}

TEST_CASE("power iteration agrees with root isolation") {
  for (int n = 2; n <= 4; ++n) {
    const TransferMatrix a = build_transfer_matrix(n);
    const double lambda = dominant_eigenvalue(a, 1e-12);
    const RationalFunction g = generating_function(a);
    CHECK(std::abs(lambda - largest_root_reciprocal(g.den)) < 1e-9);
  }
}

TEST_CASE("spectrum") {
  const SpectrumReport s2 = spectrum(build_transfer_matrix(2));
  REQUIRE(s2.eigenvalues.size() == 2);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(s2.lambda_max == doctest::Approx(phi).epsilon(1e-9));
  double low = 1e9;
  for (const auto& ev : s2.eigenvalues) low = std::min(low, ev.real());
  CHECK(low == doctest::Approx(-1 / phi).epsilon(1e-9));

  const SpectrumReport s3 = spectrum(build_transfer_matrix(3));
  CHECK(s3.eigenvalues.size() == 6);
  CHECK(s3.lambda_max == doctest::Approx(2.232476).epsilon(1e-6));
  CHECK(s3.mu == doctest::Approx(std::log(2.232476)).epsilon(1e-6));

  const SpectrumReport s4 = spectrum(build_transfer_matrix(4));
  CHECK(s4.eigenvalues.size() == 24);
  for (const auto& ev : s4.eigenvalues)
    CHECK(std::abs(ev) <= s4.lambda_max + 1e-9);
}

TEST_CASE("growth rate bounds") {
  for (int n : {2, 3, 4, 5}) {
    const GrowthBounds b = growth_rate_bounds(n);
    CHECK(b.ok);
    CHECK(b.lower <= b.mu + 1e-9);
    CHECK(b.mu <= b.upper + 1e-9);
    CHECK(std::exp(b.mu) <= n + 1e-9);  // lambda_n <= n
  }
  const GrowthBounds b4 = growth_rate_bounds(4);
  CHECK(b4.lower == doctest::Approx(std::log(24.0) / 4).epsilon(1e-12));
  CHECK(b4.upper == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(b4.mu == doctest::Approx(std::log(2.845807)).epsilon(1e-6));
}

TEST_CASE("rectangle growth bound") {
  CHECK(rect_bound_check(2, 4, 2));
  CHECK(rect_bound_check(4, 8, 4));
  CHECK(rect_bound_check(3, 6, 3));
}
