#pragma once

// Integer polynomials in one variable: exact arithmetic, primitive-PRS
// GCD and fraction-free determinants.

#include <vector>

#include "ribbon/bigint.hpp"

namespace ribbon {

// Coefficients in ascending degree; empty vector is the zero
// polynomial, otherwise the trailing coefficient is nonzero.
using Poly = std::vector<BigInt>;

Poly poly_trim(Poly p);
long poly_deg(const Poly& p);  // -1 for zero
bool poly_is_zero(const Poly& p);

Poly poly_neg(const Poly& a);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

// Quotient a / b when the division is exact in Z[x]; throws otherwise.
Poly poly_divide_exact(const Poly& a, const Poly& b);

BigRational poly_eval(const Poly& p, const BigRational& x);

BigInt poly_content(const Poly& p);
Poly poly_primitive(const Poly& p);

// Primitive GCD with positive leading coefficient.
Poly poly_gcd(Poly a, Poly b);

// Determinant by Bareiss fraction-free elimination; consumes m.
Poly bareiss_det(std::vector<std::vector<Poly>> m);

}  // namespace ribbon
