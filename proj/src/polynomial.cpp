#include "ribbon/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbon {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long poly_deg(const Poly& p) { return static_cast<long>(p.size()) - 1; }

bool poly_is_zero(const Poly& p) { return p.empty(); }

Poly poly_neg(const Poly& a) {
  Poly out = a;
  for (BigInt& c : out) c = -c;
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(out));
}

Poly poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = a;
  if (rem.size() < b.size() && !rem.empty())
    throw std::invalid_argument("division is not exact");
  if (rem.empty()) return {};
  Poly q(rem.size() - b.size() + 1, 0);
  const BigInt& lead = b.back();
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    const BigInt& top = rem[i + b.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::invalid_argument("division is not exact");
    q[i] = top / lead;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= q[i] * b[j];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw std::invalid_argument("division is not exact");
  return poly_trim(std::move(q));
}

BigRational poly_eval(const Poly& p, const BigRational& x) {
  BigRational acc = 0;
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    acc = acc * x + BigRational(p[i]);
  return acc;
}

BigInt poly_content(const Poly& p) {
  BigInt g = 0;
  for (const BigInt& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

Poly poly_primitive(const Poly& p) {
  if (p.empty()) return p;
  const BigInt g = poly_content(p);
  Poly out = p;
  for (BigInt& c : out) c /= g;
  if (out.back() < 0)
    for (BigInt& c : out) c = -c;
  return out;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
Poly pseudo_rem(Poly a, const Poly& b) {
  const BigInt& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (BigInt& c : a) c *= lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
    a = poly_trim(std::move(a));
  }
  return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  if (a.empty()) return b.empty() ? b : poly_primitive(b);
  if (b.empty()) return poly_primitive(a);
  const BigInt cont = boost::multiprecision::gcd(poly_content(a), poly_content(b));
  a = poly_primitive(a);
  b = poly_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.empty() ? Poly{} : poly_primitive(r);
  }
  Poly g = poly_primitive(a);
  for (BigInt& c : g) c *= cont;
  return g;
}

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const std::size_t t = m.size();
  if (t == 0) return {BigInt(1)};
  int sign = 1;
  Poly prev{BigInt(1)};
  for (std::size_t k = 0; k + 1 < t; ++k) {
    if (poly_is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < t && poly_is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == t) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < t; ++i) {
      for (std::size_t j = k + 1; j < t; ++j) {
        Poly num = poly_sub(poly_mul(m[k][k], m[i][j]),
                            poly_mul(m[i][k], m[k][j]));
        m[i][j] = poly_divide_exact(num, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  Poly det = m[t - 1][t - 1];
  if (sign < 0) det = poly_neg(det);
  return det;
}

}  // namespace ribbon
