#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "apoly/poly.hpp"

namespace apoly {

inline Int content(const Poly& p) {
  Int c = 0;
  for (const auto& a : p) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    if (c == 1) break;
  }
  return c;
}

inline Poly primitive_part(Poly p) {
  if (p.empty()) return p;
  Int c = content(p);
  if (leading(p) < 0) c = -c;
  if (c != 1)
    for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return p;
}

// Primitive with positive leading coefficient: the unique representative of
// a polynomial up to a nonzero rational constant.
inline Poly normalize(Poly p) { return primitive_part(std::move(p)); }

// Exact division; nullopt when b does not divide a over the rationals or
// the quotient is not integral.
inline std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Poly{};
  if (a.size() < b.size()) return std::nullopt;
  Poly rem = a;
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int& top = rem[k + b.size() - 1];
    if (top == 0) continue;
    Int c, r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), leading(b).get_mpz_t());
    if (r != 0) return std::nullopt;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(q);
  return q;
}

inline bool divides(const Poly& b, const Poly& a) { return exact_div(a, b).has_value(); }

// Remainder of a by b up to a positive power of lc(b): repeated elimination
// a <- lc(b)*a - lc(a)*x^(da-db)*b until deg a < deg b.  Agrees with the
// pseudo-remainder up to a constant, which is all the primitive remainder
// sequence needs.
inline Poly pseudo_rem(Poly a, const Poly& b) {
  const Int& lb = leading(b);
  const int db = degree(b);
  while (degree(a) >= db) {
    const int da = degree(a);
    Int la = leading(a);
    Poly next(static_cast<std::size_t>(da));
    for (int i = 0; i < da; ++i) next[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * lb;
    for (int j = 0; j < db; ++j) next[static_cast<std::size_t>(da - db + j)] -= la * b[static_cast<std::size_t>(j)];
    trim(next);
    a = std::move(next);
  }
  return a;
}

// GCD over the rationals as a primitive integer polynomial, via the
// primitive pseudo-remainder sequence.
inline Poly poly_gcd(Poly a, Poly b) {
  if (a.empty()) return normalize(std::move(b));
  if (b.empty()) return normalize(std::move(a));
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    Poly r = pseudo_rem(a, b);
    r = primitive_part(std::move(r));
    a = std::move(b);
    b = std::move(r);
  }
  return normalize(std::move(a));
}

// f / gcd(f, f'): same roots, all simple.
inline Poly square_free_part(const Poly& f) {
  Poly g = poly_gcd(f, derivative(f));
  if (degree(g) < 1) return normalize(f);
  return normalize(*exact_div(primitive_part(f), g));
}

// Yun's algorithm: f (primitive) = prod comp[i].first ^ comp[i].second with
// square-free pairwise-coprime parts.
inline std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly p = primitive_part(f);
  if (degree(p) < 1) return out;
  Poly dp = derivative(p);
  Poly a = poly_gcd(p, dp);
  if (degree(a) < 1) {
    out.emplace_back(std::move(p), 1);
    return out;
  }
  Poly b = *exact_div(p, a);
  Poly c = *exact_div(dp, a);
  Poly d = sub(c, derivative(b));
  for (int i = 1;; ++i) {
    Poly g = poly_gcd(b, d);
    if (degree(g) >= 1) out.emplace_back(g, i);
    b = *exact_div(b, g);
    if (degree(b) < 1) break;
    c = *exact_div(d, g);
    d = sub(c, derivative(b));
  }
  return out;
}

// Multiply by (1 + t^2).
inline Poly mul_one_plus_t2(const Poly& p) {
  if (p.empty()) return p;
  Poly r(p.size() + 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    r[i + 2] += p[i];
  }
  trim(r);
  return r;
}

// Exact division by (1 + t^2) when possible.
inline std::optional<Poly> div_one_plus_t2(const Poly& p) {
  if (p.empty()) return Poly{};
  if (p.size() < 3) return std::nullopt;
  Poly q(p.size() - 2);
  Poly rem = p;
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = rem[k + 2];
    rem[k] -= q[k];
    rem[k + 2] = 0;
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(q);
  return q;
}

// Normalization used for every angle polynomial: strip all (1+t^2) factors
// (they contribute no real zeros), take the primitive part, make the
// leading coefficient positive.
inline Poly normalize_angle_poly(Poly p) {
  while (!p.empty()) {
    auto q = div_one_plus_t2(p);
    if (!q) break;
    p = std::move(*q);
  }
  return normalize(std::move(p));
}

}  // namespace apoly
