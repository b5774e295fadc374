#pragma once

#include <string>
#include <vector>

#include "apoly/bigint.hpp"
#include "apoly/zp.hpp"

namespace apoly {

// Dense univariate integer polynomial, constant term first.
// The zero polynomial is the empty vector.
using Poly = std::vector<Int>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const Poly& p) { return p.empty(); }

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline const Int& leading(const Poly& p) { return p.back(); }

inline Poly constant(Int c) {
  Poly p;
  if (c != 0) p.push_back(std::move(c));
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

inline Poly neg(Poly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Int& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  return r;
}

inline Int eval(const Poly& p, const Int& x) {
  Int r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

inline Rat eval(const Poly& p, const Rat& x) {
  Rat r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// p(num/den) * den^deg(p): integer whose sign equals sign of p at num/den.
inline Int eval_scaled(const Poly& p, const Int& num, const Int& den) {
  if (p.empty()) return 0;
  Int r = p.back();
  Int dpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dpow *= den;
    r = r * num + p[i] * dpow;
  }
  return r;
}

inline int sign_at_rat(const Poly& p, const Rat& x) {
  return sign_of(eval_scaled(p, Int(x.get_num()), Int(x.get_den())));
}

inline std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (!s.empty()) s += p[i] >= 0 ? " + " : " - ";
    else if (p[i] < 0) s += "-";
    s += Int(abs(p[i])).get_str();
    if (i >= 1) s += "*t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

// --- polynomials over a prime field -------------------------------------

using ZpPoly = std::vector<uint64_t>;

inline void zp_trim(ZpPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int zp_degree(const ZpPoly& p) { return static_cast<int>(p.size()) - 1; }

inline ZpPoly zp_reduce(const Poly& p, const Fp& f) {
  ZpPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = mpz_fdiv_ui(p[i].get_mpz_t(), f.p);
  zp_trim(r);
  return r;
}

inline ZpPoly zp_add(const ZpPoly& a, const ZpPoly& b, const Fp& f) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    uint64_t v = i < a.size() ? a[i] : 0;
    if (i < b.size()) v = f.add(v, b[i]);
    r[i] = v;
  }
  zp_trim(r);
  return r;
}

inline ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, const Fp& f) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    uint64_t v = i < a.size() ? a[i] : 0;
    if (i < b.size()) v = f.sub(v, b[i]);
    r[i] = v;
  }
  zp_trim(r);
  return r;
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, const Fp& f) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  zp_trim(r);
  return r;
}

inline ZpPoly zp_scale(const ZpPoly& a, uint64_t c, const Fp& f) {
  ZpPoly r = a;
  for (auto& x : r) x = f.mul(x, c);
  zp_trim(r);
  return r;
}

inline ZpPoly zp_monic(const ZpPoly& a, const Fp& f) {
  if (a.empty()) return a;
  return zp_scale(a, f.inv(a.back()), f);
}

// Division with remainder; returns quotient, leaves remainder in `a`.
inline ZpPoly zp_divrem(ZpPoly& a, const ZpPoly& b, const Fp& f) {
  ZpPoly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, 0);
  uint64_t binv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    uint64_t c = f.mul(a[k + b.size() - 1], binv);
    if (c == 0) continue;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  zp_trim(a);
  zp_trim(q);
  return q;
}

inline ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, const Fp& f) {
  zp_divrem(a, b, f);
  return a;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, const Fp& f) {
  while (!b.empty()) {
    a = zp_rem(std::move(a), b, f);
    std::swap(a, b);
  }
  return zp_monic(a, f);
}

inline ZpPoly zp_derivative(const ZpPoly& p, const Fp& f) {
  if (p.size() <= 1) return {};
  ZpPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = f.mul(p[i], i % f.p);
  zp_trim(r);
  return r;
}

inline uint64_t zp_eval(const ZpPoly& p, uint64_t x, const Fp& f) {
  uint64_t r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = f.add(f.mul(r, x), p[i]);
  return r;
}

// x^e mod m
inline ZpPoly zp_powmod_x(uint64_t e, const ZpPoly& m, const Fp& f) {
  ZpPoly x = {0, 1};
  ZpPoly r = {1};
  while (e) {
    if (e & 1) r = zp_rem(zp_mul(r, x, f), m, f);
    x = zp_rem(zp_mul(x, x, f), m, f);
    e >>= 1;
  }
  return r;
}

inline ZpPoly zp_powmod(ZpPoly b, uint64_t e, const ZpPoly& m, const Fp& f) {
  ZpPoly r = {1};
  b = zp_rem(std::move(b), m, f);
  while (e) {
    if (e & 1) r = zp_rem(zp_mul(r, b, f), m, f);
    b = zp_rem(zp_mul(b, b, f), m, f);
    e >>= 1;
  }
  return r;
}

}  // namespace apoly
