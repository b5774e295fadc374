#pragma once

#include <algorithm>
#include <vector>

#include "apoly/interval.hpp"
#include "apoly/upoly.hpp"

namespace apoly {

// Isolating interval for one real root of a square-free polynomial:
// exactly one root in the open interval (lo, hi); the endpoint signs are
// nonzero and differ.
struct RootInterval {
  Rat lo, hi;
  Poly poly;

  double mid_d() const { return Rat((lo + hi) / 2).get_d(); }
};

// One bisection step preserving the invariant.
inline void refine(RootInterval& r) {
  Rat m = (r.lo + r.hi) / 2;
  int sm = sign_at_rat(r.poly, m);
  if (sm == 0) {
    // the root is exactly m; tighten symmetrically around it
    r.lo = m - (m - r.lo) / 2;
    r.hi = m + (r.hi - m) / 2;
    return;
  }
  if (sm == sign_at_rat(r.poly, r.lo))
    r.lo = m;
  else
    r.hi = m;
}

inline void refine_below(RootInterval& r, const Rat& width) {
  while (r.hi - r.lo >= width) refine(r);
}

namespace detail {

// p(lo + (hi-lo)x) scaled to integer coefficients (positive scaling, so
// sign variation counts are unaffected).
inline Poly compose_interval(const Poly& p, const Rat& lo, const Rat& hi) {
  std::vector<Rat> r;
  Rat w = hi - lo;
  for (std::size_t i = p.size(); i-- > 0;) {
    std::vector<Rat> nr(r.size() + 1);
    for (std::size_t j = 0; j < r.size(); ++j) {
      nr[j] += r[j] * lo;
      nr[j + 1] += r[j] * w;
    }
    if (nr.empty()) nr.resize(1);
    nr[0] += Rat(p[i]);
    r = std::move(nr);
  }
  Int den = 1;
  for (const auto& q : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  Poly out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rat scaled = r[i] * den;
    out[i] = Int(scaled.get_num());
  }
  trim(out);
  return out;
}

inline int sign_variations(const Poly& p) {
  int v = 0, last = 0;
  for (const auto& c : p) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Upper bound on the number of roots of p in the open interval (lo, hi);
// exact when 0 or 1 (Descartes).
inline int descartes_count(const Poly& p, const Rat& lo, const Rat& hi) {
  Poly q = compose_interval(p, lo, hi);  // roots in (lo,hi) -> (0,1)
  Poly rev(q.rbegin(), q.rend());
  trim(rev);
  // Taylor shift by 1: variations of (1+x)^n q(1/(1+x))
  for (std::size_t i = 1; i < rev.size(); ++i)
    for (std::size_t j = rev.size() - 1; j >= i; --j) rev[j - 1] += rev[j];
  return sign_variations(rev);
}

}  // namespace detail

// Power-of-two bound B with all real roots of f inside (-B, B).
inline Rat root_bound(const Poly& f) {
  Int maxc = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    Int a = abs(f[i]);
    if (a > maxc) maxc = a;
  }
  Int lead = abs(leading(f));
  Int b = 2;
  while (b * lead <= maxc + lead) b <<= 1;
  return Rat(b);
}

// Isolating intervals for all distinct real roots of square-free f,
// ascending.
inline std::vector<RootInterval> isolate_real_roots(const Poly& f) {
  if (is_zero(f)) throw Error("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (degree(f) < 1) return out;
  Rat bound = root_bound(f);

  struct Node {
    Rat lo, hi;
  };
  std::vector<Node> stack;
  std::vector<Rat> point_roots;
  stack.push_back({-bound, bound});
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    int v = detail::descartes_count(f, nd.lo, nd.hi);
    if (v == 0) continue;
    if (v == 1) {
      // repair endpoints that are themselves roots (from earlier splits)
      Rat lo = nd.lo, hi = nd.hi;
      while (sign_at_rat(f, lo) == 0 || sign_at_rat(f, hi) == 0) {
        Rat m = (lo + hi) / 2;
        if (sign_at_rat(f, m) == 0) {
          lo = (lo + m) / 2;
          hi = (m + hi) / 2;
          break;
        }
        if (detail::descartes_count(f, m, hi) == 1)
          lo = m;
        else
          hi = m;
      }
      out.push_back({lo, hi, f});
      continue;
    }
    Rat m = (nd.lo + nd.hi) / 2;
    if (sign_at_rat(f, m) == 0) point_roots.push_back(m);
    stack.push_back({nd.lo, m});
    stack.push_back({m, nd.hi});
  }
  for (const Rat& m : point_roots) {
    Rat h = Rat(1, 4);
    for (;;) {
      Rat lo = m - h, hi = m + h;
      if (sign_at_rat(f, lo) != 0 && sign_at_rat(f, hi) != 0 &&
          detail::descartes_count(f, lo, hi) == 1) {
        out.push_back({lo, hi, f});
        break;
      }
      h /= 2;
    }
  }
  // make the intervals pairwise disjoint, then order them
  for (bool dirty = true; dirty;) {
    dirty = false;
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].hi > out[i + 1].lo) {
        refine(out[i]);
        refine(out[i + 1]);
        dirty = true;
      }
    }
  }
  return out;
}

namespace detail {

// Sign of f over [lo, hi] by outward-rounded double interval evaluation.
inline IntervalSign interval_eval_sign(const Poly& f, const Rat& lo, const Rat& hi) {
  Interval x(Interval::of(lo).lo, Interval::of(hi).hi);
  Interval acc = Interval::exact(0.0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + Interval::of(f[i]);
  return interval_sign(acc);
}

// Exact interval evaluation over the rationals.
inline int rat_interval_sign(const Poly& f, const Rat& lo, const Rat& hi) {
  Rat alo = 0, ahi = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
    alo = std::min(std::min(p1, p2), std::min(p3, p4)) + Rat(f[i]);
    ahi = std::max(std::max(p1, p2), std::max(p3, p4)) + Rat(f[i]);
  }
  if (sign_of(alo) > 0) return 1;
  if (sign_of(ahi) < 0) return -1;
  return 0;
}

}  // namespace detail

// Exact sign of f at the algebraic number isolated by r.  Zero is decided
// via the gcd with the defining polynomial; otherwise the interval is
// refined until the sign is certain.
inline int sign_at(const Poly& f, RootInterval& r) {
  if (is_zero(f)) return 0;
  if (degree(f) == 0) return sign_of(f[0]);
  Poly h = poly_gcd(f, r.poly);
  if (degree(h) >= 1 && sign_at_rat(h, r.lo) * sign_at_rat(h, r.hi) < 0) return 0;
  for (;;) {
    IntervalSign s = detail::interval_eval_sign(f, r.lo, r.hi);
    if (s == IntervalSign::Positive) return 1;
    if (s == IntervalSign::Negative) return -1;
    int se = detail::rat_interval_sign(f, r.lo, r.hi);
    if (se != 0) return se;
    refine(r);
  }
}

// True iff the two isolated algebraic numbers are equal.
inline bool algebraic_equal(RootInterval& a, RootInterval& b) {
  if (a.hi <= b.lo || b.hi <= a.lo) return false;
  Poly g = poly_gcd(a.poly, b.poly);
  if (degree(g) < 1) return false;
  bool za = sign_at_rat(g, a.lo) * sign_at_rat(g, a.hi) < 0;
  bool zb = sign_at_rat(g, b.lo) * sign_at_rat(g, b.hi) < 0;
  if (!za || !zb) return false;
  // both are roots of g; equal iff they share an isolating interval of g
  auto gr = isolate_real_roots(g);
  auto locate = [&](RootInterval& r) -> std::size_t {
    for (;;) {
      for (std::size_t i = 0; i < gr.size(); ++i)
        if (gr[i].lo <= r.lo && r.hi <= gr[i].hi) return i;
      refine(r);
    }
  };
  return locate(a) == locate(b);
}

// Total order; -1, 0, or 1.
inline int algebraic_compare(RootInterval& a, RootInterval& b) {
  if (algebraic_equal(a, b)) return 0;
  for (;;) {
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    refine(a);
    refine(b);
  }
}

}  // namespace apoly
