#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "apoly/rng.hpp"
#include "apoly/upoly.hpp"

namespace apoly {

namespace detail {

// Primes for the modular image; small enough that p^6 fits in 64 bits.
inline const std::vector<uint32_t>& factor_primes() {
  static const std::vector<uint32_t> ps = {
      3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
      59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
      131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
      211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283,
      293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383,
      389, 397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467,
      479, 487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577,
      587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659, 661,
      673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769,
      773, 787, 797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877,
      881, 883, 887, 907, 911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983,
      991, 997};
  return ps;
}

// Distinct-degree factorization of a monic square-free polynomial mod p.
inline std::vector<std::pair<ZpPoly, int>> zp_ddf(ZpPoly f, const Fp& fp) {
  std::vector<std::pair<ZpPoly, int>> out;
  ZpPoly x = {0, 1};
  ZpPoly h = x;  // x^(p^d) mod f
  for (int d = 1; 2 * d <= zp_degree(f); ++d) {
    h = zp_powmod(h, fp.p, f, fp);
    ZpPoly g = zp_gcd(zp_sub(h, x, fp), f, fp);
    if (zp_degree(g) > 0) {
      out.emplace_back(g, d);
      f = zp_divrem(f, g, fp);
      h = zp_rem(std::move(h), f, fp);
    }
  }
  if (zp_degree(f) > 0) out.emplace_back(f, zp_degree(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting, p odd.
inline void zp_edf(const ZpPoly& f, int d, const Fp& fp, Rng& rng, std::vector<ZpPoly>& out) {
  if (zp_degree(f) == d) {
    out.push_back(zp_monic(f, fp));
    return;
  }
  uint64_t pd = 1;
  for (int i = 0; i < d; ++i) pd *= fp.p;
  for (;;) {
    ZpPoly a(static_cast<std::size_t>(zp_degree(f)), 0);
    for (auto& c : a) c = rng.below(fp.p);
    zp_trim(a);
    if (zp_degree(a) < 1) continue;
    ZpPoly w = zp_powmod(a, (pd - 1) / 2, f, fp);
    w = zp_sub(w, ZpPoly{1}, fp);
    ZpPoly g = zp_gcd(w, f, fp);
    if (zp_degree(g) > 0 && zp_degree(g) < zp_degree(f)) {
      ZpPoly rest = f;
      ZpPoly q = zp_divrem(rest, g, fp);
      zp_edf(g, d, fp, rng, out);
      zp_edf(q, d, fp, rng, out);
      return;
    }
  }
}

inline std::vector<ZpPoly> zp_factor_squarefree(const ZpPoly& f, const Fp& fp, Rng& rng) {
  std::vector<ZpPoly> out;
  for (auto& [g, d] : zp_ddf(zp_monic(f, fp), fp)) zp_edf(g, d, fp, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// --- arithmetic mod m (m a prime power, coefficients in [0, m)) ----------

inline Poly mod_reduce(Poly p, const Int& m) {
  for (auto& c : p) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(p);
  return p;
}

// Symmetric representative in (-m/2, m/2].
inline Poly mod_symmetric(Poly p, const Int& m) {
  Int half = m / 2;
  for (auto& c : p) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(p);
  return p;
}

inline Poly mod_mul(const Poly& a, const Poly& b, const Int& m) {
  return mod_reduce(mul(a, b), m);
}

// Division mod m by b with lc(b) invertible mod m.
inline std::pair<Poly, Poly> mod_divrem(Poly a, const Poly& b, const Int& m) {
  a = mod_reduce(std::move(a), m);
  Poly q;
  if (a.size() < b.size()) return {q, std::move(a)};
  Int linv;
  if (mpz_invert(linv.get_mpz_t(), leading(b).get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error("mod_divrem: leading coefficient not invertible");
  q.assign(a.size() - b.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Int c = a[k + b.size() - 1] * linv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  return {mod_reduce(std::move(q), m), mod_reduce(std::move(a), m)};
}

// Extended gcd of coprime polynomials mod p: s*a + t*b == 1, with
// deg s < deg b and deg t < deg a.
inline void zp_bezout(const ZpPoly& a, const ZpPoly& b, const Fp& fp, ZpPoly& s, ZpPoly& t) {
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0 = {1}, s1 = {};
  ZpPoly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    ZpPoly rem = r0;
    ZpPoly q = zp_divrem(rem, r1, fp);
    r0 = std::move(r1);
    r1 = std::move(rem);
    ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, fp), fp);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, fp), fp);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  uint64_t lin = fp.inv(r0.back());
  s = zp_scale(s0, lin, fp);
  t = zp_scale(t0, lin, fp);
}

inline Poly lift_zp(const ZpPoly& a) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
  trim(r);
  return r;
}

// Quadratic Hensel lift of f == u*v (mod p), u monic, to f == u*v (mod M)
// with M >= target.  Returns (u, v, M).
struct LiftedPair {
  Poly u, v;
  Int modulus;
};

inline LiftedPair hensel_pair(const Poly& f, const ZpPoly& u0, const ZpPoly& v0, const Fp& fp,
                              const Int& target) {
  ZpPoly s0, t0;
  zp_bezout(u0, v0, fp, s0, t0);
  Poly u = lift_zp(u0), v = lift_zp(v0);
  Poly s = lift_zp(s0), t = lift_zp(t0);
  Int m(static_cast<unsigned long>(fp.p));
  while (m < target) {
    Int m2 = m * m;
    Poly e = mod_reduce(sub(f, mul(u, v)), m2);
    auto [q, du] = mod_divrem(mod_mul(t, e, m2), u, m2);
    Poly u2 = mod_reduce(add(u, du), m2);
    Poly v2 = mod_reduce(add(v, add(mod_mul(s, e, m2), mod_mul(q, v, m2))), m2);
    // refresh the Bezout pair for the next doubling
    Poly b = mod_reduce(sub(add(mod_mul(s, u2, m2), mod_mul(t, v2, m2)), constant(1)), m2);
    Poly s_raw = mod_reduce(sub(s, mod_mul(s, b, m2)), m2);
    Poly t_raw = mod_reduce(sub(t, mod_mul(t, b, m2)), m2);
    auto [qs, s2] = mod_divrem(s_raw, v2, m2);
    Poly t2 = mod_reduce(add(t_raw, mod_mul(qs, u2, m2)), m2);
    u = std::move(u2);
    v = std::move(v2);
    s = std::move(s2);
    t = std::move(t2);
    m = m2;
  }
  return {std::move(u), std::move(v), std::move(m)};
}

// Zassenhaus on a primitive square-free polynomial of degree >= 2.
inline std::vector<Poly> factor_squarefree(const Poly& g) {
  const int n = degree(g);
  uint64_t seed = 0x9a0176c3u ^ static_cast<uint64_t>(n);
  for (const auto& c : g) seed = seed * 1099511628211ull + mpz_fdiv_ui(c.get_mpz_t(), 0xffffffffu);

  std::vector<ZpPoly> best;
  uint32_t best_p = 0;
  int tried = 0;
  for (uint32_t p : factor_primes()) {
    if (mpz_fdiv_ui(leading(g).get_mpz_t(), p) == 0) continue;
    Fp fp(p);
    ZpPoly gp = zp_reduce(g, fp);
    if (zp_degree(zp_gcd(gp, zp_derivative(gp, fp), fp)) != 0) continue;
    Rng rng(seed ^ p);
    auto fac = zp_factor_squarefree(gp, fp, rng);
    if (best.empty() || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1 || ++tried >= 4) break;
  }
  if (best.empty()) throw Error("factor_squarefree: no usable prime");
  if (best.size() == 1) return {normalize(g)};

  // Landau-Mignotte style bound on factor coefficients (times lc)
  Int norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Int bound = sqrt(norm2) + 1;
  bound <<= n;
  bound *= abs(leading(g));
  Int target = 2 * bound + 1;

  // peel monic lifted factors: each step lifts mods[i] against the cofactor
  Fp fp(best_p);
  std::vector<Poly> lifted;
  Int modulus(static_cast<unsigned long>(best_p));
  {
    std::vector<ZpPoly> suffix(best.size(), ZpPoly{1});
    for (std::size_t i = best.size() - 1; i-- > 0;)
      suffix[i] = zp_mul(suffix[i + 1], best[i + 1], fp);
    Poly fcur = g;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
      uint64_t lc_mod = zp_reduce(fcur, fp).back();
      ZpPoly v0 = zp_scale(suffix[i], lc_mod, fp);
      LiftedPair lp = hensel_pair(fcur, best[i], v0, fp, target);
      modulus = lp.modulus;
      lifted.push_back(mod_symmetric(lp.u, lp.modulus));
      fcur = mod_symmetric(lp.v, lp.modulus);
    }
    // final cofactor: make it monic mod modulus to join the candidate pool
    Int linv;
    if (mpz_invert(linv.get_mpz_t(), leading(fcur).get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw Error("factor_squarefree: cofactor lc not invertible");
    Poly last = fcur;
    for (auto& c : last) c *= linv;
    lifted.push_back(mod_symmetric(mod_reduce(std::move(last), modulus), modulus));
  }

  // subset recombination (<= 2^6 subsets)
  std::vector<Poly> result;
  std::vector<int> alive(lifted.size(), 1);
  Poly remaining = g;
  int alive_count = static_cast<int>(lifted.size());
  for (int take = 1; take <= alive_count && degree(remaining) >= 1;) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (alive[i]) idx.push_back(static_cast<int>(i));
    int k = static_cast<int>(idx.size());
    if (take > k) break;
    bool found = false;
    std::vector<int> sel(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) sel[static_cast<std::size_t>(i)] = i;
    for (;;) {
      Poly cand = constant(leading(remaining));
      for (int i : sel)
        cand = mod_symmetric(mul(cand, lifted[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]), modulus);
      cand = primitive_part(std::move(cand));
      if (degree(cand) >= 1 && degree(cand) < degree(remaining)) {
        if (auto quo = exact_div(remaining, cand)) {
          result.push_back(normalize(cand));
          remaining = std::move(*quo);
          for (int i : sel) alive[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = 0;
          alive_count -= take;
          found = true;
          break;
        }
      }
      int pos = take - 1;
      while (pos >= 0 && sel[static_cast<std::size_t>(pos)] == k - take + pos) --pos;
      if (pos < 0) break;
      ++sel[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < take; ++j)
        sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (!found) ++take;
  }
  if (degree(remaining) >= 1) result.push_back(normalize(remaining));
  return result;
}

}  // namespace detail

// Factors a nonzero integer polynomial into irreducible primitive factors
// with positive leading coefficients, sorted by (degree, coefficients).
// The product of factors^multiplicities equals the input up to a positive
// rational constant.
inline std::vector<std::pair<Poly, int>> factor_integer(const Poly& f) {
  if (is_zero(f)) throw Error("factor_integer: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly p = primitive_part(f);
  std::size_t shift = 0;
  while (shift < p.size() && p[shift] == 0) ++shift;
  if (shift > 0) {
    p.erase(p.begin(), p.begin() + static_cast<long>(shift));
    out.emplace_back(Poly{0, 1}, static_cast<int>(shift));
  }
  if (degree(p) >= 1) {
    for (auto& [part, mult] : square_free_decomposition(p)) {
      if (degree(part) == 1) {
        out.emplace_back(normalize(part), mult);
      } else {
        for (auto& irr : detail::factor_squarefree(part)) out.emplace_back(irr, mult);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) < degree(b.first);
    return a.first < b.first;
  });
  return out;
}

}  // namespace apoly
