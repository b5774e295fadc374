#pragma once

#include <vector>

#include "apoly/apoly.hpp"
#include "apoly/assignment.hpp"
#include "apoly/poly.hpp"
#include "apoly/upoly.hpp"

namespace apoly {

// The angle-polynomial derivations are written once over a coefficient
// ring R and instantiated three ways: exact integers (the table build),
// coefficient vectors mod p (identity verification), and plain values at a
// fixed parameter mod p (orbit fingerprints).  R supplies scalar ops (V)
// and polynomial ops (P).

struct IntRing {
  using V = Int;
  using P = Poly;
  static constexpr bool check_degenerate = true;

  V v_from_int(const Int& x) const { return x; }
  V vadd(const V& a, const V& b) const { return a + b; }
  V vsub(const V& a, const V& b) const { return a - b; }
  V vmul(const V& a, const V& b) const { return a * b; }
  V vneg(const V& a) const { return -a; }
  V vzero() const { return 0; }
  bool vis_zero(const V& a) const { return a == 0; }

  P pzero() const { return {}; }
  P pmake(std::vector<V> c) const {
    Poly p(std::move(c));
    trim(p);
    return p;
  }
  P padd(const P& a, const P& b) const { return add(a, b); }
  P psub(const P& a, const P& b) const { return sub(a, b); }
  P pmul(const P& a, const P& b) const { return mul(a, b); }
  P pneg(const P& a) const { return neg(a); }
};

struct ZpRing {
  Fp fp;
  using V = uint64_t;
  using P = ZpPoly;
  static constexpr bool check_degenerate = false;

  V v_from_int(const Int& x) const { return mpz_fdiv_ui(x.get_mpz_t(), fp.p); }
  V vadd(V a, V b) const { return fp.add(a, b); }
  V vsub(V a, V b) const { return fp.sub(a, b); }
  V vmul(V a, V b) const { return fp.mul(a, b); }
  V vneg(V a) const { return fp.neg(a); }
  V vzero() const { return 0; }
  bool vis_zero(V a) const { return a == 0; }

  P pzero() const { return {}; }
  P pmake(std::vector<V> c) const {
    ZpPoly p(std::move(c));
    zp_trim(p);
    return p;
  }
  P padd(const P& a, const P& b) const { return zp_add(a, b, fp); }
  P psub(const P& a, const P& b) const { return zp_sub(a, b, fp); }
  P pmul(const P& a, const P& b) const { return zp_mul(a, b, fp); }
  P pneg(const P& a) const { return zp_scale(a, fp.p - 1, fp); }
};

// Values of the polynomial at one fixed parameter value t, mod p.
struct ZpPointRing {
  Fp fp;
  uint64_t t;
  using V = uint64_t;
  using P = uint64_t;
  static constexpr bool check_degenerate = false;

  V v_from_int(const Int& x) const { return mpz_fdiv_ui(x.get_mpz_t(), fp.p); }
  V vadd(V a, V b) const { return fp.add(a, b); }
  V vsub(V a, V b) const { return fp.sub(a, b); }
  V vmul(V a, V b) const { return fp.mul(a, b); }
  V vneg(V a) const { return fp.neg(a); }
  V vzero() const { return 0; }
  bool vis_zero(V a) const { return a == 0; }

  P pzero() const { return 0; }
  P pmake(std::vector<V> c) const {
    uint64_t r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = fp.add(fp.mul(r, t), c[i]);
    return r;
  }
  P padd(P a, P b) const { return fp.add(a, b); }
  P psub(P a, P b) const { return fp.sub(a, b); }
  P pmul(P a, P b) const { return fp.mul(a, b); }
  P pneg(P a) const { return fp.neg(a); }
};

template <class R>
struct RingCoords {
  std::vector<Vec3<typename R::V>> o, r;

  const Vec3<typename R::V>& get(Side s, uint16_t i) const {
    return (s == Side::O ? o : r)[i];
  }
};

template <class R>
RingCoords<R> convert_coords(const R& rg, const IntCoords& c) {
  RingCoords<R> out;
  out.o.reserve(c.o.size());
  out.r.reserve(c.r.size());
  for (const auto& v : c.o)
    out.o.push_back({rg.v_from_int(v.x), rg.v_from_int(v.y), rg.v_from_int(v.z)});
  for (const auto& v : c.r)
    out.r.push_back({rg.v_from_int(v.x), rg.v_from_int(v.y), rg.v_from_int(v.z)});
  return out;
}

namespace detail {

template <class R>
using VV = Vec3<typename R::V>;

template <class R>
struct PVec3 {
  typename R::P x, y, z;
};

template <class R>
VV<R> vcross(const R& rg, const VV<R>& a, const VV<R>& b) {
  return {rg.vsub(rg.vmul(a.y, b.z), rg.vmul(a.z, b.y)),
          rg.vsub(rg.vmul(a.z, b.x), rg.vmul(a.x, b.z)),
          rg.vsub(rg.vmul(a.x, b.y), rg.vmul(a.y, b.x))};
}

template <class R>
typename R::V vdot(const R& rg, const VV<R>& a, const VV<R>& b) {
  return rg.vadd(rg.vadd(rg.vmul(a.x, b.x), rg.vmul(a.y, b.y)), rg.vmul(a.z, b.z));
}

template <class R>
VV<R> vsub3(const R& rg, const VV<R>& a, const VV<R>& b) {
  return {rg.vsub(a.x, b.x), rg.vsub(a.y, b.y), rg.vsub(a.z, b.z)};
}

template <class R>
typename R::V vtriple(const R& rg, const VV<R>& a, const VV<R>& b, const VV<R>& c) {
  return vdot(rg, vcross(rg, a, b), c);
}

// Theta-hat: (1+t^2) * Theta(t), the cleared rational rotation.
template <class R>
PVec3<R> theta_hat(const R& rg, const VV<R>& p) {
  return {rg.pmake({p.x, rg.vneg(rg.vadd(p.y, p.y)), rg.vneg(p.x)}),
          rg.pmake({p.y, rg.vadd(p.x, p.x), rg.vneg(p.y)}),
          rg.pmake({p.z, rg.vzero(), p.z})};
}

template <class R>
PVec3<R> embed(const R& rg, const VV<R>& p) {
  return {rg.pmake({p.x}), rg.pmake({p.y}), rg.pmake({p.z})};
}

// p * (1+t^2)
template <class R>
PVec3<R> embed_t2(const R& rg, const VV<R>& p) {
  return {rg.pmake({p.x, rg.vzero(), p.x}), rg.pmake({p.y, rg.vzero(), p.y}),
          rg.pmake({p.z, rg.vzero(), p.z})};
}

template <class R>
typename R::P one_plus_t2(const R& rg) {
  using V = typename R::V;
  V one = rg.v_from_int(Int(1));
  return rg.pmake({one, rg.vzero(), one});
}

template <class R>
typename R::P pdot(const R& rg, const PVec3<R>& a, const PVec3<R>& b) {
  return rg.padd(rg.padd(rg.pmul(a.x, b.x), rg.pmul(a.y, b.y)), rg.pmul(a.z, b.z));
}

template <class R>
PVec3<R> pcross(const R& rg, const PVec3<R>& a, const PVec3<R>& b) {
  return {rg.psub(rg.pmul(a.y, b.z), rg.pmul(a.z, b.y)),
          rg.psub(rg.pmul(a.z, b.x), rg.pmul(a.x, b.z)),
          rg.psub(rg.pmul(a.x, b.y), rg.pmul(a.y, b.x))};
}

template <class R>
PVec3<R> psub3(const R& rg, const PVec3<R>& a, const PVec3<R>& b) {
  return {rg.psub(a.x, b.x), rg.psub(a.y, b.y), rg.psub(a.z, b.z)};
}

template <class R>
typename R::P det3(const R& rg, const PVec3<R>& a, const PVec3<R>& b, const PVec3<R>& c) {
  return pdot(rg, pcross(rg, a, b), c);
}

template <class R>
struct Row {
  PVec3<R> n;
  typename R::P k;
};

// Cleared contact polynomial row n(t).d + k(t) for a 1-contact element.
template <class R>
Row<R> contact_row(const R& rg, const RingCoords<R>& c, const Element& e) {
  Row<R> row;
  if (e.no == 3 && e.nr == 1) {
    // facet of O against vertex of R: u = (o_i - o_j) x (o_h - o_j)
    const auto &oh = c.get(Side::O, e.o[0]), &oi = c.get(Side::O, e.o[1]),
               &oj = c.get(Side::O, e.o[2]);
    VV<R> u = vcross(rg, vsub3(rg, oi, oj), vsub3(rg, oh, oj));
    if constexpr (R::check_degenerate) {
      if (rg.vis_zero(u.x) && rg.vis_zero(u.y) && rg.vis_zero(u.z))
        throw Error("degenerate feature: collinear facet " + to_string(e));
    }
    row.n = embed_t2(rg, u);
    row.k = rg.psub(pdot(rg, embed(rg, u), theta_hat(rg, c.get(Side::R, e.r[0]))),
                    [&] {
                      auto d = vdot(rg, u, oj);
                      return rg.pmake({d, rg.vzero(), d});
                    }());
  } else if (e.no == 1 && e.nr == 3) {
    // vertex of O against facet of R: u = (r_i - r_k) x (r_j - r_k)
    const auto &ri = c.get(Side::R, e.r[0]), &rj = c.get(Side::R, e.r[1]),
               &rk = c.get(Side::R, e.r[2]);
    VV<R> u = vcross(rg, vsub3(rg, ri, rk), vsub3(rg, rj, rk));
    if constexpr (R::check_degenerate) {
      if (rg.vis_zero(u.x) && rg.vis_zero(u.y) && rg.vis_zero(u.z))
        throw Error("degenerate feature: collinear facet " + to_string(e));
    }
    row.n = theta_hat(rg, u);
    auto urk = vdot(rg, u, rk);
    row.k = rg.psub(rg.pmake({urk, rg.vzero(), urk}),
                    pdot(rg, embed(rg, c.get(Side::O, e.o[0])), theta_hat(rg, u)));
  } else if (e.no == 2 && e.nr == 2) {
    // edge-edge: u = o_h - o_i, v = r_j - r_k, w = r_j x r_k
    const auto &oh = c.get(Side::O, e.o[0]), &oi = c.get(Side::O, e.o[1]);
    const auto &rj = c.get(Side::R, e.r[0]), &rk = c.get(Side::R, e.r[1]);
    VV<R> u = vsub3(rg, oh, oi);
    VV<R> v = vsub3(rg, rj, rk);
    VV<R> w = vcross(rg, rj, rk);
    row.n = pcross(rg, embed(rg, u), theta_hat(rg, v));
    row.k = rg.padd(pdot(rg, embed(rg, u), theta_hat(rg, w)),
                    pdot(rg, embed(rg, vcross(rg, u, oi)), theta_hat(rg, v)));
  } else {
    throw Error("contact_row: not a 1-contact element");
  }
  return row;
}

// Line of configurations of a 2-contact: d = lambda*u + v.
template <class R>
struct ContactLine {
  PVec3<R> u, v;
};

template <class R>
ContactLine<R> contact_line(const R& rg, const RingCoords<R>& c, const Element& e) {
  ContactLine<R> line;
  if (e.no == 2 && e.nr == 1) {
    // o_h o_i - r_j: direction o_i - o_h, point o_i - Theta r_j
    const auto &oh = c.get(Side::O, e.o[0]), &oi = c.get(Side::O, e.o[1]);
    line.u = embed_t2(rg, vsub3(rg, oi, oh));
    line.v = psub3(rg, embed_t2(rg, oi), theta_hat(rg, c.get(Side::R, e.r[0])));
  } else if (e.no == 1 && e.nr == 2) {
    // o_h - r_i r_j: direction Theta(r_i - r_j), point o_h - Theta r_i
    const auto &ri = c.get(Side::R, e.r[0]), &rj = c.get(Side::R, e.r[1]);
    line.u = theta_hat(rg, vsub3(rg, ri, rj));
    line.v = psub3(rg, embed_t2(rg, c.get(Side::O, e.o[0])), theta_hat(rg, ri));
  } else {
    throw Error("contact_line: not a 2-contact element");
  }
  return line;
}

// The two points whose difference spans a 2-contact's line (for the
// two-2-contact volume form).
template <class R>
std::pair<PVec3<R>, PVec3<R>> line_points(const R& rg, const RingCoords<R>& c, const Element& e) {
  if (e.no == 2 && e.nr == 1) {
    PVec3<R> p1 = psub3(rg, embed_t2(rg, c.get(Side::O, e.o[0])),
                        theta_hat(rg, c.get(Side::R, e.r[0])));
    PVec3<R> p2 = psub3(rg, embed_t2(rg, c.get(Side::O, e.o[1])),
                        theta_hat(rg, c.get(Side::R, e.r[0])));
    return {p1, p2};
  }
  if (e.no == 1 && e.nr == 2) {
    PVec3<R> p1 = psub3(rg, embed_t2(rg, c.get(Side::O, e.o[0])),
                        theta_hat(rg, c.get(Side::R, e.r[0])));
    PVec3<R> p2 = psub3(rg, embed_t2(rg, c.get(Side::O, e.o[0])),
                        theta_hat(rg, c.get(Side::R, e.r[1])));
    return {p1, p2};
  }
  throw Error("line_points: not a 2-contact element");
}

// Normal of a minor element (the d-coefficient vector of a contact type).
template <class R>
PVec3<R> minor_normal(const R& rg, const RingCoords<R>& c, const Element& e) {
  if (e.no == 3 && e.nr == 0) {
    const auto &oi = c.get(Side::O, e.o[0]), &oj = c.get(Side::O, e.o[1]),
               &ok = c.get(Side::O, e.o[2]);
    VV<R> n = vcross(rg, vsub3(rg, oj, oi), vsub3(rg, ok, oi));
    if constexpr (R::check_degenerate) {
      if (rg.vis_zero(n.x) && rg.vis_zero(n.y) && rg.vis_zero(n.z))
        throw Error("degenerate feature: collinear facet " + to_string(e));
    }
    return embed(rg, n);
  }
  if (e.no == 0 && e.nr == 3) {
    const auto &ri = c.get(Side::R, e.r[0]), &rj = c.get(Side::R, e.r[1]),
               &rk = c.get(Side::R, e.r[2]);
    VV<R> n = vcross(rg, vsub3(rg, rj, ri), vsub3(rg, rk, ri));
    if constexpr (R::check_degenerate) {
      if (rg.vis_zero(n.x) && rg.vis_zero(n.y) && rg.vis_zero(n.z))
        throw Error("degenerate feature: collinear facet " + to_string(e));
    }
    return theta_hat(rg, n);
  }
  if (e.no == 2 && e.nr == 2) {
    VV<R> u = vsub3(rg, c.get(Side::O, e.o[1]), c.get(Side::O, e.o[0]));
    VV<R> v = vsub3(rg, c.get(Side::R, e.r[1]), c.get(Side::R, e.r[0]));
    return pcross(rg, embed(rg, u), theta_hat(rg, v));
  }
  throw Error("minor_normal: bad element");
}

}  // namespace detail

// The raw (cleared, unnormalized) univariate of an a-poly under integer
// coordinates, over any ring.  The same formulas produce the exact integer
// polynomial, its mod-p image, and point values, so all three views agree.
template <class R>
typename R::P raw_univariate(const R& rg, const APoly& a, const RingCoords<R>& c) {
  using namespace detail;
  KindInfo ki = classify_kind(a);
  switch (ki.kind) {
    case Kind::Contacts:
      switch (ki.profile) {
        case ContactProfile::FourSingles: {
          Row<R> rows[4] = {contact_row(rg, c, a[0]), contact_row(rg, c, a[1]),
                            contact_row(rg, c, a[2]), contact_row(rg, c, a[3])};
          // expansion of det[n | k] along the k column
          auto m = [&](int x, int y, int z) {
            return det3(rg, rows[x].n, rows[y].n, rows[z].n);
          };
          typename R::P acc = rg.pmul(rows[0].k, m(1, 2, 3));
          acc = rg.psub(acc, rg.pmul(rows[1].k, m(0, 2, 3)));
          acc = rg.padd(acc, rg.pmul(rows[2].k, m(0, 1, 3)));
          acc = rg.psub(acc, rg.pmul(rows[3].k, m(0, 1, 2)));
          return acc;
        }
        case ContactProfile::TripleSingle: {
          // d = o_h - Theta r_k substituted into the 1-contact row
          const Element& tc = a[0];
          PVec3<R> d = psub3(rg, embed_t2(rg, c.get(Side::O, tc.o[0])),
                             theta_hat(rg, c.get(Side::R, tc.r[0])));
          Row<R> row = contact_row(rg, c, a[1]);
          return rg.padd(pdot(rg, row.n, d), rg.pmul(row.k, one_plus_t2(rg)));
        }
        case ContactProfile::TwoDoubles: {
          auto [p1, p2] = line_points(rg, c, a[0]);
          auto [p3, p4] = line_points(rg, c, a[1]);
          return det3(rg, psub3(rg, p2, p1), psub3(rg, p3, p1), psub3(rg, p4, p1));
        }
        case ContactProfile::DoubleSingle: {
          ContactLine<R> line = contact_line(rg, c, a[0]);
          Row<R> r1 = contact_row(rg, c, a[1]);
          Row<R> r2 = contact_row(rg, c, a[2]);
          auto lam_num = [&](const Row<R>& row) {
            return rg.padd(pdot(rg, row.n, line.v), rg.pmul(row.k, one_plus_t2(rg)));
          };
          auto lam_den = [&](const Row<R>& row) { return pdot(rg, row.n, line.u); };
          return rg.psub(rg.pmul(lam_num(r1), lam_den(r2)), rg.pmul(lam_num(r2), lam_den(r1)));
        }
        default:
          throw Error("raw_univariate: bad profile");
      }
    case Kind::Parallel: {
      // directions of the involved edges, split by side
      std::vector<VV<R>> od, rd;
      if (a.count == 1) {
        const Element& e = a[0];
        if (e.no == 2) {
          od.push_back(vsub3(rg, c.get(Side::O, e.o[1]), c.get(Side::O, e.o[0])));
          rd.push_back(vsub3(rg, c.get(Side::R, e.r[1]), c.get(Side::R, e.r[0])));
          rd.push_back(vsub3(rg, c.get(Side::R, e.r[2]), c.get(Side::R, e.r[0])));
        } else {
          od.push_back(vsub3(rg, c.get(Side::O, e.o[1]), c.get(Side::O, e.o[0])));
          od.push_back(vsub3(rg, c.get(Side::O, e.o[2]), c.get(Side::O, e.o[0])));
          rd.push_back(vsub3(rg, c.get(Side::R, e.r[1]), c.get(Side::R, e.r[0])));
        }
      } else {
        for (const Element& e : a) {
          if (e.no == 2)
            od.push_back(vsub3(rg, c.get(Side::O, e.o[1]), c.get(Side::O, e.o[0])));
          else
            rd.push_back(vsub3(rg, c.get(Side::R, e.r[1]), c.get(Side::R, e.r[0])));
        }
      }
      switch (rd.size()) {
        case 0:
          return rg.pmake({vtriple(rg, od[0], od[1], od[2])});
        case 1:
          return pdot(rg, theta_hat(rg, rd[0]), embed(rg, vcross(rg, od[0], od[1])));
        case 2:
          return pdot(rg, theta_hat(rg, vcross(rg, rd[0], rd[1])), embed(rg, od[0]));
        default:
          return rg.pmake({vtriple(rg, rd[0], rd[1], rd[2])});
      }
    }
    case Kind::Minor: {
      PVec3<R> n1 = minor_normal(rg, c, a[0]);
      PVec3<R> n2 = minor_normal(rg, c, a[1]);
      PVec3<R> n3 = minor_normal(rg, c, a[2]);
      return det3(rg, n1, n2, n3);
    }
  }
  throw Error("raw_univariate: unreachable");
}

// Exact normalized angle polynomial: all (1+t^2) factors stripped, content
// removed, positive leading coefficient.
inline Poly univariate_from_apoly(const APoly& a, const IntCoords& coords) {
  IntRing rg;
  RingCoords<IntRing> rc;
  rc.o = coords.o;
  rc.r = coords.r;
  return normalize_angle_poly(raw_univariate(rg, a, rc));
}

// Rational rotation: \Theta(t) p, exact.
inline QVec3 rotate_point(const Rat& t, const QVec3& p) {
  Rat den = 1 + t * t;
  return {((1 - t * t) * p.x - 2 * t * p.y) / den, (2 * t * p.x + (1 - t * t) * p.y) / den, p.z};
}

// Cleared contact polynomial of a single 1-contact, as explicit
// coefficient polynomials: n(t).d + k(t).
struct ContactPolynomial {
  std::array<Poly, 3> n;
  Poly k;

  // exact value at a configuration (t, d), scaled by (1+t^2)
  Rat eval(const Rat& t, const QVec3& d) const {
    Rat acc = eval_k(t);
    acc += apoly::eval(n[0], t) * d.x;
    acc += apoly::eval(n[1], t) * d.y;
    acc += apoly::eval(n[2], t) * d.z;
    return acc;
  }
  Rat eval_k(const Rat& t) const { return apoly::eval(k, t); }
};

inline ContactPolynomial contact_polynomial(const Element& one_contact, const IntCoords& coords) {
  IntRing rg;
  RingCoords<IntRing> rc;
  rc.o = coords.o;
  rc.r = coords.r;
  auto row = detail::contact_row(rg, rc, one_contact);
  return {{row.n.x, row.n.y, row.n.z}, row.k};
}

}  // namespace apoly
