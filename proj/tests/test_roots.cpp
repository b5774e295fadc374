#include <catch2/catch_amalgamated.hpp>

#include "apoly/factorize.hpp"
#include "apoly/roots.hpp"
#include "apoly/rng.hpp"

using namespace apoly;

namespace {

Poly from_ints(std::initializer_list<long> cs) {
  Poly p;
  for (long c : cs) p.push_back(Int(c));
  trim(p);
  return p;
}

Poly random_squarefree(Rng& rng, int maxdeg) {
  for (;;) {
    int deg = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(maxdeg)));
    Poly p(static_cast<std::size_t>(deg) + 1);
    for (auto& c : p) c = Int(rng.int_in(-60, 60));
    trim(p);
    if (degree(p) < 1) continue;
    if (degree(poly_gcd(p, derivative(p))) == 0) return p;
  }
}

// Test oracle: number of distinct real roots via a Sturm chain over Rat.
int sturm_root_count(const Poly& f) {
  using RPoly = std::vector<Rat>;
  auto rdeg = [](const RPoly& p) { return static_cast<int>(p.size()) - 1; };
  auto rtrim = [](RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto rrem = [&](RPoly a, const RPoly& b) {
    while (rdeg(a) >= rdeg(b) && !a.empty()) {
      Rat c = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
      a.pop_back();
      rtrim(a);
    }
    return a;
  };
  RPoly p0(f.begin(), f.end());
  RPoly p1;
  Poly d = derivative(f);
  p1.assign(d.begin(), d.end());
  std::vector<RPoly> chain = {p0, p1};
  while (rdeg(chain.back()) >= 1) {
    RPoly r = rrem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  auto variations_at = [&](int dir) {
    // sign at +inf (dir=1) or -inf (dir=-1)
    int v = 0, last = 0;
    for (const auto& p : chain) {
      if (p.empty()) continue;
      int s = sign_of(p.back());
      if (rdeg(p) % 2 == 1 && dir < 0) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations_at(-1) - variations_at(1);
}

}  // namespace

TEST_CASE("isolate_real_roots fixed cases") {
  auto r = isolate_real_roots(from_ints({-2, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(Rat(r[0].lo).get_d() < -1.41);
  CHECK(Rat(r[0].hi).get_d() > -1.42 - 0.1);
  CHECK(r[1].lo < Rat(15, 10));
  CHECK(r[1].hi > Rat(14, 10));
  CHECK(isolate_real_roots(from_ints({1, 0, 1})).empty());
  // rational root exactly at a dyadic split point: t*(t^2-4)
  auto r2 = isolate_real_roots(from_ints({0, -4, 0, 1}));
  REQUIRE(r2.size() == 3);
  for (auto& ri : r2) {
    CHECK(sign_at_rat(ri.poly, ri.lo) * sign_at_rat(ri.poly, ri.hi) < 0);
  }
  CHECK(r2[0].hi <= r2[1].lo);
  CHECK(r2[1].hi <= r2[2].lo);
}

TEST_CASE("root count matches Sturm oracle") {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    Poly f = random_squarefree(rng, 6);
    auto roots = isolate_real_roots(f);
    INFO("f = " << to_string(f));
    CHECK(static_cast<int>(roots.size()) == sturm_root_count(f));
    for (std::size_t k = 0; k < roots.size(); ++k) {
      CHECK(sign_at_rat(f, roots[k].lo) * sign_at_rat(f, roots[k].hi) < 0);
      if (k + 1 < roots.size()) CHECK(roots[k].hi <= roots[k + 1].lo);
    }
  }
}

TEST_CASE("refinement preserves the sign change") {
  Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    Poly f = random_squarefree(rng, 6);
    for (auto& root : isolate_real_roots(f)) {
      for (int step = 0; step < 12; ++step) {
        refine(root);
        CHECK(sign_at_rat(f, root.lo) * sign_at_rat(f, root.hi) < 0);
      }
    }
  }
}

TEST_CASE("sign_at fixed cases") {
  Poly f = from_ints({-2, 0, 1});
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 2);
  // f at its own root is zero
  CHECK(sign_at(f, roots[1]) == 0);
  // constants
  CHECK(sign_at(from_ints({5}), roots[1]) == 1);
  CHECK(sign_at(Poly{}, roots[1]) == 0);
  // t at sqrt(2) is positive, at -sqrt(2) negative
  CHECK(sign_at(from_ints({0, 1}), roots[1]) == 1);
  CHECK(sign_at(from_ints({0, 1}), roots[0]) == -1);
}

TEST_CASE("sign_at agrees with midpoint sign after deep refinement") {
  Rng rng(23);
  for (int i = 0; i < 400; ++i) {
    Poly f = random_squarefree(rng, 5);
    Poly g = random_squarefree(rng, 5);
    if (degree(poly_gcd(f, g)) != 0) continue;  // ensure g(root of f) != 0
    for (auto& root : isolate_real_roots(f)) {
      RootInterval probe = root;
      refine_below(probe, Rat(1, Int(1) << 70));
      int expected = sign_at_rat(g, (probe.lo + probe.hi) / 2);
      // the midpoint sign is reliable once g has no root in the interval
      if (detail::rat_interval_sign(g, probe.lo, probe.hi) == 0) continue;
      CHECK(sign_at(g, root) == expected);
    }
  }
}

TEST_CASE("algebraic comparison: 1 < sqrt(2), equality detection") {
  auto r2 = isolate_real_roots(from_ints({-2, 0, 1}));
  auto one = isolate_real_roots(from_ints({-1, 1}));
  REQUIRE(r2.size() == 2);
  REQUIRE(one.size() == 1);
  CHECK(algebraic_compare(one[0], r2[1]) == -1);
  CHECK(algebraic_compare(r2[1], one[0]) == 1);
  CHECK(algebraic_compare(r2[0], one[0]) == -1);
  // same root through different polynomials: sqrt(2) via (t^2-2)(t-5)'s sf part
  Poly g = mul(from_ints({-2, 0, 1}), from_ints({-5, 1}));
  auto rg = isolate_real_roots(square_free_part(g));
  bool found_equal = false;
  for (auto& cand : rg) {
    RootInterval a = r2[1], b = cand;
    if (algebraic_equal(a, b)) found_equal = true;
  }
  CHECK(found_equal);
}

TEST_CASE("registry-style trichotomy on random roots") {
  Rng rng(24);
  std::vector<RootInterval> all;
  for (int i = 0; i < 40; ++i) {
    Poly f = random_squarefree(rng, 4);
    for (auto& root : isolate_real_roots(f)) all.push_back(root);
  }
  for (int trial = 0; trial < 4000; ++trial) {
    std::size_t i = rng.below(all.size()), j = rng.below(all.size()), k = rng.below(all.size());
    int ij = algebraic_compare(all[i], all[j]);
    int ji = algebraic_compare(all[j], all[i]);
    CHECK(ij == -ji);
    if (ij == 0 && algebraic_compare(all[j], all[k]) == 0)
      CHECK(algebraic_compare(all[i], all[k]) == 0);
    if (ij < 0 && algebraic_compare(all[j], all[k]) < 0)
      CHECK(algebraic_compare(all[i], all[k]) < 0);
  }
}
