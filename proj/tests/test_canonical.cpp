#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "apoly/canonical.hpp"
#include "apoly/univariate.hpp"
#include "apoly/rng.hpp"

using namespace apoly;

namespace {

IntCoords random_coords(Rng& rng, int n = 12, int64_t bound = 1000) {
  IntCoords c;
  for (int i = 0; i < n; ++i) {
    c.o.push_back({random_int(rng, bound), random_int(rng, bound), random_int(rng, bound)});
    c.r.push_back({random_int(rng, bound), random_int(rng, bound), random_int(rng, bound)});
  }
  return c;
}

// Random a-polys assembled from valid element shapes.
APoly random_apoly(Rng& rng) {
  static const char* pool[] = {
      "(o0-r0r1r2,o1-r0r1r2,o0o1-r0r3,o0o2-r0r4)",
      "(o0-r0r1r2,o1-r3r4r5,o2-r6r7r8,o3-r9r10r11)",
      "(o0-r0r1,o0o1-r2r3,o0o1o2-r4)",
      "(o0-r0r1,o1-r2r3)",
      "(o0-r0,o1o2o3-r1)",
      "(-r0r1,-r2r3,o0o1-)",
      "(o0o1-r0r1r2)",
      "(-r0r1r2,o0o1-r0r3,o0o2-r0r4)",
      "(o0o1-r0r1,o2o3-r0r1,o0o2-r2r3)",
      "(o0-r0r1r2,o0o1-r3r4,o0o1-r5r6,o0o1o2-r7)",
  };
  return parse_apoly(pool[rng.below(std::size(pool))]);
}

// Random side-preserving relabeling with arbitrary image indices.
APoly scramble(Rng& rng, const APoly& a, VertexBijection* out_bij = nullptr) {
  detail::VertexList os, rs;
  detail::collect_vertices(a, os, rs);
  VertexBijection bij;
  bij.no = os.n;
  bij.nr = rs.n;
  auto pick_images = [&](uint8_t n, std::array<uint16_t, 12>& to) {
    std::set<uint16_t> used;
    for (uint8_t i = 0; i < n; ++i) {
      uint16_t v;
      do {
        v = static_cast<uint16_t>(rng.below(90));
      } while (used.count(v));
      used.insert(v);
      to[i] = v;
    }
  };
  for (uint8_t i = 0; i < os.n; ++i) bij.o_verts[i] = os.v[i];
  for (uint8_t i = 0; i < rs.n; ++i) bij.r_verts[i] = rs.v[i];
  pick_images(os.n, bij.o_to);
  pick_images(rs.n, bij.r_to);
  if (out_bij) *out_bij = bij;
  return apply_bijection(a, bij);
}

}  // namespace

TEST_CASE("worked canonicalization example") {
  APoly a = parse_apoly("(o27-r22r66r86,o43-r22r66r86,o27o51-r15r86,o27o43-r75r86)");
  Representative rep = representative_of(a);
  CHECK(to_string(rep.rep) == "(o0-r0r1r2,o1-r0r1r2,o0o1-r0r3,o0o2-r0r4)");
  // the bijection maps the input onto the representative
  CHECK(apply_bijection(a, rep.bij) == rep.rep);
  CHECK(rep.bij.map(Side::O, 27) == 0);
  CHECK(rep.bij.map(Side::O, 43) == 1);
  CHECK(rep.bij.map(Side::O, 51) == 2);
  CHECK(rep.bij.map(Side::R, 86) == 0);
  CHECK(rep.bij.map(Side::R, 75) == 3);
  CHECK(rep.bij.map(Side::R, 15) == 4);
}

TEST_CASE("equivalent translated forms share a representative") {
  APoly c1 = parse_apoly("(o0-r0r1,o0o1-r2r3,o0o1o2-r4)");
  APoly c2 = parse_apoly("(o1-r2r3,o0o1-r0r1,o0o1o2-r4)");
  CHECK(is_equivalent(c1, c2));
  // the map o0<->o1, r0r1<->r2r3 sends c1 to c2
  VertexBijection bij;
  bij.no = 3;
  bij.nr = 5;
  for (uint8_t i = 0; i < 3; ++i) bij.o_verts[i] = i;
  for (uint8_t i = 0; i < 5; ++i) bij.r_verts[i] = i;
  bij.o_to = {1, 0, 2};
  bij.r_to = {2, 3, 0, 1, 4};
  CHECK(apply_bijection(c1, bij) == c2);

  APoly c5 = parse_apoly("(o0o2-r4,o0o1-r0r1,o0o1-r2r3)");
  CHECK_FALSE(is_equivalent(c1, c5));
  CHECK(is_equivalent(c1, c1));
}

TEST_CASE("apply_bijection identity and inverse") {
  APoly a = parse_apoly("(o0-r0r1r2,o1-r0r1r2,o0o1-r0r3,o0o2-r0r4)");
  VertexBijection id;
  id.no = 3;
  id.nr = 5;
  for (uint8_t i = 0; i < 3; ++i) id.o_verts[i] = id.o_to[i] = i;
  for (uint8_t i = 0; i < 5; ++i) id.r_verts[i] = id.r_to[i] = i;
  CHECK(apply_bijection(a, id) == a);

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    APoly b = random_apoly(rng);
    VertexBijection bij;
    APoly scrambled = scramble(rng, b, &bij);
    CHECK(apply_bijection(scrambled, inverse_bijection(bij)) == b);
  }

  // incomplete bijection is an error
  VertexBijection partial;
  partial.no = 1;
  partial.nr = 0;
  partial.o_verts[0] = 0;
  partial.o_to[0] = 0;
  CHECK_THROWS_AS(apply_bijection(a, partial), Error);
}

TEST_CASE("representative is idempotent") {
  Rng rng(4);
  for (int i = 0; i < 3000; ++i) {
    APoly a = scramble(rng, random_apoly(rng));
    APoly rep = representative_of(a).rep;
    CHECK(representative_of(rep).rep == rep);
    // contiguous canonical vertices
    detail::VertexList os, rs;
    detail::collect_vertices(rep, os, rs);
    for (uint8_t k = 0; k < os.n; ++k) CHECK(os.v[k] == k);
    for (uint8_t k = 0; k < rs.n; ++k) CHECK(rs.v[k] == k);
  }
}

TEST_CASE("representative is invariant under relabeling") {
  Rng rng(5);
  for (int i = 0; i < 3000; ++i) {
    APoly a = random_apoly(rng);
    APoly rep1 = representative_of(a).rep;
    APoly rep2 = representative_of(scramble(rng, a)).rep;
    CHECK(rep1 == rep2);
  }
}

TEST_CASE("univariate compatibility: bijections transport assignments") {
  Rng rng(6);
  for (int i = 0; i < 400; ++i) {
    APoly a = random_apoly(rng);
    VertexBijection bij;
    APoly b = scramble(rng, a, &bij);
    IntCoords cb = random_coords(rng, 91, 400);
    // pull b's assignment back through the bijection onto a's vertices
    IntCoords ca;
    ca.o.resize(12);
    ca.r.resize(12);
    detail::VertexList os, rs;
    detail::collect_vertices(a, os, rs);
    for (uint8_t k = 0; k < os.n; ++k) ca.o[os.v[k]] = cb.o[bij.map(Side::O, os.v[k])];
    for (uint8_t k = 0; k < rs.n; ++k) ca.r[rs.v[k]] = cb.r[bij.map(Side::R, rs.v[k])];
    CHECK(univariate_from_apoly(a, ca) == univariate_from_apoly(b, cb));
  }
}

TEST_CASE("orbit enumeration covers distinct relabelings") {
  // K4-style four 1-contact a-poly: each R vertex has its own indicator
  APoly a = parse_apoly("(o0-r0r1r2,o0-r0r1r3,o0-r0r2r3,o0-r1r2r3)");
  std::set<std::string> seen;
  uint64_t leaves = 0;
  enumerate_relabelings(a, [&](const RelabelMaps& m) {
    ++leaves;
    seen.insert(to_string(apply_relabel(a, m)));
  });
  CHECK(leaves == count_relabelings(a));
  CHECK(leaves == 24);  // 4 distinct-indicator R vertices, 1 O vertex
  CHECK(seen.size() == 1);  // fully symmetric: every relabeling fixes it

  // two 1-contacts alone do not form a valid a-poly
  CHECK_THROWS_AS(parse_apoly("(o0-r0r1r2,o0-r3r4r5)"), Error);
}

TEST_CASE("orbit enumeration matches brute force on small cases") {
  Rng rng(7);
  const char* cases[] = {
      "(o0-r0r1,o1-r2r3)",
      "(o0-r0,o1o2o3-r1)",
      "(-r0r1,-r2r3,o0o1-)",
      "(o0o1-r0r1r2)",
      "(o0-r0r1,o0o1-r2r3,o0o1o2-r4)",
  };
  for (const char* s : cases) {
    APoly a = parse_apoly(s);
    // brute force: all side permutations, collect distinct sorted images
    detail::VertexList os, rs;
    detail::collect_vertices(a, os, rs);
    std::vector<uint8_t> operm(os.n), rperm(rs.n);
    for (uint8_t i = 0; i < os.n; ++i) operm[i] = i;
    std::set<std::string> brute;
    do {
      for (uint8_t i = 0; i < rs.n; ++i) rperm[i] = i;
      do {
        RelabelMaps m;
        m.no = os.n;
        m.nr = rs.n;
        for (uint8_t i = 0; i < os.n; ++i) m.o[i] = operm[i];
        for (uint8_t i = 0; i < rs.n; ++i) m.r[i] = rperm[i];
        brute.insert(to_string(apply_relabel(a, m)));
      } while (std::next_permutation(rperm.begin(), rperm.end()));
    } while (std::next_permutation(operm.begin(), operm.end()));

    std::set<std::string> grouped;
    enumerate_relabelings(a, [&](const RelabelMaps& m) {
      grouped.insert(to_string(apply_relabel(a, m)));
    });
    INFO("apoly " << s);
    CHECK(grouped == brute);
  }
}
