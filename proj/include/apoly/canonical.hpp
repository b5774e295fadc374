#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>

#include "apoly/apoly.hpp"

namespace apoly {

// Side-preserving vertex bijection between two a-polys, stored over the
// source's vertex lists (at most 12 vertices per side).
struct VertexBijection {
  std::array<uint16_t, 12> o_verts{}, r_verts{};  // sorted source vertices
  std::array<uint16_t, 12> o_to{}, r_to{};        // images
  uint8_t no = 0, nr = 0;

  uint16_t map(Side s, uint16_t v) const {
    const auto& verts = s == Side::O ? o_verts : r_verts;
    const auto& to = s == Side::O ? o_to : r_to;
    uint8_t n = s == Side::O ? no : nr;
    for (uint8_t i = 0; i < n; ++i)
      if (verts[i] == v) return to[i];
    throw Error("bijection does not cover vertex");
  }

  uint16_t inv(Side s, uint16_t image) const {
    const auto& verts = s == Side::O ? o_verts : r_verts;
    const auto& to = s == Side::O ? o_to : r_to;
    uint8_t n = s == Side::O ? no : nr;
    for (uint8_t i = 0; i < n; ++i)
      if (to[i] == image) return verts[i];
    throw Error("bijection does not cover image vertex");
  }
};

namespace detail {

struct VertexList {
  std::array<uint16_t, 12> v{};
  uint8_t n = 0;

  void insert_sorted(uint16_t x) {
    uint8_t i = 0;
    while (i < n && v[i] < x) ++i;
    if (i < n && v[i] == x) return;
    for (uint8_t j = n; j > i; --j) v[j] = v[j - 1];
    v[i] = x;
    ++n;
  }
  int find(uint16_t x) const {
    for (uint8_t i = 0; i < n; ++i)
      if (v[i] == x) return i;
    return -1;
  }
};

inline void collect_vertices(const APoly& a, VertexList& os, VertexList& rs) {
  for (const Element& e : a) {
    for (uint8_t i = 0; i < e.no; ++i) os.insert_sorted(e.o[i]);
    for (uint8_t i = 0; i < e.nr; ++i) rs.insert_sorted(e.r[i]);
  }
}

}  // namespace detail

inline APoly apply_bijection(const APoly& a, const VertexBijection& bij) {
  APoly out;
  for (const Element& e : a) {
    Element ne;
    for (uint8_t i = 0; i < e.no; ++i) ne.push_o(bij.map(Side::O, e.o[i]));
    for (uint8_t i = 0; i < e.nr; ++i) ne.push_r(bij.map(Side::R, e.r[i]));
    std::sort(ne.o.begin(), ne.o.begin() + ne.no);
    std::sort(ne.r.begin(), ne.r.begin() + ne.nr);
    out.push(ne);
  }
  out.sort_elements();
  return out;
}

inline VertexBijection inverse_bijection(const VertexBijection& bij) {
  VertexBijection inv;
  inv.no = bij.no;
  inv.nr = bij.nr;
  for (uint8_t i = 0; i < bij.no; ++i) {
    inv.o_verts[i] = bij.o_to[i];
    inv.o_to[i] = bij.o_verts[i];
  }
  for (uint8_t i = 0; i < bij.nr; ++i) {
    inv.r_verts[i] = bij.r_to[i];
    inv.r_to[i] = bij.r_verts[i];
  }
  // keep verts sorted for the linear scans
  for (uint8_t i = 1; i < inv.no; ++i)
    for (uint8_t j = i; j > 0 && inv.o_verts[j] < inv.o_verts[j - 1]; --j) {
      std::swap(inv.o_verts[j], inv.o_verts[j - 1]);
      std::swap(inv.o_to[j], inv.o_to[j - 1]);
    }
  for (uint8_t i = 1; i < inv.nr; ++i)
    for (uint8_t j = i; j > 0 && inv.r_verts[j] < inv.r_verts[j - 1]; --j) {
      std::swap(inv.r_verts[j], inv.r_verts[j - 1]);
      std::swap(inv.r_to[j], inv.r_to[j - 1]);
    }
  return inv;
}

struct Representative {
  APoly rep;
  VertexBijection bij;  // source vertices -> canonical o_i / r_i
};

// Maps an a-poly to its equivalence-class representative.  Considers the
// element permutations that preserve the (|L_O|+|L_R|, |L_O|) ordering,
// labels each by the vertex indicators in decreasing order (O list then R
// list), keeps the permutations with the largest label, and among those
// returns the lexicographically smallest relabeled output.
inline Representative representative_of(const APoly& a) {
  detail::VertexList os, rs;
  detail::collect_vertices(a, os, rs);
  const uint8_t n = a.count;

  // element blocks of equal (size, |L_O|)
  std::array<uint8_t, 4> perm{}, block_of{};
  for (uint8_t i = 0; i < n; ++i) {
    perm[i] = i;
    block_of[i] = (i > 0 && a[i].size() == a[i - 1].size() && a[i].no == a[i - 1].no)
                      ? block_of[i - 1]
                      : i;
  }

  struct Candidate {
    std::array<uint8_t, 24> label;
    uint8_t label_len = 0;
    APoly out;
    VertexBijection bij;
  };
  bool have_best = false;
  Candidate best;

  auto consider = [&](const std::array<uint8_t, 4>& p) {
    // indicator per vertex: bit (n-1-k) set iff the vertex occurs in the
    // k-th element of the permuted order
    std::array<uint8_t, 12> oind{}, rind{};
    for (uint8_t k = 0; k < n; ++k) {
      const Element& e = a[p[k]];
      uint8_t bit = static_cast<uint8_t>(1u << (n - 1 - k));
      for (uint8_t i = 0; i < e.no; ++i)
        oind[static_cast<std::size_t>(os.find(e.o[i]))] |= bit;
      for (uint8_t i = 0; i < e.nr; ++i)
        rind[static_cast<std::size_t>(rs.find(e.r[i]))] |= bit;
    }
    std::array<uint8_t, 24> label{};
    uint8_t len = 0;
    {
      std::array<uint8_t, 12> tmp{};
      for (uint8_t i = 0; i < os.n; ++i) tmp[i] = oind[i];
      std::sort(tmp.begin(), tmp.begin() + os.n, std::greater<uint8_t>());
      for (uint8_t i = 0; i < os.n; ++i) label[len++] = tmp[i];
      for (uint8_t i = 0; i < rs.n; ++i) tmp[i] = rind[i];
      std::sort(tmp.begin(), tmp.begin() + rs.n, std::greater<uint8_t>());
      for (uint8_t i = 0; i < rs.n; ++i) label[len++] = tmp[i];
    }
    int cmp = 0;
    if (have_best) {
      for (uint8_t i = 0; i < len && cmp == 0; ++i)
        cmp = label[i] < best.label[i] ? -1 : (label[i] > best.label[i] ? 1 : 0);
      if (cmp < 0) return;
    }
    // relabel: i-th vertex in decreasing indicator order becomes index i
    VertexBijection bij;
    bij.no = os.n;
    bij.nr = rs.n;
    {
      std::array<uint8_t, 12> order{}, pos{};
      for (uint8_t i = 0; i < os.n; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.begin() + os.n,
                       [&](uint8_t x, uint8_t y) { return oind[x] > oind[y]; });
      for (uint8_t i = 0; i < os.n; ++i) pos[order[i]] = i;
      for (uint8_t i = 0; i < os.n; ++i) {
        bij.o_verts[i] = os.v[i];
        bij.o_to[i] = pos[i];
      }
      for (uint8_t i = 0; i < rs.n; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.begin() + rs.n,
                       [&](uint8_t x, uint8_t y) { return rind[x] > rind[y]; });
      for (uint8_t i = 0; i < rs.n; ++i) pos[order[i]] = i;
      for (uint8_t i = 0; i < rs.n; ++i) {
        bij.r_verts[i] = rs.v[i];
        bij.r_to[i] = pos[i];
      }
    }
    APoly out = apply_bijection(a, bij);
    if (!have_best || cmp > 0 || out < best.out) {
      best.label = label;
      best.label_len = len;
      best.out = out;
      best.bij = bij;
      have_best = true;
    }
  };

  // iterate the product of per-block permutations (odometer)
  std::array<std::pair<uint8_t, uint8_t>, 4> blocks{};
  int nb = 0;
  for (uint8_t i = 0; i < n;) {
    uint8_t j = i;
    while (j < n && block_of[j] == block_of[i]) ++j;
    blocks[static_cast<std::size_t>(nb++)] = {i, j};
    i = j;
  }
  std::array<uint8_t, 4> p = perm;
  for (;;) {
    consider(p);
    int k = 0;
    while (k < nb) {
      auto [b, e] = blocks[static_cast<std::size_t>(k)];
      if (std::next_permutation(p.begin() + b, p.begin() + e)) break;
      ++k;
    }
    if (k == nb) break;
  }

  return {best.out, best.bij};
}

inline bool is_equivalent(const APoly& a, const APoly& b) {
  return representative_of(a).rep == representative_of(b).rep;
}

// --- orbit enumeration ----------------------------------------------------

// Relabelings of a canonical a-poly (contiguous vertices 0..l, 0..m): all
// side-preserving permutations, quotiented by the interchangeability of
// same-indicator vertices (swapping vertices with identical element
// membership fixes the a-poly, so images within such a group are assigned
// in increasing order).
struct RelabelMaps {
  std::array<uint8_t, 12> o{}, r{};
  uint8_t no = 0, nr = 0;
};

namespace detail {

struct IndicatorGroups {
  // groups[i] = list of vertex indices with equal indicator, each ascending
  std::array<std::array<uint8_t, 12>, 12> groups{};
  std::array<uint8_t, 12> group_size{};
  uint8_t ngroups = 0;
  uint8_t nverts = 0;
};

inline IndicatorGroups indicator_groups(const APoly& a, Side s) {
  IndicatorGroups g;
  int maxi = a.max_index(s);
  if (maxi < 0 || maxi == 0xffff) return g;
  g.nverts = static_cast<uint8_t>(maxi + 1);
  std::array<uint8_t, 12> ind{};
  for (uint8_t k = 0; k < a.count; ++k) {
    const Element& e = a[k];
    const auto& list = s == Side::O ? e.o : e.r;
    uint8_t n = s == Side::O ? e.no : e.nr;
    for (uint8_t i = 0; i < n; ++i) ind[list[i]] |= static_cast<uint8_t>(1u << k);
  }
  std::array<int, 256> seen;
  seen.fill(-1);
  for (uint8_t v = 0; v < g.nverts; ++v) {
    int gi = seen[ind[v]];
    if (gi < 0) {
      gi = g.ngroups++;
      seen[ind[v]] = gi;
    }
    g.groups[static_cast<std::size_t>(gi)][g.group_size[static_cast<std::size_t>(gi)]++] =
        v;
  }
  return g;
}

template <class F>
void enumerate_side(const IndicatorGroups& g, uint8_t gi, uint16_t used,
                    std::array<uint8_t, 12>& map, F&& emit) {
  if (gi == g.ngroups) {
    emit();
    return;
  }
  uint8_t size = g.group_size[gi];
  const auto& members = g.groups[gi];
  // choose an ascending image subset of the unused labels
  std::array<uint8_t, 12> chosen{};
  auto rec = [&](auto&& self, uint8_t start, uint8_t k) -> void {
    if (k == size) {
      uint16_t used2 = used;
      for (uint8_t i = 0; i < size; ++i) used2 |= static_cast<uint16_t>(1u << chosen[i]);
      for (uint8_t i = 0; i < size; ++i) map[members[i]] = chosen[i];
      enumerate_side(g, static_cast<uint8_t>(gi + 1), used2, map, emit);
      return;
    }
    for (uint8_t v = start; v < g.nverts; ++v) {
      if (used & (1u << v)) continue;
      chosen[k] = v;
      self(self, static_cast<uint8_t>(v + 1), static_cast<uint8_t>(k + 1));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// Calls cb(maps) once per distinct relabeled a-poly class member (possibly
// with bounded duplication from element-permutation symmetries).
template <class F>
void enumerate_relabelings(const APoly& a, F&& cb) {
  auto og = detail::indicator_groups(a, Side::O);
  auto rg = detail::indicator_groups(a, Side::R);
  RelabelMaps maps;
  maps.no = og.nverts;
  maps.nr = rg.nverts;
  detail::enumerate_side(og, 0, 0, maps.o, [&] {
    detail::enumerate_side(rg, 0, 0, maps.r, [&] { cb(maps); });
  });
}

inline uint64_t count_relabelings(const APoly& a) {
  auto side_count = [](const detail::IndicatorGroups& g) {
    // multinomial: nverts! / prod group_size!
    uint64_t num = 1;
    for (uint8_t i = 2; i <= g.nverts; ++i) num *= i;
    for (uint8_t i = 0; i < g.ngroups; ++i)
      for (uint8_t k = 2; k <= g.group_size[i]; ++k) num /= k;
    return num;
  };
  return side_count(detail::indicator_groups(a, Side::O)) *
         side_count(detail::indicator_groups(a, Side::R));
}

inline APoly apply_relabel(const APoly& a, const RelabelMaps& m) {
  APoly out;
  for (const Element& e : a) {
    Element ne;
    for (uint8_t i = 0; i < e.no; ++i) ne.push_o(m.o[e.o[i]]);
    for (uint8_t i = 0; i < e.nr; ++i) ne.push_r(m.r[e.r[i]]);
    std::sort(ne.o.begin(), ne.o.begin() + ne.no);
    std::sort(ne.r.begin(), ne.r.begin() + ne.nr);
    out.push(ne);
  }
  out.sort_elements();
  return out;
}

}  // namespace apoly
