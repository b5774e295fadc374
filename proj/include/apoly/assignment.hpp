#pragma once

#include <iosfwd>
#include <sstream>
#include <string>
#include <vector>

#include "apoly/apoly.hpp"
#include "apoly/rng.hpp"

namespace apoly {

// Exact coordinates for a set of vertices.  Integer coordinates are what
// the polynomial builders consume; rational inputs are scaled by the global
// common denominator first (every angle-polynomial derivation is
// homogeneous under a global scale, so the normalized result is unchanged).
struct IntCoords {
  std::vector<IVec3> o, r;

  const IVec3& get(Side s, uint16_t i) const { return (s == Side::O ? o : r)[i]; }
};

class VertexAssignment {
 public:
  void set(Side s, uint16_t index, QVec3 v) {
    auto& side = s == Side::O ? o_ : r_;
    if (side.size() <= index) side.resize(index + 1);
    side[index] = {true, std::move(v)};
  }

  bool has(Side s, uint16_t index) const {
    const auto& side = s == Side::O ? o_ : r_;
    return index < side.size() && side[index].first;
  }

  const QVec3& get(Side s, uint16_t index) const {
    const auto& side = s == Side::O ? o_ : r_;
    if (!has(s, index)) throw Error("assignment missing vertex");
    return side[index].second;
  }

  // Clears the global common denominator.
  IntCoords to_int_coords() const {
    Int den = 1;
    for (const auto& side : {&o_, &r_})
      for (const auto& [used, v] : *side)
        if (used)
          for (const Rat* c : {&v.x, &v.y, &v.z})
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c->get_den().get_mpz_t());
    IntCoords out;
    auto conv = [&](const std::vector<std::pair<bool, QVec3>>& side, std::vector<IVec3>& dst) {
      dst.resize(side.size());
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (!side[i].first) continue;
        const QVec3& v = side[i].second;
        dst[i] = {Int(Rat(v.x * den).get_num()), Int(Rat(v.y * den).get_num()),
                  Int(Rat(v.z * den).get_num())};
      }
    };
    conv(o_, out.o);
    conv(r_, out.r);
    return out;
  }

 private:
  std::vector<std::pair<bool, QVec3>> o_, r_;
};

// Uniform integer coordinates in [-bound, bound] for o0..o_max, r0..r_max.
inline IntCoords random_int_coords(Rng& rng, int max_index = 11, int64_t bound = 1 << 20) {
  IntCoords c;
  c.o.resize(static_cast<std::size_t>(max_index) + 1);
  c.r.resize(static_cast<std::size_t>(max_index) + 1);
  for (auto* side : {&c.o, &c.r})
    for (auto& v : *side) v = {random_int(rng, bound), random_int(rng, bound), random_int(rng, bound)};
  return c;
}

inline Rat parse_rat(const std::string& tok) {
  auto bad = [&] { throw Error("bad coordinate '" + tok + "'"); };
  if (tok.empty()) bad();
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (q.set_str(tok, 10) != 0) bad();
    q.canonicalize();
    return q;
  }
  auto dot = tok.find('.');
  if (dot == std::string::npos) {
    Rat q;
    if (q.set_str(tok, 10) != 0) bad();
    return q;
  }
  // exact decimal
  std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
  std::size_t frac = tok.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+") bad();
  Int num;
  if (num.set_str(digits, 10) != 0) bad();
  Int den = 1;
  for (std::size_t i = 0; i < frac; ++i) den *= 10;
  return make_rat(num, den);
}

// Assignment file: one vertex per line, `o<i> x y z` or `r<j> x y z`,
// coordinates as exact decimals or rationals.  '#' starts a comment.
inline VertexAssignment parse_assignment(std::istream& in) {
  VertexAssignment va;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string name, xs, ys, zs;
    if (!(ls >> name)) continue;
    if (!(ls >> xs >> ys >> zs))
      throw Error("assignment line " + std::to_string(lineno) + ": expected 'o<i> x y z'");
    std::string extra;
    if (ls >> extra) throw Error("assignment line " + std::to_string(lineno) + ": trailing tokens");
    if (name.size() < 2 || (name[0] != 'o' && name[0] != 'r'))
      throw Error("assignment line " + std::to_string(lineno) + ": bad vertex name");
    Side s = name[0] == 'o' ? Side::O : Side::R;
    uint16_t idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(name[i])))
        throw Error("assignment line " + std::to_string(lineno) + ": bad vertex index");
      idx = static_cast<uint16_t>(idx * 10 + (name[i] - '0'));
    }
    va.set(s, idx, {parse_rat(xs), parse_rat(ys), parse_rat(zs)});
  }
  return va;
}

}  // namespace apoly
