#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "apoly/rng.hpp"

namespace apoly {

// Exact coefficient arithmetic is delegated to GMP.  mpq_class keeps
// rationals normalized (den > 0, gcd = 1) after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

// Uniform integer in [-bound, bound].
inline Int random_int(Rng& rng, int64_t bound) {
  return Int(rng.int_in(-bound, bound));
}

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
T triple(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot(cross(a, b), c);
}

using IVec3 = Vec3<Int>;
using QVec3 = Vec3<Rat>;

}  // namespace apoly
