#pragma once

#include <cstdint>
#include <vector>

namespace apoly {

// Prime field arithmetic on uint64_t residues.  Moduli up to 63 bits;
// products go through __uint128_t.
struct Fp {
  uint64_t p;

  explicit Fp(uint64_t prime) : p(prime) {}

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }

  uint64_t reduce_i64(int64_t v) const {
    int64_t m = v % static_cast<int64_t>(p);
    if (m < 0) m += static_cast<int64_t>(p);
    return static_cast<uint64_t>(m);
  }
};

inline bool miller_rabin_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  Fp f(n);
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = f.pow(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = f.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace apoly
