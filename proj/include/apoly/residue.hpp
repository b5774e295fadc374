#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apoly/bigint.hpp"
#include "apoly/zp.hpp"

namespace apoly {

// Fixed list of distinct 32-bit primes: the first `count` primes below 2^32
// in descending order.  Deterministic, so residue computations are
// reproducible everywhere.
inline const std::vector<uint32_t>& prime_list_32(std::size_t count = 192) {
  static const std::vector<uint32_t> primes = [] {
    std::vector<uint32_t> v;
    for (uint64_t n = (1ull << 32) - 1; v.size() < 192; n -= 2) {
      if (miller_rabin_u64(n)) v.push_back(static_cast<uint32_t>(n));
    }
    return v;
  }();
  static thread_local std::vector<uint32_t> slice;
  if (count >= primes.size()) return primes;
  slice.assign(primes.begin(), primes.begin() + count);
  return slice;
}

struct ResidueVector {
  std::vector<uint32_t> primes;
  std::vector<uint32_t> residues;  // residues[i] in [0, primes[i])
};

// Degree profile of an integer expression: degree `coeff_degree` in
// polynomial coefficients that are themselves degree `input_degree` in
// `input_bits`-bit integer inputs.  The expression magnitude is below
// 2^(coeff_degree * input_degree * input_bits), so that many bits of
// primes certify a zero.
struct CrtProfile {
  int coeff_degree = 9;
  int input_degree = 9;
  int input_bits = 53;

  int required_count() const {
    long bits = static_cast<long>(coeff_degree) * input_degree * input_bits;
    return static_cast<int>((bits + 31) / 32);
  }
};

// True iff the exact integer value of the expression is zero, decided from
// `count` modular evaluations.  `eval(p)` must return the expression value
// mod p.  Throws if `count` is below the certified bound for the profile.
inline bool crt_zero_test(const std::function<uint64_t(uint32_t)>& eval, int count,
                          const CrtProfile& profile = {}) {
  int need = profile.required_count();
  if (count < need) {
    throw Error("crt_zero_test: insufficient prime count " + std::to_string(count) +
                " < " + std::to_string(need));
  }
  const auto& primes = prime_list_32(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (eval(primes[static_cast<std::size_t>(i)]) != 0) return false;
  }
  return true;
}

}  // namespace apoly
