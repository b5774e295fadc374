#include <catch2/catch_amalgamated.hpp>

#include "apoly/bigint.hpp"
#include "apoly/interval.hpp"
#include "apoly/residue.hpp"
#include "apoly/rng.hpp"

using namespace apoly;

TEST_CASE("interval_sign basics") {
  CHECK(interval_sign({2.0, 3.0}) == IntervalSign::Positive);
  CHECK(interval_sign({-1.0, 1.0}) == IntervalSign::Ambiguous);
  CHECK(interval_sign({-3.0, -0.5}) == IntervalSign::Negative);
}

namespace {

// Random expression tree evaluated both in Interval and in exact Rat.
struct Expr {
  int op;  // 0 leaf, 1 add, 2 sub, 3 mul
  double leaf = 0;
  std::unique_ptr<Expr> a, b;
};

std::unique_ptr<Expr> random_expr(Rng& rng, int depth) {
  auto e = std::make_unique<Expr>();
  if (depth == 0 || rng.below(4) == 0) {
    e->op = 0;
    // mix of magnitudes, including values that round
    int64_t num = rng.int_in(-(1ll << 30), 1ll << 30);
    int shift = static_cast<int>(rng.below(24));
    e->leaf = static_cast<double>(num) / static_cast<double>(1ll << shift);
    return e;
  }
  e->op = 1 + static_cast<int>(rng.below(3));
  e->a = random_expr(rng, depth - 1);
  e->b = random_expr(rng, depth - 1);
  return e;
}

Interval eval_iv(const Expr& e) {
  switch (e.op) {
    case 0: return Interval::exact(e.leaf);
    case 1: return eval_iv(*e.a) + eval_iv(*e.b);
    case 2: return eval_iv(*e.a) - eval_iv(*e.b);
    default: return eval_iv(*e.a) * eval_iv(*e.b);
  }
}

Rat eval_rat(const Expr& e) {
  switch (e.op) {
    case 0: return Rat(e.leaf);
    case 1: return eval_rat(*e.a) + eval_rat(*e.b);
    case 2: return eval_rat(*e.a) - eval_rat(*e.b);
    default: return eval_rat(*e.a) * eval_rat(*e.b);
  }
}

}  // namespace

TEST_CASE("interval containment on random expression trees") {
  Rng rng(42);
  for (int i = 0; i < 20000; ++i) {
    auto e = random_expr(rng, 4);
    Interval iv = eval_iv(*e);
    Rat exact = eval_rat(*e);
    REQUIRE(Rat(iv.lo) <= exact);
    REQUIRE(exact <= Rat(iv.hi));
  }
}

TEST_CASE("interval sign never contradicts exact evaluation") {
  Rng rng(43);
  for (int i = 0; i < 20000; ++i) {
    auto e = random_expr(rng, 3);
    IntervalSign s = interval_sign(eval_iv(*e));
    int exact = sign_of(eval_rat(*e));
    if (s == IntervalSign::Positive) CHECK(exact > 0);
    if (s == IntervalSign::Negative) CHECK(exact < 0);
  }
}

TEST_CASE("prime list is deterministic, distinct, below 2^32") {
  const auto& ps = prime_list_32();
  REQUIRE(ps.size() >= 160);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(miller_rabin_u64(ps[i]));
    if (i > 0) CHECK(ps[i] < ps[i - 1]);
  }
  CHECK(ps[0] == 4294967291u);  // largest prime below 2^32
}

namespace {

// Integer expression: sum of signed products of up to `deg` 53-bit inputs.
struct IntExpr {
  std::vector<std::vector<int>> terms;  // index lists into inputs
  std::vector<int> signs;
  std::vector<Int> inputs;

  Int eval_exact() const {
    Int total = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      Int prod = signs[t];
      for (int ix : terms[t]) prod *= inputs[static_cast<std::size_t>(ix)];
      total += prod;
    }
    return total;
  }

  uint64_t eval_mod(uint32_t p) const {
    Fp f(p);
    uint64_t total = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      uint64_t prod = signs[t] > 0 ? 1 : p - 1;
      for (int ix : terms[t])
        prod = f.mul(prod, mpz_fdiv_ui(inputs[static_cast<std::size_t>(ix)].get_mpz_t(), p));
      total = f.add(total, prod);
    }
    return total;
  }
};

IntExpr random_int_expr(Rng& rng, bool force_zero) {
  IntExpr e;
  int n = 4 + static_cast<int>(rng.below(4));
  for (int i = 0; i < n; ++i) {
    Int v = Int(rng.int_in(-(1ll << 52), 1ll << 52));
    e.inputs.push_back(v);
  }
  int nt = 1 + static_cast<int>(rng.below(5));
  for (int t = 0; t < nt; ++t) {
    std::vector<int> term;
    int k = 1 + static_cast<int>(rng.below(9));
    for (int j = 0; j < k; ++j) term.push_back(static_cast<int>(rng.below(e.inputs.size())));
    e.terms.push_back(term);
    e.signs.push_back(rng.coin() ? 1 : -1);
  }
  if (force_zero) {
    // cancel every term with its negation
    std::size_t m = e.terms.size();
    for (std::size_t t = 0; t < m; ++t) {
      e.terms.push_back(e.terms[t]);
      e.signs.push_back(-e.signs[t]);
    }
  }
  return e;
}

}  // namespace

TEST_CASE("crt_zero_test agrees with exact integer evaluation") {
  Rng rng(77);
  int zeros = 0;
  for (int i = 0; i < 10000; ++i) {
    IntExpr e = random_int_expr(rng, rng.below(3) == 0);
    bool exact_zero = e.eval_exact() == 0;
    bool crt = crt_zero_test([&](uint32_t p) { return e.eval_mod(p); }, 135);
    REQUIRE(crt == exact_zero);
    zeros += exact_zero;
  }
  CHECK(zeros > 1000);  // both outcomes exercised
}

TEST_CASE("crt_zero_test trivial cases") {
  CHECK(crt_zero_test([](uint32_t) { return 0; }, 135));
  CHECK_FALSE(crt_zero_test([](uint32_t p) { return 1 % p; }, 135));
}

TEST_CASE("crt_zero_test rejects insufficient prime count") {
  CHECK_THROWS_AS(crt_zero_test([](uint32_t) { return 0; }, 100), Error);
  CrtProfile prof;
  CHECK(prof.required_count() == 135);
}
