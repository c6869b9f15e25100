#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ctcong/modarith.hpp>

#include <boost/multiprecision/cpp_int.hpp>

using namespace ctcong;
using boost::multiprecision::cpp_int;

TEST_CASE("prime validation") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(97).value() == 97);
  CHECK(Prime(2147483647).value() == 2147483647);  // 2^31 - 1
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Prime(3215031751ull), std::invalid_argument);  // Carmichael-ish
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(18446744073709551555ull));
}

TEST_CASE("symmetric representation") {
  CHECK(symmetric_rep(6, Prime(5)).value == 1);
  CHECK(symmetric_rep(4, Prime(5)).value == -1);
  CHECK(symmetric_rep(0, Prime(7)).value == 0);
  CHECK(symmetric_rep(-7, Prime(5)).value == -2);

  // idempotent, and always inside (-p/2, p/2]
  for (u64 pv : {2ull, 3ull, 5ull, 7ull, 13ull}) {
    Prime p(pv);
    for (i64 x = -50; x <= 50; ++x) {
      const SymResidue r = symmetric_rep(x, p);
      CHECK(2 * r.value <= static_cast<i64>(pv));
      CHECK(2 * r.value > -static_cast<i64>(pv));
      CHECK((x - r.value) % static_cast<i64>(pv) == 0);
      CHECK(symmetric_rep(r.value, p) == r);
    }
  }
}

TEST_CASE("modpow") {
  CHECK(modpow(5, 3, 3) == 2);
  CHECK(modpow(7, 0, 11) == 1);
  CHECK(modpow(5, 2, 4) == 1);
  CHECK(modpow(-2, 3, 7) == 6);  // (-8) mod 7
  CHECK(modpow(3, 1000000, 1) == 0);
}

TEST_CASE("binom_mod examples") {
  CHECK(binom_mod(10, 5, Prime(7)) == 0);   // 252 mod 7
  CHECK(binom_mod(12, 6, Prime(5)) == 4);   // 924 mod 5
  CHECK(binom_mod(4, 7, Prime(5)) == 0);    // k > n
  CHECK(binom_mod(4, -1, Prime(5)) == 0);   // k < 0
  CHECK(binom_mod(0, 0, Prime(2)) == 1);
}

TEST_CASE("binom_mod vs exact big-integer Pascal, n <= 300") {
  std::vector<cpp_int> row{1};
  const std::vector<Prime> ps{Prime(2), Prime(3), Prime(5), Prime(7),
                              Prime(11), Prime(13)};
  u64 mismatches = 0;
  for (u64 n = 0; n <= 300; ++n) {
    for (u64 k = 0; k <= n; ++k)
      for (const Prime& p : ps) {
        const cpp_int want = row[k] % p.value();
        if (binom_mod(n, static_cast<i64>(k), p) != want.convert_to<u64>())
          ++mismatches;
      }
    std::vector<cpp_int> next(n + 2, 1);
    for (u64 k = 1; k <= n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("binom_mod vs additive Pascal mod p, n <= 3000") {
  for (u64 pv : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    Prime p(pv);
    std::vector<u64> row{1};
    u64 mismatches = 0;
    for (u64 n = 0; n <= 3000; ++n) {
      for (u64 k = 0; k <= n; ++k)
        if (binom_mod(n, static_cast<i64>(k), p) != row[k]) ++mismatches;
      std::vector<u64> next(n + 2, 1);
      for (u64 k = 1; k <= n; ++k) next[k] = (row[k - 1] + row[k]) % pv;
      row = std::move(next);
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("multinom_mod examples") {
  CHECK(multinom_mod({2, 2, 2}, Prime(3)) == 0);  // 90 mod 3
  CHECK(multinom_mod({1, 1, 1}, Prime(7)) == 6);  // 3!
  CHECK(multinom_mod({17}, Prime(5)) == 1);       // single part
  CHECK_THROWS_AS(multinom_mod({}, Prime(5)), std::invalid_argument);
}

TEST_CASE("multinom_mod vs factorial-decomposition evaluation") {
  auto via_decomp = [](const std::vector<u64>& parts, Prime p) -> u64 {
    u64 total = 0;
    for (u64 x : parts) total += x;
    const FactorialDecomp num = factorial_decomp(total, p);
    i64 val = static_cast<i64>(num.valuation);
    u64 den = 1;
    for (u64 x : parts) {
      const FactorialDecomp d = factorial_decomp(x, p);
      val -= static_cast<i64>(d.valuation);
      den = mul_mod(den, d.unit, p.value());
    }
    REQUIRE(val >= 0);
    if (val > 0) return 0;
    return mul_mod(num.unit, modpow(static_cast<i64>(den), p.value() - 2, p.value()),
                   p.value());
  };
  for (u64 pv : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    Prime p(pv);
    u64 mismatches = 0;
    for (u64 a = 0; a <= 20; ++a)
      for (u64 b = 0; b <= 20; ++b)
        for (u64 c = 0; c <= 20; ++c)
          if (multinom_mod({a, b, c}, p) != via_decomp({a, b, c}, p)) ++mismatches;
    for (u64 a = 0; a <= 7; ++a)
      for (u64 b = 0; b <= 7; ++b)
        for (u64 c = 0; c <= 7; ++c)
          for (u64 d = 0; d <= 7; ++d)
            if (multinom_mod({a, b, c, d}, p) != via_decomp({a, b, c, d}, p))
              ++mismatches;
    CHECK(mismatches == 0);
  }
}

TEST_CASE("factorial_decomp examples") {
  CHECK(factorial_decomp(5, Prime(5)) == FactorialDecomp{4, 1});   // 120 = 5 * 24
  CHECK(factorial_decomp(0, Prime(7)) == FactorialDecomp{1, 0});
  CHECK(factorial_decomp(10, Prime(5)).valuation == 2);
  CHECK(factorial_valuation(100, Prime(5)) == 24);

  // cross-check units against the direct product of p-coprime factors
  for (u64 pv : {3ull, 5ull, 7ull}) {
    Prime p(pv);
    for (u64 n = 0; n <= 200; ++n) {
      u64 direct = 1;
      for (u64 i = 1; i <= n; ++i) {
        u64 x = i;
        while (x % pv == 0) x /= pv;
        direct = mul_mod(direct, x % pv, pv);
      }
      REQUIRE(factorial_decomp(n, p).unit == direct);
    }
  }
}

TEST_CASE("super Catalan residues") {
  // spec values are canonical residues of the exact integers
  CHECK(super_catalan_canonical(2, 1, Prime(5)) == 4);  // T(2,1) = 4
  CHECK(super_catalan_canonical(0, 3, Prime(7)) == 6);  // C(6,3) = 20
  CHECK(super_catalan_canonical(0, 0, Prime(5)) == 1);
  CHECK(super_catalan_mod(2, 1, Prime(5)).value == -1);
  CHECK(super_catalan_mod(0, 0, Prime(5)).value == 1);
}

TEST_CASE("super Catalan multiplicative identity") {
  // T(m,n) C(m+n,n) = C(2m,m) C(2n,n) mod p whenever C(m+n,n) != 0
  for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    Prime p(pv);
    u64 mismatches = 0;
    for (u64 m = 0; m <= 60; ++m)
      for (u64 n = 0; n <= 60; ++n) {
        const u64 c = binom_mod(m + n, static_cast<i64>(n), p);
        if (c == 0) continue;
        const u64 lhs = mul_mod(super_catalan_canonical(m, n, p), c, pv);
        const u64 rhs = mul_mod(binom_mod(2 * m, static_cast<i64>(m), p),
                                binom_mod(2 * n, static_cast<i64>(n), p), pv);
        if (lhs != rhs) ++mismatches;
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("super Catalan integrality: net valuation is never negative") {
  for (u64 pv : {3ull, 5ull, 7ull}) {
    Prime p(pv);
    u64 bad = 0;
    for (u64 m = 0; m <= 500; ++m)
      for (u64 n = 0; n <= 500; ++n) {
        const i64 val =
            static_cast<i64>(factorial_valuation(2 * m, p) +
                             factorial_valuation(2 * n, p)) -
            static_cast<i64>(factorial_valuation(m, p) + factorial_valuation(n, p) +
                             factorial_valuation(m + n, p));
        if (val < 0) ++bad;
      }
    CHECK(bad == 0);
  }
}
