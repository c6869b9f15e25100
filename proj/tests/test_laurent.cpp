#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ctcong/laurent.hpp>

#include <random>

using namespace ctcong;

namespace {

// fixed-seed generator: deterministic across runs, no time-based seeding
LaurentPoly random_poly(std::mt19937& rng, int nvars, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(-4, 4);
  std::uniform_int_distribution<int> coefd(-5, 5);
  LaurentPoly p = LaurentPoly::zero(nvars);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    ExpVec e(nvars);
    for (int& x : e) x = expd(rng);
    p = p + LaurentPoly::monomial(nvars, coefd(rng), e);
  }
  return p;
}

// exact binomial table up to C(60,30), fits in signed 64 bits
std::vector<std::vector<i64>> pascal(int n) {
  std::vector<std::vector<i64>> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (int k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

}  // namespace

TEST_CASE("add") {
  const LaurentPoly xp1 = uni({{1, 1}, {0, 1}});
  const LaurentPoly negx = uni({{1, -1}});
  CHECK(xp1 + negx == LaurentPoly::constant(1, 1));

  // Laurent terms in two variables keep their negative exponents
  const LaurentPoly a = LaurentPoly::from_terms(2, {{{-1, -1}, 1}, {{0, 0}, 3}});
  const LaurentPoly b = LaurentPoly::from_terms(2, {{{1, 1}, 5}});
  const LaurentPoly sum = a + b;
  CHECK(sum.coeff({-1, -1}) == 1);
  CHECK(sum.coeff({0, 0}) == 3);
  CHECK(sum.coeff({1, 1}) == 5);
  CHECK(sum.term_count() == 3);

  CHECK(LaurentPoly::zero(1) + xp1 == xp1);
  CHECK_THROWS_AS(a + xp1, std::invalid_argument);
}

TEST_CASE("mul") {
  const LaurentPoly one_px = uni({{0, 1}, {1, 1}});
  CHECK(one_px * one_px == uni({{0, 1}, {1, 2}, {2, 1}}));

  const LaurentPoly base = uni({{-1, 1}, {0, 2}, {1, 1}});
  CHECK(base * uni({{1, 1}}) == uni({{0, 1}, {1, 2}, {2, 1}}));

  // (1-x)(1+x+x^2) = 1 - x^3
  CHECK(uni({{0, 1}, {1, -1}}) * uni({{0, 1}, {1, 1}, {2, 1}}) ==
        uni({{0, 1}, {3, -1}}));
}

TEST_CASE("pow") {
  const LaurentPoly base = uni({{-1, 1}, {0, 2}, {1, 1}});
  CHECK(base.pow(2) == uni({{-2, 1}, {-1, 4}, {0, 6}, {1, 4}, {2, 1}}));
  CHECK(base.pow(0) == LaurentPoly::constant(1, 1));
  const LaurentPoly m = uni({{-1, 1}, {0, 1}, {1, 1}});
  CHECK(m.pow(3) ==
        uni({{-3, 1}, {-2, 3}, {-1, 6}, {0, 7}, {1, 6}, {2, 3}, {3, 1}}));
  CHECK(m.pow(3).ct() - m.pow(3).coeff({2}) == 4);  // Motzkin M_3
}

TEST_CASE("ct and coeff") {
  const LaurentPoly ex1 = LaurentPoly::from_terms(
      2, {{{-1, -1}, 1}, {{0, 0}, 3}, {{1, 1}, 5}, {{3, 0}, -1}, {{0, 2}, 6}});
  CHECK(ex1.ct() == 3);
  CHECK(LaurentPoly::zero(3).ct() == 0);
  CHECK(uni({{-1, 1}, {0, 2}, {1, 1}}).pow(2).ct() == 6);  // C(4,2)

  const LaurentPoly ex2 = LaurentPoly::from_terms(
      2, {{{-1, -1}, 1}, {{0, 0}, 3}, {{1, 1}, 5}, {{3, 0}, 1}, {{0, 2}, 6}});
  CHECK(ex2.coeff({1, 1}) == 5);
  CHECK(uni({{0, 1}, {1, 1}}).coeff({5}) == 0);
  CHECK(uni({{-1, 1}, {0, 2}, {1, 1}}).coeff({-1}) == 1);
  CHECK_THROWS_AS(ex2.coeff({1}), std::invalid_argument);
}

TEST_CASE("exact_div") {
  // (y^3 + z^3) / (y + z) = y^2 - yz + z^2
  const LaurentPoly num = LaurentPoly::from_terms(2, {{{3, 0}, 1}, {{0, 3}, 1}});
  const LaurentPoly den = LaurentPoly::from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  const LaurentPoly quot = exact_div(num, den);
  CHECK(quot == LaurentPoly::from_terms(2, {{{2, 0}, 1}, {{1, 1}, -1}, {{0, 2}, 1}}));
  CHECK(quot * den == num);

  CHECK(exact_div(uni({{0, 1}, {3, -1}}), uni({{0, 1}, {1, -1}})) ==
        uni({{0, 1}, {1, 1}, {2, 1}}));
  CHECK_THROWS_AS(exact_div(uni({{0, 1}, {3, -1}}), uni({{0, 1}, {1, 1}})),
                  NonExactDivision);
  CHECK_THROWS_AS(exact_div(uni({{0, 1}}), uni({{0, 1}, {1, -1}})),
                  NonExactDivision);
  CHECK_THROWS_AS(exact_div(uni({{0, 1}}), LaurentPoly::zero(1)),
                  std::invalid_argument);

  // division by a Laurent monomial shifts exponents
  CHECK(exact_div(uni({{2, 6}, {0, 2}}), uni({{-1, 2}})) == uni({{3, 3}, {1, 1}}));
}

TEST_CASE("ring axioms on fixed-seed random polynomials") {
  std::mt19937 rng(0xC001);
  int failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const int nvars = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly p = random_poly(rng, nvars);
    const LaurentPoly q = random_poly(rng, nvars);
    const LaurentPoly r = random_poly(rng, nvars);
    if (!((p + q) + r == p + (q + r))) ++failures;
    if (!(p + q == q + p)) ++failures;
    if (!(p * q == q * p)) ++failures;
    if (!((p * q) * r == p * (q * r))) ++failures;
    if (!(p * (q + r) == p * q + p * r)) ++failures;
    if (!(p - p == LaurentPoly::zero(nvars))) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("geometric sum: (B^n - 1)/(B - 1) = sum of powers") {
  std::mt19937 rng(0xBEEF);
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  int checked = 0;
  while (checked < 60) {
    LaurentPoly b = random_poly(rng, 1, 3);
    if (b == one || b.is_zero()) continue;
    ++checked;
    for (u64 n = 1; n <= 8; ++n) {
      LaurentPoly powsum = LaurentPoly::zero(1);
      for (u64 i = 0; i < n; ++i) powsum = powsum + b.pow(i);
      CHECK(exact_div(b.pow(n) - one, b - one) == powsum);
    }
  }
}

TEST_CASE("CT is linear") {
  std::mt19937 rng(0xF00D);
  for (int iter = 0; iter < 200; ++iter) {
    const int nvars = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly p = random_poly(rng, nvars);
    const LaurentPoly q = random_poly(rng, nvars);
    CHECK((p + q).ct() == p.ct() + q.ct());
  }
}

TEST_CASE("CT representation: ct((2+x+1/x)^n x^-d) = C(2n, n+d)") {
  const auto binом = pascal(60);
  const LaurentPoly base = uni({{-1, 1}, {0, 2}, {1, 1}});
  LaurentPoly pw = LaurentPoly::constant(1, 1);
  int failures = 0;
  for (int n = 0; n <= 30; ++n) {
    for (int d = -3; d <= 3; ++d) {
      const i64 want =
          (n + d < 0 || n + d > 2 * n) ? 0 : binом[2 * n][n + d];
      if (pw.coeff({d}) != want) ++failures;  // [x^d] B^n = CT[B^n x^-d]
    }
    pw = pw * base;
  }
  CHECK(failures == 0);
}

TEST_CASE("frobenius lift") {
  Prime p(7);
  const LaurentPoly base = uni({{-1, 1}, {0, 2}, {1, 1}}).reduced_mod(p);
  const std::vector<SymMonomial> lifted = frobenius_lift(base, p, 3);
  REQUIRE(lifted.size() == 3);
  CHECK(lifted[0] == SymMonomial{1, {-1, 0}});
  CHECK(lifted[1] == SymMonomial{2, {0, 0}});
  CHECK(lifted[2] == SymMonomial{1, {1, 0}});

  // a = 0 materializes back to the original polynomial
  CHECK(materialize_sym(lifted, p, 0) == base);

  const LaurentPoly sq = uni({{-1, 1}, {0, 2}, {1, 1}}).pow(2).reduced_mod(p);
  const std::vector<SymMonomial> lifted2 = frobenius_lift(sq, p, 1);
  REQUIRE(lifted2.size() == 5);
  CHECK(lifted2[2] == SymMonomial{6, {0, 0}});
  CHECK(lifted2[4] == SymMonomial{1, {2, 0}});
  CHECK_THROWS_AS(frobenius_lift(uni({{0, 1}}), p, 1), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(uni({{-1, 1}, {0, 2}, {1, 1}}).str() == "x^-1 + 2 + x");
  CHECK(LaurentPoly::zero(2).str() == "0");
  CHECK(uni({{0, 1}, {1, -1}}).str() == "1 - x");
  CHECK(LaurentPoly::from_terms(2, {{{-1, -1}, 1}, {{0, 0}, 3}, {{1, 1}, 5}}).str() ==
        "x^-1 y^-1 + 3 + 5 x y");
  CHECK(LaurentPoly::from_terms(3, {{{0, 1, 2}, -4}}).str() == "-4 y z^2");
}

TEST_CASE("overflow is reported, not wrapped") {
  const LaurentPoly big = uni({{0, i64{1} << 62}});
  CHECK_THROWS_AS(big * uni({{0, 4}}), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("mixed-domain operations are rejected") {
  Prime p(5);
  const LaurentPoly a = uni({{0, 1}, {1, 1}});
  const LaurentPoly b = a.reduced_mod(p);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK(b + b == uni({{0, 2}, {1, 2}}).reduced_mod(p));
}
