#include <ctcong/ctengine.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace ctcong {

namespace {

constexpr i64 kAlphaLimit = 64;
constexpr i64 kBetaLimit = i64{1} << 32;

// p^a if it fits comfortably in 62 bits, nullopt otherwise ("huge").
std::optional<u64> checked_pow(u64 p, u64 a) {
  u64 r = 1;
  for (u64 i = 0; i < a; ++i) {
    if (r > (u64{1} << 62) / p) return std::nullopt;
    r *= p;
  }
  return r;
}

// Unguarded numerator assembly. Like (alpha, beta) pairs are merged; when
// p^a is small two distinct pairs may denote the same exponent, which is
// harmless for extraction (contributions just add).
std::vector<SymMonomial> numerator_terms(const KernelSpec& k, Prime p, u64 a) {
  if (k.base.nvars() != 1 || k.prefactor.nvars() != 1)
    throw std::invalid_argument("build_numerator: univariate kernels only");
  if (!k.base.is_exact() || !k.prefactor.is_exact())
    throw std::invalid_argument("build_numerator: kernel must be exact-integer");
  if (k.r == 0) throw std::invalid_argument("build_numerator: r must be >= 1");

  const LaurentPoly base_r = k.base.pow(k.r).reduced_mod(p);
  std::vector<SymMonomial> lifted = frobenius_lift(base_r, p, a);
  lifted.push_back(SymMonomial{p.value() - 1, SymIndex{0, 0}});  // subtract 1
  lifted = normalize_sym(std::move(lifted), p);

  const LaurentPoly pre = k.prefactor.reduced_mod(p);
  std::vector<SymMonomial> out;
  for (const auto& m : lifted) {
    for (const auto& [e, c] : pre.terms()) {
      i64 alpha = m.exp.alpha;
      i64 beta = m.exp.beta + e[0] - k.d;
      if (alpha > kAlphaLimit || alpha < -kAlphaLimit || beta > kBetaLimit ||
          beta < -kBetaLimit)
        throw std::domain_error("build_numerator: exponent outside desk-scale caps");
      u64 coef = mul_mod(m.coef, static_cast<u64>(c), p.value());
      out.push_back(SymMonomial{coef, SymIndex{alpha, beta}});
    }
  }
  return normalize_sym(std::move(out), p);
}

i64 max_abs_beta(const std::vector<SymMonomial>& terms) {
  i64 b = 0;
  for (const auto& t : terms) b = std::max(b, std::abs(t.exp.beta));
  return b;
}

}  // namespace

KernelSpec with_r_d(const KernelSpec& k, u64 r, i64 d) {
  KernelSpec out = k;
  out.r = r;
  out.d = d;
  return out;
}

ClearedDenominator clear_denominator(const LaurentPoly& base) {
  if (base.nvars() != 1)
    throw std::invalid_argument("clear_denominator: univariate bases only");
  LaurentPoly e = base - LaurentPoly::constant(1, 1);
  if (e.is_zero()) throw std::domain_error("clear_denominator: base is 1");
  const int min_exp = e.min_exponents()[0];
  if (min_exp > 0)
    throw std::domain_error(
        "clear_denominator: base - 1 has zero constant term after clearing");
  const u64 t = static_cast<u64>(-min_exp);
  return ClearedDenominator{t, e.shifted(ExpVec{-min_exp})};
}

PeriodicSeries series_period(const LaurentPoly& den, Prime p, u32 search_limit) {
  if (den.nvars() != 1)
    throw std::invalid_argument("series_period: univariate denominators only");
  LaurentPoly d = den.is_exact() ? den.reduced_mod(p) : den;
  if (d.modulus() != p.value())
    throw std::invalid_argument("series_period: wrong modulus");
  if (!d.terms().empty() && d.min_exponents()[0] < 0)
    throw std::invalid_argument("series_period: negative exponents in denominator");
  const u64 pv = p.value();
  const i64 d0 = d.ct();
  if (d0 % static_cast<i64>(pv) == 0)
    throw std::domain_error("series_period: constant term vanishes mod p");

  const int deg = d.max_exponents()[0];
  std::vector<u64> dc(static_cast<std::size_t>(deg) + 1, 0);
  for (const auto& [e, c] : d.terms()) dc[static_cast<std::size_t>(e[0])] =
      static_cast<u64>(c);
  const u64 inv0 = modpow(static_cast<i64>(dc[0]), pv - 2, pv);

  // Generate coefficients of 1/D by the induced recurrence:
  //   c_i = -d0^{-1} sum_{j=1..deg} d_j c_{i-j}   (c_0 = d0^{-1})
  const std::size_t horizon =
      static_cast<std::size_t>(deg) + 8 * static_cast<std::size_t>(search_limit) + 64;
  std::vector<u64> c(horizon);
  for (std::size_t i = 0; i < horizon; ++i) {
    u64 acc = i == 0 ? 1 : 0;
    for (int j = 1; j <= deg && static_cast<std::size_t>(j) <= i; ++j) {
      u64 sub = mul_mod(dc[static_cast<std::size_t>(j)],
                        c[i - static_cast<std::size_t>(j)], pv);
      acc = (acc + pv - sub % pv) % pv;
    }
    c[i] = mul_mod(acc, inv0, pv);
  }

  // Rho detection on the deg-long state vectors: the first repeated state
  // gives the exact preperiod and minimal period of the stream.
  const std::size_t state_len = std::max(deg, 1);
  std::map<std::vector<u64>, std::size_t> seen;
  std::size_t mu = 0, lambda = 0;
  for (std::size_t i = 0; i + state_len <= horizon; ++i) {
    std::vector<u64> st(c.begin() + static_cast<std::ptrdiff_t>(i),
                        c.begin() + static_cast<std::ptrdiff_t>(i + state_len));
    auto [it, fresh] = seen.emplace(std::move(st), i);
    if (!fresh) {
      mu = it->second;
      lambda = i - it->second;
      break;
    }
  }
  if (lambda == 0 || lambda > search_limit)
    throw std::domain_error("series_period: no period within search limit");

  // Shrink to the minimal divisor period and minimal preperiod.
  std::size_t period = lambda;
  for (std::size_t q = 1; q < lambda; ++q) {
    if (lambda % q != 0) continue;
    bool works = true;
    for (std::size_t i = mu; i + q < horizon; ++i)
      if (c[i] != c[i + q]) { works = false; break; }
    if (works) { period = q; break; }
  }
  std::size_t pre = mu;
  while (pre > 0 && c[pre - 1] == c[pre - 1 + period]) --pre;

  PeriodicSeries s{p, static_cast<u32>(pre), static_cast<u32>(period), {}};
  s.coeffs.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(pre + period));
  // verification window of preperiod + 3*period terms
  for (std::size_t i = pre; i < pre + 3 * period && i + period < horizon; ++i) {
    if (c[i] != c[i + period])
      throw std::logic_error("series_period: period verification failed");
  }
  return s;
}

std::vector<SymMonomial> build_numerator(const KernelSpec& k, Prime p, u64 a) {
  std::vector<SymMonomial> terms = numerator_terms(k, p, a);
  const i64 bmax = max_abs_beta(terms);
  const std::optional<u64> pa = checked_pow(p.value(), a);
  if (pa && static_cast<i64>(*pa) <= 2 * bmax)
    throw GuardViolation("build_numerator: p^a <= 2 max|beta|");
  return terms;
}

SymResidue extract(const KernelSpec& k, Prime p, u64 a) {
  const u64 pv = p.value();
  const ClearedDenominator cd = clear_denominator(k.base);
  const PeriodicSeries s = series_period(cd.den.reduced_mod(p), p);
  const std::vector<SymMonomial> terms = numerator_terms(k, p, a);

  u64 acc = 0;
  if (const std::optional<u64> pa = checked_pow(pv, a)) {
    // p^a is materializable: evaluate every index exactly.
    for (const auto& m : terms) {
      const __int128 idx = -static_cast<__int128>(m.exp.alpha) *
                               static_cast<i64>(*pa) -
                           m.exp.beta - static_cast<i64>(cd.t);
      if (idx < 0) continue;
      u64 coef;
      if (idx < static_cast<__int128>(s.coeffs.size())) {
        coef = s.coeffs[static_cast<std::size_t>(idx)];
      } else {
        const u64 fold = static_cast<u64>(
            (idx - s.preperiod) % static_cast<__int128>(s.period));
        coef = s.coeffs[s.preperiod + fold];
      }
      acc = (acc + mul_mod(m.coef, coef, pv)) % pv;
    }
  } else {
    // p^a is huge: only alpha <= 0 can contribute and every alpha < 0 index
    // lands beyond the preperiod, so fold it with modular arithmetic.
    const i64 bmax = max_abs_beta(terms);
    (void)bmax;  // guard p^a > 2 max|beta| holds trivially here
    const u64 q = s.period;
    const u64 pa_mod_q = modpow(static_cast<i64>(pv), a, q);
    for (const auto& m : terms) {
      if (m.exp.alpha > 0) continue;
      u64 coef;
      if (m.exp.alpha == 0) {
        const i64 idx = -m.exp.beta - static_cast<i64>(cd.t);
        if (idx < 0) continue;
        coef = s.at(static_cast<u64>(idx));
      } else {
        // index = |alpha| p^a - beta - t, reduced into the periodic window
        i64 off = (-m.exp.beta - static_cast<i64>(cd.t) -
                   static_cast<i64>(s.preperiod)) %
                  static_cast<i64>(q);
        if (off < 0) off += static_cast<i64>(q);
        const u64 fold =
            (mul_mod(static_cast<u64>(-m.exp.alpha) % q, pa_mod_q, q) +
             static_cast<u64>(off)) %
            q;
        coef = s.coeffs[s.preperiod + fold];
      }
      acc = (acc + mul_mod(m.coef, coef, pv)) % pv;
    }
  }
  return symmetric_rep(static_cast<i64>(acc), p);
}

SymResidue diagonal_residue(Prime p, u64 a) {
  // a(n) has period 3 with pattern 1, -1, 0; n = p^a - 1 mod 3 via modpow.
  const u64 n_mod3 = (modpow(static_cast<i64>(p.value()), a, 3) + 2) % 3;
  static constexpr i64 pattern[3] = {1, -1, 0};
  return symmetric_rep(pattern[n_mod3], p);
}

std::vector<i64> diagonal_bruteforce(u32 limit) {
  if (limit > 64)
    throw std::invalid_argument("diagonal_bruteforce: limit must be <= 64");
  // Q = (1+y+xy)(1+x+xy), expanded once via the polynomial layer.
  const LaurentPoly f1 = LaurentPoly::from_terms(
      2, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}});
  const LaurentPoly f2 = LaurentPoly::from_terms(
      2, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}});
  const LaurentPoly q = f1 * f2;

  const std::size_t n = static_cast<std::size_t>(limit) + 1;
  std::vector<std::vector<__int128>> s(n, std::vector<__int128>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      __int128 acc = (i == 0 && j == 0) ? 1 : 0;
      for (const auto& [e, c] : q.terms()) {
        const std::size_t a = static_cast<std::size_t>(e[0]);
        const std::size_t b = static_cast<std::size_t>(e[1]);
        if (a == 0 && b == 0) continue;
        if (a <= i && b <= j) acc -= static_cast<__int128>(c) * s[i - a][j - b];
      }
      s[i][j] = acc;
    }
  std::vector<i64> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i][i] > INT64_MAX || s[i][i] < INT64_MIN)
      throw std::overflow_error("diagonal_bruteforce: coefficient overflow");
    diag[i] = static_cast<i64>(s[i][i]);
  }
  return diag;
}

i64 multinomial_coeff_check(u64 L, int nvars) {
  if (L % 2 == 0)
    throw std::invalid_argument("multinomial_coeff_check: L must be odd");
  if (nvars < 2 || nvars > 5)
    throw std::invalid_argument("multinomial_coeff_check: nvars in [2,5]");
  LaurentPoly prod = LaurentPoly::constant(nvars, 1);
  for (int i = 0; i < nvars; ++i) {
    const int j = (i + 1) % nvars;
    ExpVec ei(static_cast<std::size_t>(nvars), 0), ej = ei;
    ei[static_cast<std::size_t>(i)] = static_cast<int>(L);
    ej[static_cast<std::size_t>(j)] = static_cast<int>(L);
    const LaurentPoly num = LaurentPoly::monomial(nvars, 1, ei) +
                            LaurentPoly::monomial(nvars, 1, ej);
    ei[static_cast<std::size_t>(i)] = 1;
    ej[static_cast<std::size_t>(j)] = 1;
    const LaurentPoly den = LaurentPoly::monomial(nvars, 1, ei) +
                            LaurentPoly::monomial(nvars, 1, ej);
    prod = prod * exact_div(num, den);
  }
  return prod.coeff(ExpVec(static_cast<std::size_t>(nvars),
                           static_cast<int>(L) - 1));
}

}  // namespace ctcong
