#pragma once

#include <ctcong/laurent.hpp>

#include <vector>

namespace ctcong {

/// One partial-sum family as a constant-term kernel: the n-th summand is
/// CT[prefactor * base^n * x^(-d)] and the sum runs over n in [0, r p^a).
struct KernelSpec {
  LaurentPoly prefactor;  // exact integers, univariate
  LaurentPoly base;       // exact integers, univariate
  u64 r = 1;
  i64 d = 0;
};

KernelSpec with_r_d(const KernelSpec& k, u64 r, i64 d);

struct ClearedDenominator {
  u64 t = 0;
  LaurentPoly den;  // exact integers, nonzero constant term
};

/// Rewrites base - 1 = x^(-t) * D with t minimal and D having nonzero
/// constant term. Throws std::domain_error when no such t >= 0 exists
/// (e.g. base = 1 + x) or when base = 1.
ClearedDenominator clear_denominator(const LaurentPoly& base);

/// Coefficient stream of 1/D mod p with its eventual period. Coefficients
/// are generated by the linear recurrence induced by D; the stored window
/// covers preperiod + period values and repeats beyond it.
struct PeriodicSeries {
  Prime prime;
  u32 preperiod = 0;
  u32 period = 1;
  std::vector<u64> coeffs;  // length preperiod + period

  u64 at(u64 i) const {
    if (i < coeffs.size()) return coeffs[i];
    return coeffs[preperiod + static_cast<std::size_t>((i - preperiod) % period)];
  }
};

/// Finds the minimal (preperiod, period) of the coefficients of 1/D mod p,
/// verified over a window of preperiod + 3*period terms. Throws
/// std::domain_error if no period <= search_limit exists (unsupported
/// kernel) or if D's constant term vanishes mod p.
PeriodicSeries series_period(const LaurentPoly& den, Prime p,
                             u32 search_limit = 64);

/// Thrown when p^a is too small relative to the spread of beta offsets for
/// the symbolic monomial list to represent distinct exponents faithfully.
class GuardViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Numerator of the closed sum: prefactor * (base^(r p^a) - 1) * x^(-d),
/// with base^r computed exactly, reduced mod p and Frobenius-lifted so each
/// exponent becomes alpha * p^a + beta. Requires p^a > 2 max|beta| so
/// distinct symbolic exponents are genuinely distinct; otherwise throws
/// GuardViolation.
std::vector<SymMonomial> build_numerator(const KernelSpec& k, Prime p, u64 a);

/// Full pipeline: sum_{n=0}^{r p^a - 1} CT[F B^n x^(-d)] mod p, via
/// denominator clearing and periodic coefficient extraction at the (usually
/// symbolic) indices -alpha p^a - beta - t. Exact for every a >= 0: small
/// p^a is materialized directly, large p^a uses the symbolic index rule.
SymResidue extract(const KernelSpec& k, Prime p, u64 a);

/// Diagonal coefficient of 1/((1+y+xy)(1+x+xy)) at n = p^a - 1, using the
/// verified period-3 recurrence a(n+2)+a(n+1)+a(n) = 0, a(0)=1, a(1)=-1.
SymResidue diagonal_residue(Prime p, u64 a);

/// Diagonal coefficients a(0..limit) of the same rational function by
/// truncated bivariate series inversion; validates the recurrence fixture.
/// Requires limit <= 64.
std::vector<i64> diagonal_bruteforce(u32 limit);

/// Coefficient of prod x_i^(L-1) in the cyclic pair product
/// prod_i (x_i^L + x_{i+1}^L)/(x_i + x_{i+1}), computed exactly. L must be
/// odd (the division is not exact otherwise); supports 2..5 variables.
i64 multinomial_coeff_check(u64 L, int nvars);

}  // namespace ctcong
