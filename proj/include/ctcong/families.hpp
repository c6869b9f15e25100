#pragma once

#include <ctcong/ctengine.hpp>

#include <span>
#include <string>

namespace ctcong {

enum class FamilyKind {
  UnivariateKernel,  // CT kernel available, single index n
  Weighted,          // affine weight times a binomial term, single index
  DoubleSum,         // indices (n, m)
  TripleSum,         // indices (m1, m2, m3)
  MultiSum,          // indices (m1..m_nvars)
  SuperCatalan,      // double sum of super Catalan terms, optional weight
};

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One sequence family: its term evaluator plus, for univariate families,
/// the CT kernel that drives the prover. Caps bound the brute-force oracle;
/// exceeding them is an error, never a silent truncation.
struct FamilySpec {
  std::string name;
  FamilyKind kind = FamilyKind::UnivariateKernel;
  std::optional<KernelSpec> kernel;
  i64 weight_c1 = 0;  // weight c1*n + c0 (c1*(m+n) + c0 for double sums)
  i64 weight_c0 = 1;
  int nvars = 1;
  bool supports_shift = false;  // d != 0 admitted
  bool fixed_r = true;          // the source proposition fixes r = 1
  u64 min_prime = 2;
  u64 max_prime_power = 0;  // cap on p^a (0 = derive from max_terms)
  u64 max_terms = 10'000'000;
};

/// All families, in stable CLI-identifier order: central_binomial, catalan,
/// motzkin, binomial_square, trinomial, multinomial, weighted_central,
/// weighted_quartic, super_catalan, weighted_super_catalan.
const std::vector<FamilySpec>& registry();

/// Lookup by CLI identifier; throws std::invalid_argument for unknown names.
const FamilySpec& family(const std::string& name);

/// The Prop-7 style family over a chosen number of summation variables.
FamilySpec multinomial_family(int nvars);

/// Canonical residue of a single summand. Index arity must match the kind.
u64 term(const FamilySpec& f, std::span<const u64> indices, Prime p);

/// Incremental evaluator for Motzkin terms: maintains the coefficient row of
/// (1 + x + 1/x)^n mod p, so each step is division-free (the holonomic
/// recurrence would divide by n + 2, which vanishes mod p).
class MotzkinRowIter {
public:
  explicit MotzkinRowIter(Prime p) : p_(p) {}
  /// Returns M_n mod p for n = 0, 1, 2, ... on successive calls.
  u64 next();

private:
  Prime p_;
  std::vector<u64> row_{1};  // coefficients of x^0..x^n, symmetric half
};

/// Number of summands of the full oracle sum at (p, a, r): r p^a for single
/// sums, (p^a)^k for k-fold sums.
u64 oracle_term_count(const FamilySpec& f, Prime p, u64 a, u64 r);

/// Validates caps and (r, d) support; throws CapExceeded /
/// std::invalid_argument without computing anything.
void validate_point(const FamilySpec& f, Prime p, u64 a, u64 r, i64 d);

/// Exact symmetric residue of the full (multi-)sum by direct term
/// accumulation. The independent ground truth for every engine result.
SymResidue oracle_sum(const FamilySpec& f, Prime p, u64 a, u64 r = 1, i64 d = 0);

}  // namespace ctcong
