#pragma once

#include <ctcong/modarith.hpp>
#include <ctcong/symindex.hpp>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctcong {

/// Exponent vector of a Laurent monomial; one (possibly negative) entry per
/// variable, compared lexicographically.
using ExpVec = std::vector<int>;

class NonExactDivision : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Sparse multivariate Laurent polynomial with exact integer coefficients or
/// coefficients mod a fixed prime; the domain is chosen at construction and
/// enforced at every operation boundary. Stored normalized: no zero
/// coefficients, all exponent vectors of equal length.
class LaurentPoly {
public:
  static LaurentPoly zero(int nvars);
  static LaurentPoly constant(int nvars, i64 c);
  static LaurentPoly monomial(int nvars, i64 c, ExpVec e);
  static LaurentPoly zero_mod(int nvars, Prime p);
  static LaurentPoly constant_mod(int nvars, i64 c, Prime p);
  static LaurentPoly monomial_mod(int nvars, i64 c, ExpVec e, Prime p);

  /// Exact-integer polynomial from (exponents, coefficient) pairs.
  static LaurentPoly from_terms(int nvars,
                                std::initializer_list<std::pair<ExpVec, i64>> ts);

  int nvars() const { return nvars_; }
  bool is_exact() const { return !modulus_.has_value(); }
  std::optional<u64> modulus() const { return modulus_; }
  const std::map<ExpVec, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of the all-zeros exponent vector (0 if absent).
  i64 ct() const;
  i64 coeff(const ExpVec& e) const;

  /// Componentwise exponent extremes over all stored terms; zero vector for
  /// the zero polynomial.
  ExpVec min_exponents() const;
  ExpVec max_exponents() const;

  LaurentPoly pow(u64 n) const;
  LaurentPoly shifted(const ExpVec& e) const;  // multiply by x^e
  LaurentPoly scaled(i64 c) const;

  /// Same terms with coefficients reduced mod p (exact domain input).
  LaurentPoly reduced_mod(Prime p) const;

  /// Rendering with variables named x, y, z, x4, x5 in order, e.g.
  /// "2 + x + x^-1".
  std::string str() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

private:
  LaurentPoly(int nvars, std::optional<u64> modulus)
      : nvars_(nvars), modulus_(modulus) {}
  void insert_term(ExpVec e, i64 c);
  i64 norm_coeff(i64 c) const;

  int nvars_ = 1;
  std::optional<u64> modulus_;
  std::map<ExpVec, i64> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient N/D when D divides N exactly in the Laurent ring; implemented as
/// reduction against the divisor's lex-leading term. Throws NonExactDivision
/// otherwise.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Freshman's Dream lift of a univariate mod-p polynomial: c x^e maps to
/// c x^(e p^a), the exponent held as SymIndex(e, 0). Coefficients are
/// unchanged since c^(p^a) = c mod p.
std::vector<SymMonomial> frobenius_lift(const LaurentPoly& poly, Prime p, u64 a);

/// Expand a symbolic monomial list at a concrete p^a small enough to
/// materialize; used to cross-check the lift against plain pow().
LaurentPoly materialize_sym(const std::vector<SymMonomial>& terms, Prime p, u64 a);

/// Convenience: exact univariate polynomial from (exponent, coefficient).
LaurentPoly uni(std::initializer_list<std::pair<int, i64>> ts);

}  // namespace ctcong
