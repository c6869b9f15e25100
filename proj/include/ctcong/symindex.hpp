#pragma once

#include <ctcong/modarith.hpp>

#include <vector>

namespace ctcong {

/// Exponent alpha * p^a + beta, kept symbolic so monomials like x^(p^a + d)
/// never have to be materialized.
struct SymIndex {
  i64 alpha = 0;
  i64 beta = 0;
  friend bool operator==(const SymIndex&, const SymIndex&) = default;
  friend auto operator<=>(const SymIndex&, const SymIndex&) = default;
};

struct SymMonomial {
  u64 coef = 0;  // residue mod p, nonzero in normalized lists
  SymIndex exp;
  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;
};

/// Sorted by exponent, like-exponent terms merged, zero coefficients dropped.
std::vector<SymMonomial> normalize_sym(std::vector<SymMonomial> terms, Prime p);

}  // namespace ctcong
