#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ctcong {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mul_mod(u64 a, u64 b, u64 m);

/// b^e mod m, without materializing b^e. modpow(x, 0, m) = 1 mod m.
u64 modpow(i64 b, u64 e, u64 m);

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

/// A validated prime modulus. Construction rejects composites, so every
/// downstream residue computation can assume a prime field.
class Prime {
public:
  explicit Prime(u64 value) : value_(value) {
    if (!is_prime_u64(value))
      throw std::invalid_argument("Prime: " + std::to_string(value) +
                                  " is not prime");
  }
  u64 value() const { return value_; }
  friend bool operator==(const Prime&, const Prime&) = default;

private:
  u64 value_;
};

/// Residue in the symmetric range (-p/2, p/2].
struct SymResidue {
  i64 value = 0;
  friend bool operator==(const SymResidue&, const SymResidue&) = default;
};

SymResidue symmetric_rep(i64 x, Prime p);

/// x reduced into [0, p).
u64 canonical_residue(i64 x, Prime p);

/// C(n, k) mod p via Lucas' theorem, digit by digit in base p.
/// k < 0 or k > n gives 0.
u64 binom_mod(u64 n, i64 k, Prime p);

/// (sum parts)! / prod(parts!) mod p. Zero exactly when adding the parts
/// in base p carries (generalized Lucas).
u64 multinom_mod(const std::vector<u64>& parts, Prime p);

/// n! = p^valuation * u with gcd(u, p) = 1 and unit = u mod p.
struct FactorialDecomp {
  u64 unit = 1;
  u64 valuation = 0;
  friend bool operator==(const FactorialDecomp&, const FactorialDecomp&) = default;
};

/// Legendre valuation of n! at p: sum_{i>=1} floor(n/p^i).
u64 factorial_valuation(u64 n, Prime p);

FactorialDecomp factorial_decomp(u64 n, Prime p);

/// Super Catalan number T(m,n) = C(2m,m) C(2n,n) / C(m+n,n) mod p, handled
/// through factorial decompositions so p-divisible denominators cancel by
/// valuation. Throws std::logic_error if the net valuation is negative
/// (impossible for genuine inputs; signals an arithmetic bug).
u64 super_catalan_canonical(u64 m, u64 n, Prime p);
SymResidue super_catalan_mod(u64 m, u64 n, Prime p);

}  // namespace ctcong
