#include <ctcong/modarith.hpp>

#include <map>
#include <mutex>

namespace ctcong {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 modpow(i64 b, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 base = static_cast<u64>(((b % static_cast<i64>(m)) + static_cast<i64>(m)) %
                              static_cast<i64>(m));
  u64 res = 1;
  while (e) {
    if (e & 1) res = mul_mod(res, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return res;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // these bases are deterministic for all n < 2^64
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    u64 x = modpow(static_cast<i64>(a % n), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

SymResidue symmetric_rep(i64 x, Prime p) {
  const i64 pv = static_cast<i64>(p.value());
  i64 r = x % pv;
  if (r < 0) r += pv;
  if (2 * r > pv) r -= pv;
  return SymResidue{r};
}

u64 canonical_residue(i64 x, Prime p) {
  const i64 pv = static_cast<i64>(p.value());
  i64 r = x % pv;
  if (r < 0) r += pv;
  return static_cast<u64>(r);
}

namespace {

// Per-prime factorial tables mod p (size p), shared across threads. Entries
// are never removed, so returned pointers stay valid.
struct PrimeTables {
  std::vector<u64> fact;      // fact[i] = i! mod p
  std::vector<u64> inv_fact;  // inverse factorials mod p
};

const PrimeTables& tables_for(Prime p) {
  static std::mutex mu;
  static std::map<u64, PrimeTables> cache;
  const u64 pv = p.value();
  if (pv > (1u << 22))
    throw std::domain_error("modarith: prime too large for factorial tables");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(pv);
  if (it != cache.end()) return it->second;
  PrimeTables t;
  t.fact.resize(pv);
  t.inv_fact.resize(pv);
  t.fact[0] = 1 % pv;
  for (u64 i = 1; i < pv; ++i) t.fact[i] = mul_mod(t.fact[i - 1], i, pv);
  t.inv_fact[pv - 1] = modpow(static_cast<i64>(t.fact[pv - 1]), pv - 2, pv);
  for (u64 i = pv - 1; i > 0; --i)
    t.inv_fact[i - 1] = mul_mod(t.inv_fact[i], i, pv);
  return cache.emplace(pv, std::move(t)).first->second;
}

// C(a, b) mod p for digits a, b < p.
u64 digit_binom(u64 a, u64 b, u64 pv, const PrimeTables& t) {
  if (b > a) return 0;
  return mul_mod(t.fact[a], mul_mod(t.inv_fact[b], t.inv_fact[a - b], pv), pv);
}

}  // namespace

u64 binom_mod(u64 n, i64 k, Prime p) {
  if (k < 0 || static_cast<u64>(k) > n) return 0;
  const u64 pv = p.value();
  if (pv == 2 && n == 0) return k == 0 ? 1 : 0;
  const PrimeTables& t = tables_for(p);
  u64 kk = static_cast<u64>(k);
  u64 res = 1 % pv;
  while (n || kk) {
    u64 nd = n % pv, kd = kk % pv;
    if (kd > nd) return 0;
    res = mul_mod(res, digit_binom(nd, kd, pv, t), pv);
    n /= pv;
    kk /= pv;
  }
  return res;
}

u64 multinom_mod(const std::vector<u64>& parts, Prime p) {
  if (parts.empty())
    throw std::invalid_argument("multinom_mod: empty part list");
  const u64 pv = p.value();
  const PrimeTables& t = tables_for(p);
  u64 total = 0;
  for (u64 x : parts) total += x;
  u64 res = 1 % pv;
  std::vector<u64> rest(parts);
  while (total) {
    u64 td = total % pv;
    u64 digit_sum = 0;
    u64 denom = 1 % pv;
    for (u64& x : rest) {
      u64 d = x % pv;
      digit_sum += d;
      denom = mul_mod(denom, t.inv_fact[d], pv);
      x /= pv;
    }
    // a carry in base-p addition of the parts kills the multinomial
    if (digit_sum != td) return 0;
    res = mul_mod(res, mul_mod(t.fact[td], denom, pv), pv);
    total /= pv;
  }
  return res;
}

u64 factorial_valuation(u64 n, Prime p) {
  u64 v = 0;
  const u64 pv = p.value();
  while (n) {
    n /= pv;
    v += n;
  }
  return v;
}

FactorialDecomp factorial_decomp(u64 n, Prime p) {
  const u64 pv = p.value();
  const PrimeTables& t = tables_for(p);
  FactorialDecomp out;
  out.valuation = factorial_valuation(n, p);
  // Wilson blocks: the p-coprime part of n! is (-1)^(n/p) * (n mod p)!
  // times the same for n/p, recursively.
  u64 unit = 1 % pv;
  bool negate = false;
  while (n) {
    unit = mul_mod(unit, t.fact[n % pv], pv);
    n /= pv;
    if (n & 1) negate = !negate;
  }
  if (negate && pv > 2) unit = pv - unit;
  out.unit = unit;
  return out;
}

u64 super_catalan_canonical(u64 m, u64 n, Prime p) {
  // T(m,n) = (2m)! (2n)! / (m! n! (m+n)!)
  const u64 pv = p.value();
  FactorialDecomp f2m = factorial_decomp(2 * m, p);
  FactorialDecomp f2n = factorial_decomp(2 * n, p);
  FactorialDecomp fm = factorial_decomp(m, p);
  FactorialDecomp fn = factorial_decomp(n, p);
  FactorialDecomp fmn = factorial_decomp(m + n, p);
  const i64 val = static_cast<i64>(f2m.valuation + f2n.valuation) -
                  static_cast<i64>(fm.valuation + fn.valuation + fmn.valuation);
  if (val < 0)
    throw std::logic_error("super_catalan_mod: negative net valuation");
  if (val > 0) return 0;
  u64 num = mul_mod(f2m.unit, f2n.unit, pv);
  u64 den = mul_mod(fm.unit, mul_mod(fn.unit, fmn.unit, pv), pv);
  return mul_mod(num, modpow(static_cast<i64>(den), pv - 2, pv), pv);
}

SymResidue super_catalan_mod(u64 m, u64 n, Prime p) {
  return symmetric_rep(static_cast<i64>(super_catalan_canonical(m, n, p)), p);
}

}  // namespace ctcong
