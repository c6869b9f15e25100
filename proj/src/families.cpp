#include <ctcong/families.hpp>

#include <algorithm>

namespace ctcong {

namespace {

KernelSpec central_binomial_kernel() {
  // C(2n, n+d) = CT[(2 + x + 1/x)^n x^(-d)]
  return KernelSpec{uni({{0, 1}}), uni({{-1, 1}, {0, 2}, {1, 1}}), 1, 0};
}

KernelSpec catalan_kernel() {
  // C_n = CT[(1 - x)(2 + x + 1/x)^n]
  return KernelSpec{uni({{0, 1}, {1, -1}}), uni({{-1, 1}, {0, 2}, {1, 1}}), 1, 0};
}

KernelSpec motzkin_kernel() {
  // M_n = CT[(1 - x^2)(1 + x + 1/x)^n]
  return KernelSpec{uni({{0, 1}, {2, -1}}), uni({{-1, 1}, {0, 1}, {1, 1}}), 1, 0};
}

std::vector<FamilySpec> build_registry() {
  std::vector<FamilySpec> fs;

  FamilySpec central;
  central.name = "central_binomial";
  central.kind = FamilyKind::UnivariateKernel;
  central.kernel = central_binomial_kernel();
  central.supports_shift = true;
  central.fixed_r = false;
  fs.push_back(central);

  FamilySpec catalan;
  catalan.name = "catalan";
  catalan.kind = FamilyKind::UnivariateKernel;
  catalan.kernel = catalan_kernel();
  catalan.fixed_r = false;
  fs.push_back(catalan);

  FamilySpec motzkin;
  motzkin.name = "motzkin";
  motzkin.kind = FamilyKind::UnivariateKernel;
  motzkin.kernel = motzkin_kernel();
  motzkin.fixed_r = false;
  motzkin.max_prime_power = 4096;  // row updates cost O(n) per term
  motzkin.max_terms = 32768;       // keeps the quadratic row cost bounded
  fs.push_back(motzkin);

  FamilySpec bsq;
  bsq.name = "binomial_square";
  bsq.kind = FamilyKind::DoubleSum;
  bsq.nvars = 2;
  bsq.max_prime_power = 2000;
  fs.push_back(bsq);

  FamilySpec tri;
  tri.name = "trinomial";
  tri.kind = FamilyKind::TripleSum;
  tri.nvars = 3;
  tri.min_prime = 3;
  tri.max_prime_power = 150;
  fs.push_back(tri);

  fs.push_back(multinomial_family(4));

  FamilySpec wc;
  wc.name = "weighted_central";
  wc.kind = FamilyKind::Weighted;
  wc.weight_c1 = 3;
  wc.weight_c0 = 1;
  fs.push_back(wc);

  FamilySpec wq;
  wq.name = "weighted_quartic";
  wq.kind = FamilyKind::Weighted;
  wq.weight_c1 = 5;
  wq.weight_c0 = 1;
  fs.push_back(wq);

  FamilySpec sc;
  sc.name = "super_catalan";
  sc.kind = FamilyKind::SuperCatalan;
  sc.nvars = 2;
  sc.min_prime = 5;  // symmetric residues +-7 collapse below p = 5
  sc.max_prime_power = 2000;
  fs.push_back(sc);

  FamilySpec wsc = sc;
  wsc.name = "weighted_super_catalan";
  wsc.weight_c1 = 3;
  wsc.weight_c0 = 1;
  fs.push_back(wsc);

  return fs;
}

u64 checked_prime_power(Prime p, u64 a) {
  u64 r = 1;
  for (u64 i = 0; i < a; ++i) {
    if (r > UINT64_MAX / p.value())
      throw CapExceeded("oracle_sum: p^a overflows");
    r *= p.value();
  }
  return r;
}

u64 ipow(u64 b, u64 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

const std::vector<FamilySpec>& registry() {
  static const std::vector<FamilySpec> fs = build_registry();
  return fs;
}

const FamilySpec& family(const std::string& name) {
  for (const FamilySpec& f : registry())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown family: " + name);
}

FamilySpec multinomial_family(int nvars) {
  if (nvars < 2 || nvars > 5)
    throw std::invalid_argument("multinomial_family: nvars in [2,5]");
  FamilySpec f;
  f.name = "multinomial";
  f.kind = FamilyKind::MultiSum;
  f.nvars = nvars;
  f.min_prime = 3;
  f.max_prime_power = 30;
  return f;
}

u64 MotzkinRowIter::next() {
  const u64 pv = p_.value();
  const u64 m = (row_[0] + pv - (row_.size() > 2 ? row_[2] : 0)) % pv;
  // advance: multiply the symmetric row by (1 + x + 1/x)
  std::vector<u64> next_row(row_.size() + 1, 0);
  for (std::size_t k = 0; k < next_row.size(); ++k) {
    u64 acc = 0;
    if (k == 0) {
      acc = (row_[0] + 2 * (row_.size() > 1 ? row_[1] : 0)) % pv;
    } else {
      acc = row_[k - 1];
      if (k < row_.size()) acc += row_[k];
      if (k + 1 < row_.size()) acc += row_[k + 1];
      acc %= pv;
    }
    next_row[k] = acc;
  }
  row_ = std::move(next_row);
  return m;
}

u64 term(const FamilySpec& f, std::span<const u64> indices, Prime p) {
  const u64 pv = p.value();
  auto arity = [&](std::size_t want) {
    if (indices.size() != want)
      throw std::invalid_argument("term: index arity mismatch for " + f.name);
  };
  if (f.name == "central_binomial") {
    arity(1);
    return binom_mod(2 * indices[0], static_cast<i64>(indices[0]), p);
  }
  if (f.name == "catalan") {
    arity(1);
    const u64 n = indices[0];
    const u64 a = binom_mod(2 * n, static_cast<i64>(n), p);
    const u64 b = binom_mod(2 * n, static_cast<i64>(n) - 1, p);
    return (a + pv - b) % pv;
  }
  if (f.name == "motzkin") {
    arity(1);
    MotzkinRowIter it(p);
    u64 m = it.next();
    for (u64 i = 0; i < indices[0]; ++i) m = it.next();
    return m;
  }
  if (f.name == "binomial_square") {
    arity(2);
    const u64 b = binom_mod(indices[0] + indices[1],
                            static_cast<i64>(indices[1]), p);
    return mul_mod(b, b, pv);
  }
  if (f.kind == FamilyKind::TripleSum || f.kind == FamilyKind::MultiSum) {
    arity(static_cast<std::size_t>(f.nvars));
    return multinom_mod(std::vector<u64>(indices.begin(), indices.end()), p);
  }
  if (f.name == "weighted_central" || f.name == "weighted_quartic") {
    arity(1);
    const u64 n = indices[0];
    const u64 w = (mul_mod(static_cast<u64>(f.weight_c1) % pv, n % pv, pv) +
                   canonical_residue(f.weight_c0, p)) %
                  pv;
    const u64 b = f.name == "weighted_central"
                      ? binom_mod(2 * n, static_cast<i64>(n), p)
                      : binom_mod(4 * n, static_cast<i64>(2 * n), p);
    return mul_mod(w, b, pv);
  }
  if (f.kind == FamilyKind::SuperCatalan) {
    arity(2);
    const u64 t = super_catalan_canonical(indices[0], indices[1], p);
    if (f.weight_c1 == 0) return t;
    const u64 w =
        (mul_mod(static_cast<u64>(f.weight_c1) % pv, (indices[0] + indices[1]) % pv,
                 pv) +
         canonical_residue(f.weight_c0, p)) %
        pv;
    return mul_mod(w, t, pv);
  }
  throw std::invalid_argument("term: unhandled family " + f.name);
}

u64 oracle_term_count(const FamilySpec& f, Prime p, u64 a, u64 r) {
  const u64 pa = checked_prime_power(p, a);
  switch (f.kind) {
    case FamilyKind::UnivariateKernel:
    case FamilyKind::Weighted:
      return r * pa;
    default:
      return ipow(pa, static_cast<u64>(f.nvars));
  }
}

void validate_point(const FamilySpec& f, Prime p, u64 a, u64 r, i64 d) {
  if (r == 0) throw std::invalid_argument("oracle_sum: r must be >= 1");
  if (p.value() < f.min_prime)
    throw std::invalid_argument("oracle_sum: " + f.name + " requires p >= " +
                                std::to_string(f.min_prime));
  if (f.fixed_r && r != 1)
    throw std::invalid_argument("oracle_sum: " + f.name + " fixes r = 1");
  if (!f.supports_shift && d != 0)
    throw std::invalid_argument("oracle_sum: " + f.name + " fixes d = 0");
  if (d < 0) throw std::invalid_argument("oracle_sum: d must be >= 0");
  const u64 pa = checked_prime_power(p, a);
  if (f.max_prime_power && pa > f.max_prime_power)
    throw CapExceeded("oracle_sum: p^a = " + std::to_string(pa) + " exceeds " +
                      f.name + " cap " + std::to_string(f.max_prime_power));
  const bool single = f.kind == FamilyKind::UnivariateKernel ||
                      f.kind == FamilyKind::Weighted;
  if (single) {
    if (r > f.max_terms / pa)
      throw CapExceeded("oracle_sum: r p^a exceeds cap " +
                        std::to_string(f.max_terms));
  } else {
    u64 total = 1;
    for (int i = 0; i < f.nvars; ++i) {
      if (total > f.max_terms / pa)
        throw CapExceeded("oracle_sum: (p^a)^" + std::to_string(f.nvars) +
                          " exceeds cap " + std::to_string(f.max_terms));
      total *= pa;
    }
  }
  if (f.supports_shift && d > static_cast<i64>(pa))
    throw std::invalid_argument("oracle_sum: shift d must be <= p^a");
}

SymResidue oracle_sum(const FamilySpec& f, Prime p, u64 a, u64 r, i64 d) {
  validate_point(f, p, a, r, d);
  const u64 pv = p.value();
  const u64 pa = checked_prime_power(p, a);
  u64 acc = 0;

  switch (f.kind) {
    case FamilyKind::UnivariateKernel: {
      const u64 limit = r * pa;
      if (f.name == "motzkin") {
        MotzkinRowIter it(p);
        for (u64 n = 0; n < limit; ++n) acc = (acc + it.next()) % pv;
      } else if (f.name == "catalan") {
        for (u64 n = 0; n < limit; ++n) {
          const u64 x = binom_mod(2 * n, static_cast<i64>(n), p);
          const u64 y = binom_mod(2 * n, static_cast<i64>(n) - 1, p);
          acc = (acc + x + pv - y) % pv;
        }
      } else {
        for (u64 n = 0; n < limit; ++n)
          acc = (acc + binom_mod(2 * n, static_cast<i64>(n) + d, p)) % pv;
      }
      break;
    }
    case FamilyKind::Weighted: {
      const u64 limit = r * pa;
      for (u64 n = 0; n < limit; ++n) {
        const u64 i[] = {n};
        acc = (acc + term(f, i, p)) % pv;
      }
      break;
    }
    case FamilyKind::DoubleSum:
    case FamilyKind::SuperCatalan: {
      for (u64 n = 0; n < pa; ++n)
        for (u64 m = 0; m < pa; ++m) {
          const u64 i[] = {n, m};
          acc = (acc + term(f, i, p)) % pv;
        }
      break;
    }
    case FamilyKind::TripleSum:
    case FamilyKind::MultiSum: {
      std::vector<u64> idx(static_cast<std::size_t>(f.nvars), 0);
      while (true) {
        acc = (acc + term(f, idx, p)) % pv;
        int pos = f.nvars - 1;
        while (pos >= 0) {
          if (++idx[static_cast<std::size_t>(pos)] < pa) break;
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
      break;
    }
  }
  return symmetric_rep(static_cast<i64>(acc), p);
}

}  // namespace ctcong
