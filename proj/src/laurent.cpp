#include <ctcong/laurent.hpp>

#include <algorithm>
#include <sstream>

namespace ctcong {

namespace {

i64 add_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("laurent: integer coefficient overflow");
  return r;
}

i64 mul_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("laurent: integer coefficient overflow");
  return r;
}

void require_compatible(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("laurent: variable count mismatch");
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("laurent: coefficient domain mismatch");
}

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec sub_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string var_name(int i) {
  if (i == 0) return "x";
  if (i == 1) return "y";
  if (i == 2) return "z";
  return "x" + std::to_string(i + 1);
}

}  // namespace

i64 LaurentPoly::norm_coeff(i64 c) const {
  if (!modulus_) return c;
  const i64 m = static_cast<i64>(*modulus_);
  i64 r = c % m;
  if (r < 0) r += m;
  return r;
}

void LaurentPoly::insert_term(ExpVec e, i64 c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("laurent: exponent vector length mismatch");
  c = norm_coeff(c);
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(e), c);
  if (!fresh) {
    i64 s = modulus_ ? norm_coeff(it->second + c) : add_checked(it->second, c);
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }
}

LaurentPoly LaurentPoly::zero(int nvars) { return LaurentPoly(nvars, std::nullopt); }

LaurentPoly LaurentPoly::constant(int nvars, i64 c) {
  LaurentPoly p(nvars, std::nullopt);
  p.insert_term(ExpVec(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, i64 c, ExpVec e) {
  LaurentPoly p(nvars, std::nullopt);
  p.insert_term(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::zero_mod(int nvars, Prime p) {
  return LaurentPoly(nvars, p.value());
}

LaurentPoly LaurentPoly::constant_mod(int nvars, i64 c, Prime p) {
  LaurentPoly r(nvars, p.value());
  r.insert_term(ExpVec(nvars, 0), c);
  return r;
}

LaurentPoly LaurentPoly::monomial_mod(int nvars, i64 c, ExpVec e, Prime p) {
  LaurentPoly r(nvars, p.value());
  r.insert_term(std::move(e), c);
  return r;
}

LaurentPoly LaurentPoly::from_terms(
    int nvars, std::initializer_list<std::pair<ExpVec, i64>> ts) {
  LaurentPoly p(nvars, std::nullopt);
  for (const auto& [e, c] : ts) p.insert_term(e, c);
  return p;
}

i64 LaurentPoly::ct() const { return coeff(ExpVec(nvars_, 0)); }

i64 LaurentPoly::coeff(const ExpVec& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("laurent: exponent vector length mismatch");
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

ExpVec LaurentPoly::min_exponents() const {
  ExpVec r(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) { r = e; first = false; continue; }
    for (int i = 0; i < nvars_; ++i) r[i] = std::min(r[i], e[i]);
  }
  return r;
}

ExpVec LaurentPoly::max_exponents() const {
  ExpVec r(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) { r = e; first = false; continue; }
    for (int i = 0; i < nvars_; ++i) r[i] = std::max(r[i], e[i]);
  }
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  require_compatible(a, b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.insert_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  require_compatible(a, b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_)
    r.insert_term(e, b.modulus_ ? -c : mul_checked(c, -1));
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_compatible(a, b);
  LaurentPoly r(a.nvars_, a.modulus_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      i64 c = a.modulus_ ? static_cast<i64>(mul_mod(
                               static_cast<u64>(ca), static_cast<u64>(cb),
                               *a.modulus_))
                         : mul_checked(ca, cb);
      r.insert_term(add_exps(ea, eb), c);
    }
  return r;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly LaurentPoly::pow(u64 n) const {
  LaurentPoly result = modulus_ ? constant_mod(nvars_, 1, Prime(*modulus_))
                                : constant(nvars_, 1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("laurent: exponent vector length mismatch");
  LaurentPoly r(nvars_, modulus_);
  for (const auto& [ee, c] : terms_) r.terms_.emplace(add_exps(ee, e), c);
  return r;
}

LaurentPoly LaurentPoly::scaled(i64 c) const {
  LaurentPoly r(nvars_, modulus_);
  for (const auto& [e, cc] : terms_) {
    i64 prod = modulus_ ? static_cast<i64>(mul_mod(static_cast<u64>(cc),
                                                   static_cast<u64>(norm_coeff(c)),
                                                   *modulus_))
                        : mul_checked(cc, c);
    r.insert_term(e, prod);
  }
  return r;
}

LaurentPoly LaurentPoly::reduced_mod(Prime p) const {
  LaurentPoly r(nvars_, p.value());
  for (const auto& [e, c] : terms_) r.insert_term(e, c);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    i64 coef = c;
    if (first) {
      if (coef < 0) { os << "-"; coef = -coef; }
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (coef != 1 || !has_var) {
      os << coef;
      if (has_var) os << " ";
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << " ";
      first_var = false;
      os << var_name(i);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  require_compatible(num, den);
  if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (num.is_zero())
    return num.is_exact() ? LaurentPoly::zero(num.nvars())
                          : LaurentPoly::zero_mod(num.nvars(), Prime(*num.modulus()));

  const auto& dterms = den.terms();
  const ExpVec dlead_e = dterms.rbegin()->first;
  const i64 dlead_c = dterms.rbegin()->second;
  // For an exact quotient Q, lex-trailing(N) = lex-trailing(Q) + lex-trailing(D),
  // so Q's terms never drop below this bound.
  const ExpVec qmin =
      sub_exps(num.terms().begin()->first, dterms.begin()->first);
  const std::optional<u64> mod = num.modulus();
  const i64 dlead_inv =
      mod ? static_cast<i64>(modpow(dlead_c, *mod - 2, *mod)) : 0;

  LaurentPoly quot = mod ? LaurentPoly::zero_mod(num.nvars(), Prime(*mod))
                         : LaurentPoly::zero(num.nvars());
  LaurentPoly rem = num;
  std::size_t steps = 0;
  while (!rem.is_zero()) {
    if (++steps > 1000000)
      throw NonExactDivision("exact_div: reduction did not terminate");
    const ExpVec rlead_e = rem.terms().rbegin()->first;
    const i64 rlead_c = rem.terms().rbegin()->second;
    const ExpVec qe = sub_exps(rlead_e, dlead_e);
    if (qe < qmin) throw NonExactDivision("exact_div: remainder is nonzero");
    i64 qc;
    if (mod) {
      qc = static_cast<i64>(
          mul_mod(static_cast<u64>(rlead_c), static_cast<u64>(dlead_inv), *mod));
    } else {
      if (rlead_c % dlead_c != 0)
        throw NonExactDivision("exact_div: coefficient not divisible");
      qc = rlead_c / dlead_c;
    }
    LaurentPoly qterm = mod ? LaurentPoly::monomial_mod(num.nvars(), qc, qe,
                                                        Prime(*mod))
                            : LaurentPoly::monomial(num.nvars(), qc, qe);
    quot = quot + qterm;
    rem = rem - qterm * den;
  }
  return quot;
}

std::vector<SymMonomial> normalize_sym(std::vector<SymMonomial> terms, Prime p) {
  std::sort(terms.begin(), terms.end(), [](const SymMonomial& a,
                                           const SymMonomial& b) {
    return a.exp < b.exp;
  });
  std::vector<SymMonomial> out;
  for (const auto& t : terms) {
    u64 c = t.coef % p.value();
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef = (out.back().coef + c) % p.value();
    } else {
      out.push_back(SymMonomial{c, t.exp});
    }
  }
  std::erase_if(out, [](const SymMonomial& t) { return t.coef == 0; });
  return out;
}

std::vector<SymMonomial> frobenius_lift(const LaurentPoly& poly, Prime p,
                                        u64 /*a*/) {
  if (poly.nvars() != 1)
    throw std::invalid_argument("frobenius_lift: univariate polynomials only");
  if (poly.modulus() != p.value())
    throw std::invalid_argument("frobenius_lift: polynomial must be mod p");
  std::vector<SymMonomial> out;
  for (const auto& [e, c] : poly.terms())
    out.push_back(SymMonomial{static_cast<u64>(c), SymIndex{e[0], 0}});
  return normalize_sym(std::move(out), p);
}

LaurentPoly materialize_sym(const std::vector<SymMonomial>& terms, Prime p,
                            u64 a) {
  u64 pa = 1;
  for (u64 i = 0; i < a; ++i) {
    if (pa > (1ull << 30) / p.value())
      throw std::overflow_error("materialize_sym: p^a too large");
    pa *= p.value();
  }
  LaurentPoly out = LaurentPoly::zero_mod(1, p);
  for (const auto& t : terms) {
    i64 e = t.exp.alpha * static_cast<i64>(pa) + t.exp.beta;
    if (e > (1 << 30) || e < -(1 << 30))
      throw std::overflow_error("materialize_sym: exponent too large");
    out = out + LaurentPoly::monomial_mod(1, static_cast<i64>(t.coef),
                                          ExpVec{static_cast<int>(e)}, p);
  }
  return out;
}

LaurentPoly uni(std::initializer_list<std::pair<int, i64>> ts) {
  LaurentPoly p = LaurentPoly::zero(1);
  for (const auto& [e, c] : ts)
    p = p + LaurentPoly::monomial(1, c, ExpVec{e});
  return p;
}

}  // namespace ctcong
