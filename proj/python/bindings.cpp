#include <ctcong/classify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ctcong;

namespace {

std::vector<u64> default_primes(u64 pmax, u64 pmin) {
  std::vector<u64> ps;
  for (u64 q : primes_up_to(pmax))
    if (q >= pmin) ps.push_back(q);
  return ps;
}

}  // namespace

PYBIND11_MODULE(ctcong, m) {
  m.doc() = "constant-term congruence prover: binomial-type partial sums "
            "modulo prime powers, with brute-force oracles and case-table "
            "discovery";

  m.def("is_prime", &is_prime_u64, py::arg("n"));
  m.def(
      "symmetric_rep",
      [](i64 x, u64 p) { return symmetric_rep(x, Prime(p)).value; },
      py::arg("x"), py::arg("p"), "representative of x mod p in (-p/2, p/2]");
  m.def("modpow", &modpow, py::arg("b"), py::arg("e"), py::arg("m"));
  m.def(
      "binom_mod",
      [](u64 n, i64 k, u64 p) { return binom_mod(n, k, Prime(p)); },
      py::arg("n"), py::arg("k"), py::arg("p"),
      "C(n, k) mod p by Lucas' theorem");
  m.def(
      "multinom_mod",
      [](const std::vector<u64>& parts, u64 p) {
        return multinom_mod(parts, Prime(p));
      },
      py::arg("parts"), py::arg("p"));
  m.def(
      "factorial_decomp",
      [](u64 n, u64 p) {
        const FactorialDecomp d = factorial_decomp(n, Prime(p));
        return py::make_tuple(d.unit, d.valuation);
      },
      py::arg("n"), py::arg("p"), "(unit, valuation) with n! = p^v * unit");
  m.def(
      "super_catalan_mod",
      [](u64 mm, u64 nn, u64 p) { return super_catalan_mod(mm, nn, Prime(p)).value; },
      py::arg("m"), py::arg("n"), py::arg("p"));

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def_static(
          "from_terms",
          [](int nvars, const std::vector<std::pair<ExpVec, i64>>& ts) {
            LaurentPoly p = LaurentPoly::zero(nvars);
            for (const auto& [e, c] : ts)
              p = p + LaurentPoly::monomial(nvars, c, e);
            return p;
          },
          py::arg("nvars"), py::arg("terms"),
          "exact-integer polynomial from [(exponents, coefficient), ...]")
      .def("ct", &LaurentPoly::ct)
      .def("coeff", &LaurentPoly::coeff, py::arg("exponents"))
      .def("pow", &LaurentPoly::pow, py::arg("n"))
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__str__", &LaurentPoly::str)
      .def("__repr__", &LaurentPoly::str);
  m.def("exact_div", &exact_div, py::arg("num"), py::arg("den"));

  m.def("families", [] {
    std::vector<std::string> names;
    for (const FamilySpec& f : registry()) names.push_back(f.name);
    return names;
  });
  m.def(
      "oracle_sum",
      [](const std::string& fam, u64 p, u64 a, u64 r, i64 d) {
        return oracle_sum(family(fam), Prime(p), a, r, d).value;
      },
      py::arg("family"), py::arg("p"), py::arg("a") = 1, py::arg("r") = 1,
      py::arg("d") = 0, "exact symmetric residue of the brute-force sum");
  m.def(
      "multinomial_oracle_sum",
      [](int nvars, u64 p, u64 a) {
        return oracle_sum(multinomial_family(nvars), Prime(p), a, 1, 0).value;
      },
      py::arg("nvars"), py::arg("p"), py::arg("a") = 1);
  m.def(
      "extract",
      [](const std::string& fam, u64 p, u64 a, u64 r, i64 d) {
        const FamilySpec& f = family(fam);
        if (!f.kernel)
          throw std::invalid_argument(fam + " has no constant-term kernel");
        return extract(with_r_d(*f.kernel, r, d), Prime(p), a).value;
      },
      py::arg("family"), py::arg("p"), py::arg("a") = 1, py::arg("r") = 1,
      py::arg("d") = 0, "residue via the constant-term pipeline");
  m.def(
      "diagonal_residue",
      [](u64 p, u64 a) { return diagonal_residue(Prime(p), a).value; },
      py::arg("p"), py::arg("a") = 1);
  m.def("diagonal_bruteforce", &diagonal_bruteforce, py::arg("limit"));
  m.def("multinomial_coeff_check", &multinomial_coeff_check, py::arg("L"),
        py::arg("nvars"));

  m.def(
      "discover_json",
      [](const std::string& fam, u64 pmax, u64 amax, i64 dmax, u64 r,
         int modulus, int jobs) {
        const FamilySpec& f = family(fam);
        std::vector<u64> primes = default_primes(pmax, std::max<u64>(f.min_prime, 5));
        std::vector<u64> a_values;
        for (u64 a = 1; a <= amax; ++a) a_values.push_back(a);
        std::vector<i64> d_values;
        for (i64 d = 0; d <= (f.supports_shift ? dmax : 0); ++d)
          d_values.push_back(d);
        return to_json(discover(f, primes, a_values, d_values, r, modulus,
                                a_values.size() > 1, jobs));
      },
      py::arg("family"), py::arg("pmax") = 19, py::arg("amax") = 2,
      py::arg("dmax") = 2, py::arg("r") = 1, py::arg("modulus") = 3,
      py::arg("jobs") = 1);
  m.def(
      "table_json",
      [](const std::string& prop, int jobs) { return to_json(audit_table(prop, jobs)); },
      py::arg("prop"), py::arg("jobs") = 1);
  m.def(
      "conjecture_json",
      [](const std::string& id, u64 pmax, int jobs) {
        const std::vector<u64> primes = default_primes(pmax, 5);
        return to_json(conjecture_check(id, primes, jobs));
      },
      py::arg("id"), py::arg("pmax") = 47, py::arg("jobs") = 1);
}
