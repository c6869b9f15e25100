import json

import ctcong


def test_modular_basics():
    assert ctcong.symmetric_rep(6, 5) == 1
    assert ctcong.symmetric_rep(4, 5) == -1
    assert ctcong.modpow(5, 3, 3) == 2
    assert ctcong.binom_mod(12, 6, 5) == 4
    assert ctcong.binom_mod(4, 7, 5) == 0
    assert ctcong.multinom_mod([2, 2, 2], 3) == 0
    assert ctcong.factorial_decomp(5, 5) == (4, 1)
    assert ctcong.super_catalan_mod(2, 1, 5) == -1  # T(2,1) = 4 = -1 mod 5


def test_laurent():
    base = ctcong.LaurentPoly.from_terms(1, [([-1], 1), ([0], 2), ([1], 1)])
    sq = base.pow(2)
    assert sq.ct() == 6
    assert sq.coeff([1]) == 4
    one_minus_x = ctcong.LaurentPoly.from_terms(1, [([0], 1), ([1], -1)])
    cubes = ctcong.LaurentPoly.from_terms(1, [([0], 1), ([3], -1)])
    assert str(ctcong.exact_div(cubes, one_minus_x)) == "1 + x + x^2"


def test_engine_matches_oracle():
    for fam in ("central_binomial", "catalan", "motzkin"):
        for p in (5, 7, 13):
            assert ctcong.extract(fam, p, a=1) == ctcong.oracle_sum(fam, p, a=1)
    assert ctcong.oracle_sum("catalan", 5) == -2
    assert ctcong.extract("central_binomial", 7) == 1
    assert ctcong.diagonal_residue(5, 1) == ctcong.oracle_sum("binomial_square", 5)
    assert ctcong.diagonal_bruteforce(5) == [1, -1, 0, 1, -1, 0]


def test_reports():
    rep = json.loads(ctcong.conjecture_json("1", pmax=23))
    assert rep["all_hold"] is True
    rep = json.loads(ctcong.conjecture_json("ps0", pmax=13))
    assert rep["all_hold"] is False and rep["sign_swapped"] is True
    audit = json.loads(ctcong.table_json("prop3"))
    assert len(audit["discrepancies"]) > 0
    assert audit["discovered"]["consistent"] is True
