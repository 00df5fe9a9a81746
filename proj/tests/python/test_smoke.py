import pytest

import lpfbinom


def test_beta_and_alpha():
    assert lpfbinom.beta(9, 2) == -27
    assert lpfbinom.beta(9, 3) == 30
    assert lpfbinom.alpha(15, 3) == 5
    assert lpfbinom.alpha_range(15, 5) == [0, 5, lpfbinom.alpha(15, 4), lpfbinom.alpha(15, 5)]


def test_beta_is_a_python_int_beyond_64_bits():
    b = lpfbinom.beta(2001, 300)
    assert isinstance(b, int)
    assert abs(b) > 2**64
    assert b % 2001 == lpfbinom.alpha(2001, 300)


def test_classify():
    c = lpfbinom.classify(9, 3)
    assert c["class"] == "AtLpf"
    assert c["expected"] == 3
    assert c["consistent"] is True
    assert lpfbinom.classify(15, 5)["expected"] is None


def test_domain_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        lpfbinom.alpha(8, 2)
    with pytest.raises(lpfbinom.DomainError):
        lpfbinom.beta(9, 1)
    with pytest.raises(ValueError):
        lpfbinom.fleck_holds(9, 3)


def test_psi_constructions():
    assert lpfbinom.psi(7) == [-1, -2, 1, 1]
    assert lpfbinom.psi_from_dickson(7) == lpfbinom.psi(7)
    assert lpfbinom.psi_closed_form(31) == lpfbinom.psi(31)
    assert lpfbinom.diff_mod(9) == [3, 3, 0, 0, 0]
    assert lpfbinom.psi_mod_p_congruence(13)


def test_conic():
    assert lpfbinom.conic_add((3, 1), (3, 1), 5, 97) == (7, 3)
    assert lpfbinom.conic_mul(3, (3, 1), 5, 97) == (18, 8)
    assert lpfbinom.torsion_x_identity_check(5, (3, 1), 5, 97)
    assert not lpfbinom.on_conic(3, 2, 5, 97)


def test_factor_and_scan():
    rep = lpfbinom.factor(10403)
    assert rep["outcome"] == "Factor" and rep["factor"] == 101
    assert rep["interval_trace"][0] == (2, 101)
    assert lpfbinom.factor(101)["outcome"] == "NoFactorFound"
    assert lpfbinom.factor(101, trial_division=False)["outcome"] == "PreconditionUnverifiable"
    recs = lpfbinom.scan(3, 2001, shards=2)
    assert [r["n"] for r in recs] == sorted(r["n"] for r in recs)
    assert all(not r["violations"] for r in recs)


def test_verify_and_primitives():
    assert lpfbinom.verify("identity", 200)["passed"]
    assert lpfbinom.isqrt(10404) == 102
    assert lpfbinom.binomial_general(-1, 3) == -1
    assert lpfbinom.wilson_holds(7) and not lpfbinom.wilson_holds(9)
