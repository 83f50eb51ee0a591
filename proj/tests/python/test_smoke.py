from fractions import Fraction
from pathlib import Path

import pytest

import egfasym

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def bfile(anum):
    values = {}
    for line in (FIXTURES / f"b{anum[1:]}.txt").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            n, v = line.split()
            values[int(n)] = int(v)
    return values


@pytest.mark.parametrize("anum", ["A143405", "A355291", "A002872", "A002874"])
def test_coefficients_match_fixtures(anum):
    p = egfasym.known_families()[anum]
    ref = bfile(anum)
    got = egfasym.coefficients(p, 120)
    assert got == [ref[n] for n in range(121)]


def test_rational_weights_give_fractions():
    p = egfasym.params(1, Fraction(5, 2), 1, Fraction(1, 3), 0)
    assert egfasym.coefficients(p, 1) == [1, Fraction(17, 6)]


def test_params_validation_and_regime():
    assert egfasym.known_families()["A143405"].regime == "boundary"
    assert egfasym.known_families()["A002874"].regime == "super"
    assert egfasym.params(1, 3, 2, 1, -2).regime == "full-only"
    with pytest.raises(egfasym.EgfError, match="OrderViolation"):
        egfasym.params(1, 1, 1, 1, 0)
    with pytest.raises(egfasym.EgfError, match="NonPositiveM"):
        egfasym.params(0, 2, 1, 1, 0)


def test_correction_constant():
    fam = egfasym.known_families()
    p = fam["A355291"]
    assert Fraction(p.correction_constant()) + Fraction(p.s) == Fraction(-17, 8)
    with pytest.raises(egfasym.EgfError, match="FullFormulaRequired"):
        egfasym.params(1, 3, 2, 1, -2).correction_constant()


def test_estimate_close_to_exact():
    p = egfasym.known_families()["A143405"]
    a = egfasym.coefficients(p, 300)[300]
    est = egfasym.estimate(p, 300, "full", 30)
    assert est["formula"] == "full"
    # a(n) carries the e^{m+r+s} prefactor separately
    import math
    log10_a = math.log10(a) + float(Fraction(p.prefactor_exponent)) / math.log(10)
    assert abs(log10_a - est["log10"]) < 0.01


def test_ratios_and_richardson():
    p = egfasym.known_families()["A002874"]
    f = egfasym.ratios(p, 400, "simplified", 40)
    assert len(f) == 400
    assert 0.95 < float(f[-1]) < 1.0
    e = float(egfasym.richardson(f, 10, 40))
    assert abs(e - 1) < abs(float(f[-1]) - 1)


def test_richardson_weights_sum_to_one():
    for m in (1, 2, 7, 30):
        assert sum(egfasym.richardson_weights(m)) == 1


def test_lambert_w0():
    w = float(egfasym.lambert_w0("1", 40))
    assert abs(w - 0.5671432904097838) < 1e-15
    assert egfasym.lambert_w0("2.718281828459045235360287471352662497757", 40).startswith("1.0000000000")


def test_saddle_positive_root():
    p = egfasym.known_families()["A002872"]
    z = float(egfasym.saddle(p, 1000))
    assert 0 < z < 5
