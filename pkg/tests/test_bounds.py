import json
import math
from fractions import Fraction

import pytest

from ffprng.galois import ParameterError, build_field
from ffprng.ratfield import RationalFunctionField
from ffprng.seqgen import rational_family
from ffprng.bounds import (BoundInputs, QSqrt, comparison_remarks,
                           correlation_bound, correlation_bound_elliptic,
                           correlation_bound_rational, lc_bound_elliptic,
                           lc_bound_general, lc_bound_prime, lc_bound_rational,
                           nlc_bound, pattern_bound, period_guarantee,
                           suspect_lc_corollary, verify_family, weil_bound,
                           weil_bound_simple_pole)


def test_bound_inputs_validation():
    bi = BoundInputs(q=64, p=2, g=1)
    assert bi.h == 6
    with pytest.raises(ParameterError):
        BoundInputs(q=12, p=2, g=0)


def test_weil_bound_values():
    assert weil_bound(9, 0, [(1, 1)]) == 0  # (2*0-2 + 2*1) * 3 = 0
    q, d = 49, 3
    assert weil_bound(q, 1, [(1, d)]) == pytest.approx(2 * d * math.sqrt(q))
    assert weil_bound_simple_pole(q, d) == pytest.approx(2 * d * math.sqrt(q))
    assert weil_bound(q, 0, [(1, 2), (1, 2)]) == pytest.approx(
        (4 * 2 - 2) * math.sqrt(q))
    with pytest.raises(ParameterError):
        weil_bound(9, 0, [])


def test_period_guarantee_values():
    assert period_guarantee(128, 0, 2, 1) == pytest.approx(
        6 * math.sqrt(128))  # ~67.88 < 127: guaranteed
    assert period_guarantee(64, 1, 2, 1) == pytest.approx(64)  # 64 < 65
    assert period_guarantee(5, 1, 2, 1) > 9  # not guaranteed at q=5, N=9


def test_lc_bound_values():
    assert lc_bound_prime(126, 5, 1) == pytest.approx(121 / 6)
    assert lc_bound_prime(10, 5, 2) == 0
    assert lc_bound_rational(128, 2) == pytest.approx(
        (127 - 2 * math.sqrt(128)) / (4 * math.sqrt(128)))
    assert lc_bound_elliptic(64, 0, 2, 1) == pytest.approx(33 / 32)
    # general form reduces to zero when n hits the elliptic threshold
    n = 2 * 2 * math.sqrt(64)
    assert lc_bound_elliptic(64, int(n) - 65, 2, 1) == pytest.approx(0)
    # monotone: grows with n, shrinks with d
    assert lc_bound_general(64, 0, 100, 2, 1) < lc_bound_general(
        64, 0, 200, 2, 1)
    assert lc_bound_general(64, 0, 100, 3, 1) < lc_bound_general(
        64, 0, 100, 2, 1)


def test_correlation_bound_cases():
    q = 64
    assert correlation_bound(q, 0, "shifted", 2, 1, 2, 1) == pytest.approx(
        6 * math.sqrt(q))
    assert correlation_bound(q, 0, "zero-distinct-poles", 2, 1, 2, 1) == \
        pytest.approx(6 * math.sqrt(q))
    assert correlation_bound(q, 0, "zero-same-pole", 2, 1) == pytest.approx(
        2 * math.sqrt(q))  # (-2 + 2d) sqrt(q) at d = 2
    assert correlation_bound_rational(128, 2) == pytest.approx(
        6 * math.sqrt(128))
    assert correlation_bound_elliptic(64, 2, 1, 2, 1) == pytest.approx(64)
    with pytest.raises(ParameterError):
        correlation_bound(q, 0, "same-z", 2, 1)
    with pytest.raises(ParameterError):
        correlation_bound(q, 0, "shifted", 2, 1)  # missing second pole


def test_pattern_bound_values():
    assert pattern_bound(64, 1, 2, 2, 1, 1) == pytest.approx(16)
    # genus 0, d=2, m*=1, p=2, r=1: the two terms cancel exactly
    assert pattern_bound(128, 0, 2, 2, 1, 1) == pytest.approx(0)
    assert pattern_bound(64, 1, 2, 2, 1, 2) > pattern_bound(64, 1, 2, 2, 1, 1)


def test_nlc_bound_values():
    assert nlc_bound(103, 101, 1, 2, 1, 2) == pytest.approx(20.2)
    assert nlc_bound(127, 2, 7, 2, 1, 2) < 0  # vacuous


def test_suspect_formula_computed_not_asserted():
    # negative for sensible parameters: flagged, never used as a gate
    val = suspect_lc_corollary(128, 0, 127, 2, 1)
    assert isinstance(val, float)


def test_qsqrt_exact_arithmetic():
    a = QSqrt(1, 2, 5)
    b = QSqrt(Fraction(1, 2), -1, 5)
    assert (a + b) - b == a
    assert float(QSqrt(0, 1, 4)) == 2.0
    assert QSqrt(-8, 1, 65).sign() == 1
    assert QSqrt(9, -1, 80).sign() == 1
    assert QSqrt(-9, 1, 80).sign() == -1
    assert QSqrt(2, -1, 4).sign() == 0
    assert QSqrt(0, 0, 7).sign() == 0


def test_comparison_remarks_exact():
    q, d, t = 64, 3, 1
    r = comparison_remarks(q, d, t=t)
    # L1 - L1' = 2 / (2 d sqrt(q)), written as a multiple of sqrt(q)
    assert r["L1_diff"] == QSqrt(0, Fraction(2, 2 * d * q), q)
    assert r["L1_diff"].sign() == 1
    assert r["C1_diff"] == QSqrt(-6, 0, q)
    assert r["C1_diff"].sign() == -1
    assert r["C2_diff"] == QSqrt(-abs(t), -2, q)
    assert r["C2_diff"].sign() == -1
    assert float(r["L1_diff"]) == pytest.approx(2 / (2 * d * math.sqrt(q)))
    assert float(r["C2_diff"]) == pytest.approx(-2 * math.sqrt(q) - abs(t))


def test_verify_family_report():
    FF = RationalFunctionField(build_field(2, 3))
    records = rational_family(FF, 2, mode="sample", count=8, seed=1)
    report = verify_family(records, n_pairs=10, pattern_r=(2,),
                           patterns_per_seq=4, pattern_seqs=4, seed=2)
    doc = json.loads(report.to_json())
    assert doc["schema"] == "ffprng-report/1"
    assert doc["aggregates"]["checks"] == len(doc["per_check"])
    # every pass flag is recomputable from the stored numbers
    for chk in doc["per_check"]:
        if "lower-bound" in chk["flags"]:
            assert chk["pass"] == (chk["measured"] >= chk["bound"] - 1e-6)
        elif chk["id"].startswith(("correlation", "pattern")):
            assert chk["pass"] == (chk["measured"] <= chk["bound"] + 1e-6)
    # identical inputs give byte-identical serialized reports
    again = verify_family(records, n_pairs=10, pattern_r=(2,),
                          patterns_per_seq=4, pattern_seqs=4, seed=2)
    assert again.to_json() == report.to_json()


def test_verify_family_excludes_zero_shift_same_z():
    FF = RationalFunctionField(build_field(2, 3))
    records = rational_family(FF, 2, mode="sample", count=1, seed=3)
    records = records + records  # identical pair: tau=0 must be skipped
    report = verify_family(records, n_pairs=4, pattern_r=(), seed=0)
    for chk in report.checks:
        if chk.check_id.startswith("correlation"):
            assert not chk.flags[0].endswith("=0") or \
                records[0].z_repr != records[1].z_repr
    assert report.all_passed()
