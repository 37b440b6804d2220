import cmath
import math

import numpy as np
import pytest

from cuspbound.errors import DomainError, NonpositiveLength, NotUnitModulus, ZeroTrace
from cuspbound.moebius import IsometryClass, MoebiusMap, classify, compose, translation_length
from cuspbound.witnesses import (
    WitnessParams,
    gamma_full_size,
    general_witness,
    general_witness_closed_form,
    lemma31_case1_bound,
    lemma31_case2_bound,
    lemma31_pair,
    parabolic_beta,
    perp_witness,
    satisfies_case1,
    satisfies_case2,
)

TWO_PI = 2 * math.pi


def test_parabolic_beta():
    b = parabolic_beta(7)
    assert b == MoebiusMap(1, 7, 0, 1)
    assert classify(b) is IsometryClass.PARABOLIC
    assert b**3 == MoebiusMap(1, 21, 0, 1)
    with pytest.raises(NonpositiveLength):
        parabolic_beta(0)


def test_gamma_full_size():
    g = gamma_full_size(3, 1)
    assert g == MoebiusMap(3, -1, 1, 0)
    assert classify(g) is IsometryClass.LOXODROMIC
    assert classify(gamma_full_size(2, 1)) is IsometryClass.PARABOLIC
    with pytest.raises(NotUnitModulus):
        gamma_full_size(3, 2)
    with pytest.raises(ZeroTrace):
        gamma_full_size(0, 1)


def test_witness_params_validation():
    with pytest.raises(DomainError):
        WitnessParams(l=6.0)
    with pytest.raises(NotUnitModulus):
        WitnessParams(l=7, a=3, c=1.1)
    with pytest.raises(DomainError):
        WitnessParams(l=7, a=3, n=0)


@pytest.mark.parametrize("a, plus, minus, chosen", [(3, 10, -4, -4), (2, 9, -5, -5)])
def test_lemma31_pair_examples(a, plus, minus, chosen):
    pair = lemma31_pair(WitnessParams(l=7, a=a, c=1, n=1))
    assert pair.plus_trace == pytest.approx(plus)
    assert pair.minus_trace == pytest.approx(minus)
    assert pair.plus_class is IsometryClass.LOXODROMIC
    assert pair.minus_class is IsometryClass.LOXODROMIC
    assert pair.chosen_trace == pytest.approx(chosen)


def test_lemma31_pair_product_matches_formula():
    P = WitnessParams(l=8.5, a=1.2 - 0.7j, c=cmath.exp(0.4j), n=4)
    pair = lemma31_pair(P)
    for sign, M in ((1, pair.plus), (-1, pair.minus)):
        expected = MoebiusMap(P.a + sign * P.n * P.c * P.l, -1 / P.c, P.c, 0)
        assert M.isclose(expected, 1e-12)


def test_lemma31_prefers_loxodromic_over_elliptic():
    # a + l = 1 is elliptic; the minus element must be chosen
    pair = lemma31_pair(WitnessParams(l=7, a=-6, c=1, n=1))
    assert pair.plus_class is IsometryClass.ELLIPTIC
    assert pair.chosen is pair.minus


def test_tie_break_prefers_plus():
    # a purely imaginary: |a + l| == |a - l|
    pair = lemma31_pair(WitnessParams(l=7, a=3j, c=1, n=1))
    assert pair.chosen is pair.plus


def test_case_bounds():
    assert lemma31_case1_bound(1, 7, 49) == pytest.approx(7.826237921249264, abs=1e-12)
    assert lemma31_case1_bound(1, 7, 1e-9) == pytest.approx(3.5)
    vals = [lemma31_case1_bound(n, 7, 49) for n in range(1, 20)]
    assert all(x < y for x, y in zip(vals, vals[1:]))
    assert lemma31_case2_bound(1, 7) == pytest.approx(7.280109889280518, abs=1e-12)
    assert lemma31_case2_bound(2, 7) == pytest.approx(14.142135623730951, abs=1e-12)
    for n in range(1, 10):
        assert lemma31_case2_bound(n, 7) > n * 7 - 2
    with pytest.raises(DomainError):
        lemma31_case1_bound(0, 7, 1)
    with pytest.raises(DomainError):
        lemma31_case1_bound(1, 7, 0)


def test_general_witness():
    M, tr = general_witness(7, 0, 3)
    assert M == MoebiusMap(1, 21, 0, 1)
    assert classify(M) is IsometryClass.PARABOLIC
    M, tr = general_witness(7, 7j, 1)
    assert tr == pytest.approx(2 + 49j)
    assert abs(tr) == pytest.approx(49.04079934095691, abs=1e-12)


def test_general_witness_plus_minus_not_both_parabolic(rng):
    for _ in range(500):
        l = rng.uniform(TWO_PI + 1e-3, 20)
        omega = complex(*rng.normal(0, 2, 2))
        n = int(rng.integers(1, 20))
        _, tr_plus = general_witness(l, omega, n)
        tr_minus = 2 - n * l * omega
        both = abs(tr_plus**2 - 4) < 1e-9 and abs(tr_minus**2 - 4) < 1e-9
        assert not both


def test_general_witness_closed_form(rng):
    for _ in range(1000):
        l = rng.uniform(TWO_PI + 1e-3, 20)
        omega = complex(*rng.normal(0, 3, 2))
        n = int(rng.integers(1, 30))
        M, _ = general_witness(l, omega, n)
        ref = general_witness_closed_form(l, omega, n)
        # +n: [[1 + n l w, n l], [w, 1]]
        assert max(abs(x - y) for x, y in zip(M.entries, ref.entries)) <= 1e-10 * max(1, abs(ref.a))


@pytest.mark.parametrize(
    "l, n, expected",
    [(TWO_PI + 0.1, 1, 40.79411084603375), (7, 2, 98.02040603874277), (7, 1, 49.04079934095691)],
)
def test_perp_witness_values(l, n, expected):
    M, tr_abs = perp_witness(l, n)
    assert tr_abs == pytest.approx(expected, abs=1e-10)
    assert M.isclose(MoebiusMap(1 + 1j * n * l * l, n * l, 1j * l, 1), 1e-12)
    assert classify(M) is IsometryClass.LOXODROMIC


def test_perp_witness_rejects_short_l():
    with pytest.raises(DomainError):
        perp_witness(3, 1)


def test_perp_witness_length_chain():
    for l in np.linspace(TWO_PI + 1e-3, 20, 25):
        prev = 0.0
        for n in range(1, 51):
            M, tr_abs = perp_witness(l, n)
            assert tr_abs > prev
            prev = tr_abs
            assert translation_length(M) <= math.log(n * n * l**4 + 8)


def test_case_checkers_record_rates(rng):
    # The case-1 estimate is checked on concrete witnesses, not asserted
    # universally; the observed rate is reported for the record.
    hits1 = hits2 = total1 = total2 = 0
    for _ in range(2000):
        l = rng.uniform(TWO_PI + 1e-3, 15)
        c = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        n = int(rng.integers(1, 10))
        a = complex(*rng.uniform(-l, l, 2))
        P = WitnessParams(l=l, a=a, c=c, n=n)
        if abs(a) > 2:
            total1 += 1
            hits1 += satisfies_case1(P, V_c=l * l)
        else:
            total2 += 1
            hits2 += satisfies_case2(P)
    print(f"case-1 bound met by {hits1}/{total1} sampled witnesses; case-2 by {hits2}/{total2}")
    assert total1 and total2
