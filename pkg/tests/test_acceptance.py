"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the pytest
terminal summary (see conftest.py).
"""

import cmath
import io
import math
from contextlib import redirect_stdout

import numpy as np
import pytest

from cuspbound import bounds as B
from cuspbound.cli import main
from cuspbound.cusp import H_INFINITY, Horoball, image_horoball
from cuspbound.errors import BothParabolic, EmptyInterval
from cuspbound.moebius import (
    H3Point,
    IsometryClass,
    MoebiusMap,
    act_on_h3,
    classify,
    compose,
    hyperbolic_distance,
    translation_length,
)
from cuspbound.witnesses import WitnessParams, general_witness, lemma31_pair

from conftest import random_map

RESULTS: list[str] = []

CROSSING_VOLUMES = (0.0, 0.9427, 2.0299, 10.0, 100.0)
PI = math.pi


def record(number, title, ok, detail=""):
    RESULTS.append(f"AC{number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else ""))
    assert ok, f"criterion {number} failed: {detail}"


@pytest.fixture
def rng():
    return np.random.default_rng(7_3566)


def test_ac01_nonhyperbolic_filling_limit():
    value = B.geodesic_length_bound(1, 0)
    record(1, "bound(1, 0) = 7.3566 +- 5e-4", abs(value - 7.3566) <= 5e-4, f"{value:.6f}")


def test_ac02_systole_reduction(rng):
    worst = 0.0
    for V in rng.uniform(0, 100, 100):
        a, b = B.geodesic_length_bound(1, V), B.systole_bound(V)
        worst = max(worst, abs(a - b) / abs(b))
    record(2, "bound(1, V) equals the n = 1 systole formula, rel 1e-12", worst <= 1e-12, f"max rel {worst:.2e}")


def test_ac03_crossing_identity():
    worst_gap = worst_root = 0.0
    for V in CROSSING_VOLUMES:
        x = B.crossing_volume(V)
        for n in range(1, 101):
            F = B.F_n(x, n)
            worst_gap = max(worst_gap, abs(F - B.G_n(x, n, V)) / F)
            worst_root = max(worst_root, abs(B.crossing_volume_numeric(V, n) - x) / x)
    ok = worst_gap <= 1e-9 and worst_root <= 1e-9
    record(3, "F_n(x*) = G_n(x*) and bisection root = x*, rel 1e-9", ok, f"gap {worst_gap:.1e}, root {worst_root:.1e}")


def test_ac04_pipeline_equality():
    worst = 0.0
    for V in CROSSING_VOLUMES:
        x = B.crossing_volume(V)
        for n in range(1, 101):
            worst = max(worst, abs(math.log(B.F_n(x, n) ** 2 + 4) - B.geodesic_length_bound(n, V)))
    record(4, "log(F_n(x*)^2 + 4) = closed-form bound, 1e-9", worst <= 1e-9, f"max abs {worst:.1e}")


def test_ac05_perpendicular_witness():
    worst = 0.0
    ok = True
    for l in (2 * PI + 0.01, 7.0, 10.0, 20.0):
        for n in range(1, 51):
            M, tr = general_witness(l, 1j * l, n)
            worst = max(worst, abs(abs(tr) - math.sqrt(n * n * l**4 + 4)))
            ok &= classify(M) is IsometryClass.LOXODROMIC
            ok &= translation_length(M) <= math.log(n * n * l**4 + 8)
    ok &= worst <= 1e-10
    record(5, "(beta^-1)^n gamma: |tr| = sqrt(n^2 l^4 + 4) to 1e-10, loxodromic, length bound", ok, f"max |tr| err {worst:.1e}")


def test_ac06_lemma31_algebra(rng):
    worst = 0.0
    fired = 0
    for _ in range(10_000):
        l = rng.uniform(2 * PI + 1e-6, 20)
        c = cmath.exp(1j * rng.uniform(0, 2 * PI))
        a = complex(*rng.uniform(-10, 10, 2))
        n = int(rng.integers(1, 51))
        try:
            pair = lemma31_pair(WitnessParams(l=l, a=a, c=c, n=n))
        except BothParabolic:
            fired += 1
            continue
        worst = max(worst, abs(pair.plus_trace - (a + n * c * l)), abs(pair.minus_trace - (a - n * c * l)))
    ok = worst <= 1e-10 and fired == 0
    record(6, "traces of beta^+-n gamma = a +- ncl to 1e-10; BothParabolic never raised", ok, f"max err {worst:.1e}, raised {fired}")


def test_ac07_trace_length_bound(rng):
    count = 0
    min_gap = math.inf
    while count < 10_000:
        A = random_map(rng, scale=float(rng.choice([0.5, 1.0, 3.0])))
        if classify(A) is not IsometryClass.LOXODROMIC:
            continue
        R = abs(A.a + A.d) * (1 + rng.uniform(0, 0.5) * rng.integers(0, 2))
        min_gap = min(min_gap, math.log(R * R + 4) - translation_length(A))
        count += 1
    record(7, "translation length < log(R^2 + 4) for 1e4 loxodromics", min_gap > 0, f"min gap {min_gap:.3e}")


def test_ac08_lemma33_optimization():
    worst_g = 0.0
    root_ok = dom_ok = True
    worst_margin = -math.inf
    for Vc in np.geomspace(PI**2 * math.sqrt(3), 1e3, 12):
        for n in range(1, 101):
            x = B.g_root(n, Vc)
            worst_g = max(worst_g, abs(B.g_poly(x, n, Vc)) / Vc**2)
            root_ok &= x < math.sqrt(2) * Vc ** (2 / 3)
            bound = B.lemma33_trace_bound(n, Vc)
            for window in ("theorem", "proof"):
                try:
                    prof = B.min_trace_profile(n, Vc, num=1000, window=window)
                except EmptyInterval:
                    continue
                worst_margin = max(worst_margin, prof.max() / bound)
                dom_ok &= bool(prof.max() <= bound)
    ok = worst_g <= 1e-8 and root_ok and dom_ok
    record(
        8,
        "g_n root residual <= 1e-8 V_c^2, x_n < sqrt2 V_c^(2/3), min(T_n, AR_n) <= sqrt(2 n^2 V_c^(4/3) + 4)",
        ok,
        f"residual {worst_g:.1e}, max min/bound {worst_margin:.3f}",
    )


def test_ac09_futer_round_trip(rng):
    worst = 0.0
    below = True
    for _ in range(100):
        V = rng.uniform(1e-3, 50)
        x = V * rng.uniform(1.001, 20)
        back = B.futer_volume_lower(x, B.futer_lmin_upper(V, x))
        worst = max(worst, abs(back - V) / V)
        below &= back < x
    record(9, "futer_volume_lower(x, futer_lmin_upper(V, x)) = V, rel 1e-9, < x", worst <= 1e-9 and below, f"max rel {worst:.1e}")


def test_ac10_isometry_suite(rng):
    worst_d = worst_h = 0.0
    for _ in range(10_000):
        A = random_map(rng)
        p = H3Point(complex(*rng.uniform(-5, 5, 2)), rng.uniform(0.1, 10))
        q = H3Point(complex(*rng.uniform(-5, 5, 2)), rng.uniform(0.1, 10))
        d0 = hyperbolic_distance(p, q)
        worst_d = max(worst_d, abs(hyperbolic_distance(act_on_h3(A, p), act_on_h3(A, q)) - d0))
    for _ in range(2_000):
        A, C = random_map(rng), random_map(rng)
        for H in (H_INFINITY, Horoball(complex(*rng.uniform(-3, 3, 2)), rng.uniform(0.1, 3))):
            H1 = image_horoball(compose(A, C), H)
            H2 = image_horoball(A, image_horoball(C, H))
            if H1.at_infinity or H2.at_infinity:
                err = math.inf if H1.at_infinity != H2.at_infinity else abs(H1.size - H2.size) / max(1, H1.size)
            else:
                err = max(abs(H1.center - H2.center) / max(1, abs(H1.center)), abs(H1.size - H2.size) / max(1, H1.size))
            worst_h = max(worst_h, err)
    ok = worst_d <= 1e-9 and worst_h <= 1e-9
    record(10, "distance preserved to 1e-9; horoball images compose to 1e-9", ok, f"dist {worst_d:.1e}, horoball {worst_h:.1e}")


def test_ac11_constants():
    c = B.constants()
    ok = abs(c.v0 - 1.0149416064) <= 1e-9 and abs(c.C0 * 2.02988 - math.sqrt(3)) <= 2e-3
    record(11, "v0 = 1.0149416064 +- 1e-9; C0 * 2.02988 = sqrt3 +- 2e-3", ok, f"v0 {c.v0:.12f}, C0 {c.C0:.6f}")


def _table_csv():
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = main(["table", "--n-max", "100", "--volume", "2.0299", "--format", "csv"])
    assert status == 0
    return buf.getvalue().encode("utf-8")


def test_ac12_cli_determinism():
    first, second = _table_csv(), _table_csv()
    rows = first.decode().splitlines()[1:]
    x = B.crossing_volume(2.0299)
    match = len(rows) == 100
    for n, row in enumerate(rows, start=1):
        k, cx, tb, lb = row.split(",")
        match &= int(k) == n and float(cx) == x
        match &= float(tb) == B.F_n(x, n) and float(lb) == B.geodesic_length_bound(n, 2.0299)
    record(12, "table csv byte-identical across runs and equal to library values", first == second and match)
