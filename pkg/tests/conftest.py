import cmath

import numpy as np
import pytest

from cuspbound.moebius import MoebiusMap


def random_map(rng, scale=1.0):
    """Random element of SL(2, C) with Gaussian entries."""
    while True:
        a, b, c, d = (complex(*rng.normal(0, scale, 2)) for _ in range(4))
        det = a * d - b * c
        if abs(det) > 1e-3:
            s = cmath.sqrt(det)
            return MoebiusMap(a / s, b / s, c / s, d / s)


def quaternion_action(A, z, t):
    """Poincare extension via quaternions: q -> (a q + b)(c q + d)^-1 with q = z + t j.

    Independent of cuspbound.moebius.act_on_h3.  Quaternions are stored
    as (w, x, y, k) with q = w + x i + y j + k k.
    """

    def mul(p, q):
        w1, x1, y1, z1 = p
        w2, x2, y2, z2 = q
        return np.array([
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ])

    def cq(u):
        return np.array([u.real, u.imag, 0.0, 0.0])

    def inv(q):
        conj = q * np.array([1, -1, -1, -1])
        return conj / np.dot(q, q)

    q = np.array([z.real, z.imag, t, 0.0])
    num = mul(cq(A.a), q) + cq(A.b)
    den = mul(cq(A.c), q) + cq(A.d)
    r = mul(num, inv(den))
    return complex(r[0], r[1]), r[2], r[3]


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
