"""Scalar bounds leading to the n-th closed geodesic length estimate.

The chain is: cusp-volume budget ``V_c = C0 V`` -> admissible window for
the shortest parabolic translation ``l`` -> trace-modulus bounds for
explicit loxodromics -> an increasing family ``F_n`` and a decreasing
family ``G_n`` in the volume ``x`` of the link complement -> their
crossing ``x*`` -> ``l_n <= log(F_n(x*)^2 + 4)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, optimize

from .errors import BracketFailure, DomainError, EmptyInterval, SlopeTooShort

PI = math.pi
TWO_PI = 2 * math.pi
SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

#: Tolerances: exact algebra, analysis and round-trips, printed decimals.
TOL_ALGEBRA = 1e-12
TOL_ANALYSIS = 1e-9
TOL_PRINTED = 1e-3

#: Regression guard for the quadrature result.
V0_REFERENCE = 1.0149416064096536


def lobachevsky(theta: float) -> float:
    """Lobachevsky function ``-int_0^theta log|2 sin u| du``."""
    if theta == 0:
        return 0.0
    val, _ = integrate.quad(
        lambda u: math.log(abs(2.0 * math.sin(u))), 0.0, theta, epsabs=1e-14, epsrel=1e-13, limit=200
    )
    return -val


@lru_cache(maxsize=None)
def ideal_tetrahedron_volume() -> float:
    """Volume of the regular ideal tetrahedron, ``2 Lambda(pi/6)``."""
    return 2.0 * lobachevsky(PI / 6)


@dataclass(frozen=True)
class Constants:
    v0: float
    C0: float
    Vc_min: float


def constants() -> Constants:
    """``v0``, the cusp-density constant ``C0 = sqrt(3)/(2 v0)`` and ``pi^2 sqrt(3)``."""
    v0 = ideal_tetrahedron_volume()
    return Constants(v0=v0, C0=SQRT3 / (2.0 * v0), Vc_min=PI**2 * SQRT3)


def _C0() -> float:
    return SQRT3 / (2.0 * ideal_tetrahedron_volume())


def _check_n(n) -> int:
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return int(n)


def _check_volume(V) -> float:
    V = float(V)
    if not (V >= 0 and math.isfinite(V)):
        raise DomainError(f"volume must be finite and >= 0, got {V!r}")
    return V


@dataclass(frozen=True)
class BoundQuery:
    """Rank ``n`` of the geodesic and volume ``V`` of the filled manifold.

    ``V = 0`` stands for a filled manifold without hyperbolic structure.
    """

    n: int
    V: float

    def __post_init__(self):
        object.__setattr__(self, "n", _check_n(self.n))
        object.__setattr__(self, "V", _check_volume(self.V))

    def length_bound(self) -> float:
        return geodesic_length_bound(self.n, self.V)


def cusp_area_budget(V: float) -> float:
    """``V_c = C0 V``."""
    return _C0() * _check_volume(V)


def slope_length_upper(V_c: float) -> float:
    """Upper end ``sqrt(4 V_c / sqrt 3)`` of the window ``2 pi < l``."""
    top = math.sqrt(4.0 * V_c / SQRT3)
    if top <= TWO_PI:
        raise EmptyInterval(f"sqrt(4 V_c/sqrt 3) = {top} <= 2 pi")
    return top


def _check_lnv(l, n, V_c=None):
    if not l > TWO_PI:
        raise DomainError(f"l must exceed 2*pi, got {l}")
    n = _check_n(n)
    if V_c is not None and not V_c > 0:
        raise DomainError("V_c must be positive")
    return n


def T_n(l: float, n: int, V_c: float) -> float:
    n = _check_lnv(l, n, V_c)
    return math.sqrt((n - 0.5) ** 2 * l * l + V_c * V_c / (l * l))


def AR_n(l: float, n: int) -> float:
    n = _check_lnv(l, n)
    return math.sqrt(n * n * l**4 + 4)


def r_n(l: float, n: int) -> float:
    n = _check_lnv(l, n)
    return math.sqrt(l * l * n * n + 4)


def g_poly(x: float, n: int, V_c: float) -> float:
    """``n^2 x^3 + 4 x - (n - 1/2)^2 x^2 - V_c^2``; its root separates ``a_n < t_n`` from ``a_n > t_n``."""
    return n * n * x**3 + 4.0 * x - (n - 0.5) ** 2 * x * x - V_c * V_c


def g_root(n: int, V_c: float) -> float:
    """Unique positive root of :func:`g_poly`, by bisection on ``(0, sqrt2 V_c^(2/3) + 1]``."""
    n = _check_n(n)
    if not V_c > 0:
        raise DomainError("V_c must be positive")
    hi = SQRT2 * V_c ** (2.0 / 3.0) + 1.0
    f = lambda x: g_poly(x, n, V_c)
    if not (f(0.0) < 0 < f(hi)):
        raise BracketFailure(f"g_{n} does not change sign on (0, {hi}] for V_c={V_c}")
    return optimize.bisect(f, 0.0, hi, xtol=1e-300, rtol=1e-15, maxiter=2000)


def lemma33_trace_bound(n: int, V_c: float) -> float:
    """``sqrt(2 n^2 V_c^(4/3) + 4)``."""
    n = _check_n(n)
    if not V_c > 0:
        raise DomainError("V_c must be positive")
    return math.sqrt(2.0 * n * n * V_c ** (4.0 / 3.0) + 4.0)


def lemma33_window(V_c: float, window: str = "theorem") -> tuple[float, float]:
    """Range of ``l`` over which the minimum of ``T_n`` and ``AR_n`` is bounded.

    ``"theorem"``: ``2 pi < l <= sqrt(4 V_c / sqrt 3)``.
    ``"proof"``: ``1 < l^2 <= 4 V_c / sqrt 3``, the substituted variable
    window; it contains the first one.
    Returns the open lower end and closed upper end.
    """
    top = math.sqrt(4.0 * V_c / SQRT3)
    if window == "theorem":
        lo = TWO_PI
    elif window == "proof":
        lo = 1.0
    else:
        raise ValueError(f"unknown window {window!r}")
    if top <= lo:
        raise EmptyInterval(f"window ({lo}, {top}] is empty")
    return lo, top


def min_trace_profile(n: int, V_c: float, num: int = 1000, window: str = "theorem") -> np.ndarray:
    """``min(T_n(l), AR_n(l))`` on ``num`` points of the window (lower end excluded).

    The formulas are evaluated directly so the ``"proof"`` window may go
    below ``2 pi``.
    """
    n = _check_n(n)
    lo, top = lemma33_window(V_c, window)
    l = np.linspace(lo, top, num + 1)[1:]
    T = np.sqrt((n - 0.5) ** 2 * l**2 + V_c**2 / l**2)
    AR = np.sqrt(n * n * l**4 + 4)
    return np.minimum(T, AR)


def F_n(x: float, n: int) -> float:
    """``sqrt(2 n^2 C0^(4/3) x^(4/3) + 4)``, increasing in the link-complement volume ``x``."""
    n = _check_n(n)
    if not x > 0:
        raise DomainError("x must be positive")
    return math.sqrt(2.0 * n * n * _C0() ** (4.0 / 3.0) * x ** (4.0 / 3.0) + 4.0)


def G_n(x: float, n: int, V: float) -> float:
    """``sqrt(16 pi^4 n^2 / (1 - (V/x)^(2/3))^2 + 4)``, decreasing in ``x > V``."""
    n = _check_n(n)
    V = _check_volume(V)
    if not x > V:
        raise DomainError(f"need x > V, got x={x}, V={V}")
    q = 1.0 - (V / x) ** (2.0 / 3.0)
    return math.sqrt(16.0 * PI**4 * n * n / (q * q) + 4.0)


def crossing_volume(V: float) -> float:
    """Closed form ``(V^(2/3) + 4 pi^2 / (sqrt2 C0^(2/3)))^(3/2)`` of ``F_n = G_n``; independent of n."""
    V = _check_volume(V)
    return (V ** (2.0 / 3.0) + 4.0 * PI**2 / (SQRT2 * _C0() ** (2.0 / 3.0))) ** 1.5


def crossing_volume_numeric(V: float, n: int = 1) -> float:
    """Root of ``F_n - G_n`` on ``(V, inf)`` by bisection."""
    V = _check_volume(V)
    n = _check_n(n)
    h = lambda x: F_n(x, n) - G_n(x, n, V)
    lo = V * (1 + 1e-12) if V > 0 else 1e-12
    hi = max(2.0 * V, 1.0)
    while h(hi) <= 0:
        hi *= 2.0
        if hi > 1e300:
            raise BracketFailure("F_n - G_n never becomes positive")
    if h(lo) >= 0:
        raise BracketFailure("F_n - G_n is not negative near x = V")
    return optimize.bisect(h, lo, hi, xtol=1e-300, rtol=1e-15, maxiter=2000)


def geodesic_length_bound(n: int, V: float) -> float:
    """``log(n^2 (sqrt2 (C0 V)^(2/3) + 4 pi^2)^2 + 8)``."""
    n = _check_n(n)
    V = _check_volume(V)
    s = SQRT2 * (_C0() * V) ** (2.0 / 3.0) + 4.0 * PI**2
    return math.log(n * n * s * s + 8.0)


def systole_bound(V: float) -> float:
    """``log((sqrt2 (C0 V)^(2/3) + 4 pi^2)^2 + 8)``, the n = 1 case written on its own."""
    V = _check_volume(V)
    return math.log((SQRT2 * (_C0() * V) ** (2.0 / 3.0) + 4.0 * PI**2) ** 2 + 8.0)


def length_bound_via_crossing(n: int, V: float) -> float:
    """Same bound computed as ``log(F_n(x*)^2 + 4)``."""
    return math.log(F_n(crossing_volume(V), n) ** 2 + 4.0)


def futer_volume_lower(vol_cusped: float, l_min: float) -> float:
    """Volume lower bound ``(1 - (2 pi / l_min)^2)^(3/2) vol_cusped`` after filling."""
    if not l_min > TWO_PI:
        raise SlopeTooShort(f"shortest filling slope must exceed 2*pi, got {l_min}")
    if not vol_cusped > 0:
        raise DomainError("cusped volume must be positive")
    return (1.0 - (TWO_PI / l_min) ** 2) ** 1.5 * vol_cusped


def futer_lmin_upper(V: float, x: float) -> float:
    """``2 pi / sqrt(1 - (V/x)^(2/3))``: the longest possible shortest slope."""
    V = _check_volume(V)
    if not x > V:
        raise DomainError(f"need x > V, got x={x}, V={V}")
    return TWO_PI / math.sqrt(1.0 - (V / x) ** (2.0 / 3.0))


def translation_length_upper(R: float) -> float:
    """``log(R^2 + 4)``: longest translation of a loxodromic with ``|tr| <= R``."""
    if not R >= 0:
        raise DomainError("R must be >= 0")
    return math.log(R * R + 4.0)
