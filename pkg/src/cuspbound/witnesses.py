"""Explicit loxodromic elements built from two parabolics.

Two families are produced:

* ``beta^{+-n} gamma`` where ``beta = [[1, l], [0, 1]]`` translates along
  the shortest cusp direction and ``gamma = [[a, -1/c], [c, 0]]`` (``|c| = 1``)
  sends the ball at infinity to a full-sized ball at ``a/c``;
* ``(beta^-1)^n gamma`` with ``beta^-1 = [[1, l], [0, 1]]`` and
  ``gamma = [[1, 0], [omega, 1]]`` parabolic fixing 0.  The choice
  ``omega = i l`` places the two cusp curves at right angles.

All products are formed by repeated :func:`~cuspbound.moebius.compose`,
never by the closed forms; the closed forms are only used to check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BothParabolic, DomainError, NonpositiveLength, NotUnitModulus, ZeroTrace
from .moebius import IsometryClass, MoebiusMap, classify, compose

TWO_PI = 2 * math.pi
UNIT_TOL = 1e-12


def _check_l(l: float) -> float:
    l = float(l)
    if not l > TWO_PI:
        raise DomainError(f"minimal parabolic translation must exceed 2*pi, got {l}")
    return l


def _check_n(n: int) -> int:
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return int(n)


@dataclass(frozen=True)
class WitnessParams:
    l: float
    a: complex = 0j
    c: complex = 1 + 0j
    omega: complex = 0j
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "l", _check_l(self.l))
        object.__setattr__(self, "n", _check_n(self.n))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "omega", complex(self.omega))
        if abs(abs(self.c) - 1) > UNIT_TOL:
            raise NotUnitModulus(f"|c| must be 1, got {abs(self.c)}")


def parabolic_beta(l: float) -> MoebiusMap:
    """The translation ``[[1, l], [0, 1]]``."""
    if not l > 0:
        raise NonpositiveLength(f"translation length must be positive, got {l}")
    return MoebiusMap(1, l, 0, 1)


def gamma_full_size(a: complex, c: complex) -> MoebiusMap:
    """``[[a, -1/c], [c, 0]]``, mapping the ball at infinity to a full-sized ball at ``a/c``."""
    a, c = complex(a), complex(c)
    if abs(abs(c) - 1) > UNIT_TOL:
        raise NotUnitModulus(f"|c| must be 1, got {abs(c)}")
    if a == 0:
        raise ZeroTrace("a = 0 gives an elliptic element of order 2")
    return MoebiusMap(a, -1 / c, c, 0)


@dataclass(frozen=True)
class Lemma31Pair:
    plus: MoebiusMap
    plus_class: IsometryClass
    minus: MoebiusMap
    minus_class: IsometryClass
    chosen: MoebiusMap

    @property
    def plus_trace(self) -> complex:
        return self.plus.a + self.plus.d

    @property
    def minus_trace(self) -> complex:
        return self.minus.a + self.minus.d

    @property
    def chosen_trace(self) -> complex:
        return self.chosen.a + self.chosen.d


def lemma31_pair(P: WitnessParams) -> Lemma31Pair:
    """Build ``beta^n gamma`` and ``beta^-n gamma`` and pick a loxodromic one.

    Raw traces (``a + d`` of the stored matrices) are ``a + ncl`` and
    ``a - ncl``.  When both are loxodromic the one with the smaller trace
    modulus is chosen, ``plus`` on a tie.
    """
    beta = parabolic_beta(P.l)
    gamma = gamma_full_size(P.a, P.c)
    plus = compose(beta**P.n, gamma)
    minus = compose(beta.inverse() ** P.n, gamma)
    pc, mc = classify(plus), classify(minus)
    lox = [m for m, k in ((plus, pc), (minus, mc)) if k is IsometryClass.LOXODROMIC]
    if not lox:
        raise BothParabolic(f"no loxodromic element among beta^+-{P.n} gamma")
    chosen = min(lox, key=lambda m: abs(m.a + m.d))
    return Lemma31Pair(plus, pc, minus, mc, chosen)


def lemma31_case1_bound(n: int, l: float, V_c: float) -> float:
    """``sqrt((n - 1/2)^2 l^2 + V_c^2 / l^2)``."""
    n = _check_n(n)
    if not (l > 0 and V_c > 0):
        raise DomainError("l and V_c must be positive")
    return math.sqrt((n - 0.5) ** 2 * l * l + V_c * V_c / (l * l))


def lemma31_case2_bound(n: int, l: float) -> float:
    """``sqrt(l^2 n^2 + 4)``."""
    n = _check_n(n)
    if not l > 0:
        raise DomainError("l must be positive")
    return math.sqrt(l * l * n * n + 4)


def satisfies_case1(P: WitnessParams, V_c: float) -> bool:
    """Does the chosen element of :func:`lemma31_pair` meet the case-1 trace bound?

    This is a check on a concrete witness, not a universal claim; for
    ``a/c`` far from the real axis it can fail.
    """
    pair = lemma31_pair(P)
    return abs(pair.chosen_trace) <= lemma31_case1_bound(P.n, P.l, V_c)


def satisfies_case2(P: WitnessParams) -> bool:
    """Does ``beta^n gamma`` meet ``|tr| <= sqrt(l^2 n^2 + 4)``?"""
    pair = lemma31_pair(P)
    return abs(pair.plus_trace) <= lemma31_case2_bound(P.n, P.l)


def general_witness(l: float, omega: complex, n: int) -> tuple[MoebiusMap, complex]:
    """``(beta^-1)^n gamma`` for ``gamma = [[1, 0], [omega, 1]]`` and its trace ``2 + n l omega``."""
    n = _check_n(n)
    l = _check_l(l)
    step = MoebiusMap(1, l, 0, 1)
    gamma = MoebiusMap(1, 0, omega, 1)
    M = compose(step**n, gamma)
    return M, M.a + M.d


def general_witness_closed_form(l: float, omega: complex, n: int) -> MoebiusMap:
    return MoebiusMap(1 + n * l * omega, n * l, omega, 1)


def perp_witness(l: float, n: int) -> tuple[MoebiusMap, float]:
    """``[[1 + i n l^2, n l], [i l, 1]]`` and its trace modulus ``sqrt(n^2 l^4 + 4)``.

    Always loxodromic for ``l > 2 pi``.
    """
    M, tr = general_witness(l, 1j * float(l), n)
    return M, abs(tr)
