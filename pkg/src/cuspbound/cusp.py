"""Horoballs, cusp lattices and slope lengths.

A horoball is either a Euclidean ball tangent to the boundary plane at a
finite point, recorded by its diameter, or the region ``t >= h`` above a
horizontal plane, recorded by the height ``h``.  The maximal cusp is
normalized so that the ball at infinity has height 1; finite balls of
diameter 1 then touch it and are called full-sized.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ZeroSlope
from .moebius import MoebiusMap, compose

#: Absolute tolerance for tangency tests on Euclidean quantities.
TANGENCY_TOL = 1e-9

INF = math.inf


@dataclass(frozen=True)
class Horoball:
    """Horoball centered at ``center`` (a complex number or ``math.inf``).

    ``size`` is the Euclidean diameter for a finite center and the height
    of the bounding plane when the center is infinity.
    """

    center: complex | float
    size: float

    def __post_init__(self):
        if not (self.size > 0 and math.isfinite(self.size)):
            raise DomainError(f"horoball size must be positive, got {self.size!r}")
        if self.center != INF:
            object.__setattr__(self, "center", complex(self.center))

    @property
    def at_infinity(self) -> bool:
        return self.center == INF

    @property
    def is_full_sized(self) -> bool:
        """Diameter 1, i.e. tangent to the plane ``t = 1``."""
        return not self.at_infinity and abs(self.size - 1.0) <= TANGENCY_TOL


H_INFINITY = Horoball(INF, 1.0)


def image_horoball(A: MoebiusMap, H: Horoball) -> Horoball:
    """Image of the horoball ``H`` under ``A``.

    A finite ball at ``p`` of diameter ``D`` is written as the image of the
    ball at infinity of height ``1/D`` under ``[[p, -1], [1, 0]]``, which
    reduces every case to the ball at infinity: with ``c != 0`` it goes to
    the ball at ``a/c`` of diameter ``1/(h |c|^2)``, with ``c == 0`` to the
    ball at infinity of height ``|a/d| h``.
    """
    if H.at_infinity:
        M, h = A, H.size
    else:
        M, h = compose(A, MoebiusMap(H.center, -1, 1, 0)), 1.0 / H.size
    if M.c == 0:
        return Horoball(INF, abs(M.a / M.d) * h)
    return Horoball(M.a / M.c, 1.0 / (h * abs(M.c) ** 2))


def are_tangent(H1: Horoball, H2: Horoball, tol: float = TANGENCY_TOL) -> bool:
    """Whether two horoballs touch at exactly one point.

    Finite balls with diameters ``D1, D2`` are tangent when the squared
    distance between their centers is ``D1 D2``; a finite ball is tangent
    to the ball at infinity of height ``h`` when its diameter is ``h``.
    """
    if H1.at_infinity and H2.at_infinity:
        return False
    if H1.at_infinity or H2.at_infinity:
        h, D = (H1.size, H2.size) if H1.at_infinity else (H2.size, H1.size)
        return abs(D - h) <= tol
    return abs(abs(H1.center - H2.center) ** 2 - H1.size * H2.size) <= tol


@dataclass(frozen=True)
class CuspLattice:
    """Translation lattice of the cusp stabilizer acting on C.

    ``tau1`` is real and positive (the parabolic ``[[1, tau1], [0, 1]]``),
    ``tau2`` must not be real.  The basis is not required to be reduced;
    see :attr:`is_reduced`.
    """

    tau1: float
    tau2: complex

    def __post_init__(self):
        tau1, tau2 = float(self.tau1), complex(self.tau2)
        if not tau1 > 0:
            raise DomainError("tau1 must be positive")
        if tau2.imag == 0:
            raise DomainError("tau2 must have nonzero imaginary part")
        object.__setattr__(self, "tau1", tau1)
        object.__setattr__(self, "tau2", tau2)

    @property
    def is_reduced(self) -> bool:
        """True when ``tau1`` is a shortest nonzero lattice vector."""
        t1, t2 = self.tau1, self.tau2
        return t1 <= abs(t2) and t1 <= abs(t1 + t2) and t1 <= abs(t1 - t2)

    def point(self, m: int, n: int) -> complex:
        return m * self.tau1 + n * self.tau2


def coarea(L: CuspLattice) -> float:
    """Area of a fundamental parallelogram."""
    return L.tau1 * abs(L.tau2.imag)


def _lagrange_reduce(u: complex, v: complex) -> tuple[complex, complex]:
    # Gauss-Lagrange reduction of a planar basis
    if abs(u) > abs(v):
        u, v = v, u
    while True:
        k = round((v * u.conjugate()).real / abs(u) ** 2)
        v = v - k * u
        if abs(v) >= abs(u):
            return u, v
        u, v = v, u


def reduce_mod_lattice(z: complex, L: CuspLattice, window: int = 2) -> complex:
    """Translate ``z`` by a lattice vector to a point of minimal modulus.

    Lattice coordinates of ``z`` in a Lagrange-reduced basis are rounded,
    then every offset in a ``+-window`` box is tried.  Ties keep the first
    candidate in a fixed scan order, so the result is deterministic.
    """
    z = complex(z)
    u, v = _lagrange_reduce(complex(L.tau1), L.tau2)
    basis = np.array([[u.real, v.real], [u.imag, v.imag]])
    x, y = np.linalg.solve(basis, [z.real, z.imag])
    m0, n0 = round(x), round(y)
    best = None
    for dm, dn in itertools.product(range(-window, window + 1), repeat=2):
        w = z - (m0 + dm) * u - (n0 + dn) * v
        key = abs(w)
        if best is None or key < best[0] - 1e-15 * max(1.0, key):
            best = (key, w)
    return best[1]


def slope_length(L: CuspLattice, p: int, q: int) -> float:
    """Euclidean length ``|p tau1 + q tau2|`` of the slope ``(p, q)``."""
    if p == 0 and q == 0:
        raise ZeroSlope("slope (0, 0) is not a curve")
    return abs(L.point(p, q))


def filling_admissible(
    cusps: Iterable[tuple[CuspLattice, tuple[int, int]]], threshold: float = 2 * math.pi
) -> bool:
    """True iff every filling slope is strictly longer than ``threshold``.

    ``2*pi`` gives the negatively curved filling criterion, 6 the sharpened
    version.
    """
    return all(slope_length(L, p, q) > threshold for L, (p, q) in cusps)


def horoball_orbit(
    generators: Sequence[MoebiusMap], depth: int = 3, start: Horoball = H_INFINITY
) -> list[Horoball]:
    """Images of ``start`` under all words of length <= ``depth``.

    Words use the generators and their inverses.  Duplicate balls (equal
    after rounding to 9 decimals) are dropped.  The result is sorted with
    the ball at infinity first, then by center and diameter.
    """
    letters = []
    for g in generators:
        letters += [g, g.inverse()]
    seen: dict[tuple, Horoball] = {}

    def key(H: Horoball) -> tuple:
        if H.at_infinity:
            return (0, 0.0, 0.0, round(H.size, 9))
        return (1, round(H.center.real, 9) + 0.0, round(H.center.imag, 9) + 0.0, round(H.size, 9))

    frontier = [MoebiusMap.identity()]
    seen[key(start)] = start
    for _ in range(depth):
        nxt = []
        for word in frontier:
            for g in letters:
                w = compose(word, g)
                H = image_horoball(w, start)
                seen.setdefault(key(H), H)
                nxt.append(w)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def horoballs_to_csv(balls: Iterable[Horoball]) -> str:
    """CSV with columns ``center_re,center_im,diameter``.

    The ball at infinity is written as ``inf,inf,<height>``.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["center_re", "center_im", "diameter"])
    for H in balls:
        if H.at_infinity:
            w.writerow(["inf", "inf", repr(H.size)])
        else:
            w.writerow([repr(H.center.real + 0.0), repr(H.center.imag + 0.0), repr(H.size)])
    return buf.getvalue()
