r"""Isometries of hyperbolic 3-space in the upper half-space model.

Orientation-preserving isometries are elements of PSL(2, C).  A
:class:`MoebiusMap` stores a 2x2 complex matrix scaled to unit determinant;
``M`` and ``-M`` represent the same isometry and compare equal.

```python
from cuspbound.moebius import MoebiusMap, H3Point, act_on_h3, translation_length

A = MoebiusMap(2, 0, 0, 0.5)
translation_length(A)            # 2 log 2
act_on_h3(A, H3Point(1j, 1.0))   # H3Point(z=4j, t=4.0)
```
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import reduce

from .errors import DomainError, NoIsometricCircle, NotLoxodromic

#: Default tolerance used by :func:`classify`.
CLASSIFY_TOL = 1e-9

_EPS = 2.220446049250313e-16


class IsometryClass(enum.Enum):
    IDENTITY = "identity"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    LOXODROMIC = "loxodromic"

    def __str__(self) -> str:
        return self.value


def _as_complex(x) -> complex:
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex entry {x!r}")
    return z


@dataclass(frozen=True, eq=False)
class MoebiusMap:
    """An element of PSL(2, C), stored with ``ad - bc = 1``.

    The constructor accepts any invertible matrix and rescales it by
    ``1/sqrt(det)``.  Rescaling is skipped when the determinant already
    equals one up to rounding in its own evaluation, so exact products
    such as parabolic powers are not perturbed.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (_as_complex(v) for v in (self.a, self.b, self.c, self.d))
        ad, bc = a * d, b * c
        det = ad - bc
        if det == 0:
            raise DomainError("singular matrix")
        scale = abs(ad) + abs(bc) + 1.0
        if abs(det - 1) > 8 * _EPS * scale:
            s = cmath.sqrt(det)
            a, b, c, d = a / s, b / s, c / s, d / s
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> MoebiusMap:
        return cls(1, 0, 0, 1)

    @property
    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> MoebiusMap:
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> MoebiusMap:
        return MoebiusMap(-self.a, -self.b, -self.c, -self.d)

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        return compose(self, other)

    def __pow__(self, n: int) -> MoebiusMap:
        if n < 0:
            return self.inverse() ** (-n)
        return reduce(compose, [self] * n, MoebiusMap.identity())

    def __call__(self, z):
        """Act on the Riemann sphere; ``math.inf`` stands for the point at infinity."""
        if z == math.inf:
            return math.inf if self.c == 0 else self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return math.inf
        return (self.a * z + self.b) / den

    def _canonical(self) -> tuple[complex, ...]:
        # representative whose first nonzero entry has positive real part
        # (or zero real part and positive imaginary part)
        for v in self.entries:
            if v != 0:
                flip = v.real < 0 or (v.real == 0 and v.imag < 0)
                return tuple(-e for e in self.entries) if flip else self.entries
        return self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def isclose(self, other: MoebiusMap, tol: float = 1e-10) -> bool:
        """Entrywise closeness up to global sign."""
        for sign in (1, -1):
            if all(abs(x - sign * y) <= tol for x, y in zip(self.entries, other.entries)):
                return True
        return False

    def __repr__(self) -> str:
        return f"MoebiusMap(a={self.a!r}, b={self.b!r}, c={self.c!r}, d={self.d!r})"


def compose(A: MoebiusMap, B: MoebiusMap) -> MoebiusMap:
    """Matrix product ``A B`` (apply ``B`` first), renormalized."""
    return MoebiusMap(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def _sign_normalize(z: complex) -> complex:
    if z.real < 0 or (z.real == 0 and z.imag < 0):
        return -z
    return z + 0.0  # drops -0.0


def trace(A: MoebiusMap) -> complex:
    """Trace of ``A``, with the PSL sign fixed so that the real part is >= 0.

    Ties (purely imaginary trace) are broken by a nonnegative imaginary part.
    """
    return _sign_normalize(A.a + A.d)


def _is_exact(A: MoebiusMap) -> bool:
    return all(float(v.real).is_integer() and float(v.imag).is_integer() for v in A.entries)


def classify(A: MoebiusMap, tol: float = CLASSIFY_TOL) -> IsometryClass:
    """Classify ``A`` by its trace.

    Matrices with Gaussian-integer entries are classified exactly.
    """
    if _is_exact(A):
        tol = 0.0
    for s in (1, -1):
        if max(abs(A.a - s), abs(A.b), abs(A.c), abs(A.d - s)) <= tol:
            return IsometryClass.IDENTITY
    tr = A.a + A.d
    if abs(tr * tr - 4) <= tol:
        return IsometryClass.PARABOLIC
    if abs(tr.imag) <= tol and tr.real * tr.real < 4:
        return IsometryClass.ELLIPTIC
    return IsometryClass.LOXODROMIC


def translation_length(A: MoebiusMap, tol: float = CLASSIFY_TOL) -> float:
    """Length of the closed geodesic translated along by a loxodromic ``A``.

    Computed from the larger-modulus root of ``mu^2 - tr mu + 1 = 0`` as
    ``2 log |mu|``.
    """
    kind = classify(A, tol)
    if kind is not IsometryClass.LOXODROMIC:
        raise NotLoxodromic(f"translation length undefined for {kind} map")
    tr = A.a + A.d
    root = cmath.sqrt(tr * tr - 4)
    # choose the sign that avoids cancellation
    mu = (tr + root) / 2 if abs(tr + root) >= abs(tr - root) else (tr - root) / 2
    return 2.0 * math.log(abs(mu))


@dataclass(frozen=True)
class H3Point:
    """Point ``(z, t)`` of the upper half-space, ``t > 0``."""

    z: complex
    t: float

    def __post_init__(self):
        object.__setattr__(self, "z", _as_complex(self.z))
        t = float(self.t)
        if not (t > 0 and math.isfinite(t)):
            raise DomainError(f"height must be positive and finite, got {self.t!r}")
        object.__setattr__(self, "t", t)


def act_on_h3(A: MoebiusMap, p: H3Point) -> H3Point:
    """Poincare extension of ``A`` applied to a point of H^3.

    For ``c != 0`` this equals
    ``(-conj(w) / (c^2 (|w|^2 + t^2)) + a/c, t / (|c|^2 (|w|^2 + t^2)))``
    with ``w = z + d/c``, and for ``c == 0`` it is ``((a z + b)/d, |a/d| t)``.
    Both are evaluated through the single expression

        z' = ((a z + b) conj(c z + d) + a conj(c) t^2) / D
        t' = t / D,   D = |c z + d|^2 + |c|^2 t^2

    which avoids the cancellation between ``a/c`` and the first term when
    ``|c|`` is small.
    """
    a, b, c, d = A.entries
    z, t = p.z, p.t
    u = c * z + d
    den = abs(u) ** 2 + abs(c) ** 2 * t * t
    return H3Point(((a * z + b) * u.conjugate() + a * c.conjugate() * t * t) / den, t / den)


def hyperbolic_distance(p: H3Point, q: H3Point) -> float:
    """Distance for the metric ``(|dz|^2 + dt^2) / t^2``.

    Uses ``2 asinh(euclid / (2 sqrt(t_p t_q)))``, which agrees with the
    usual ``cosh d = 1 + euclid^2 / (2 t_p t_q)`` and stays accurate for
    nearby points.
    """
    chord = math.hypot(abs(p.z - q.z), p.t - q.t)
    return 2.0 * math.asinh(chord / (2.0 * math.sqrt(p.t * q.t)))


def isometric_circle(A: MoebiusMap) -> tuple[complex, float]:
    """Center ``-d/c`` and radius ``1/|c|`` of the circle ``|cz + d| = 1``."""
    if A.c == 0:
        raise NoIsometricCircle("map fixes infinity")
    return -A.d / A.c, 1.0 / abs(A.c)
