"""Audit externally computed length spectra against the n-th geodesic bound.

Input formats (UTF-8):

* CSV with header ``index,length``, indices 1, 2, 3, ... in order; the
  filled volume is supplied separately.
* JSON object ``{"name": str, "filled_volume": float, "lengths": [float, ...]}``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .bounds import geodesic_length_bound
from .errors import NegativeVolume, NonpositiveLength, ParseError, UnsortedSpectrum

DISCLAIMER = (
    "The bound assumes the spectrum belongs to a hyperbolic link complement M \\ L "
    "in a compact manifold M whose volume is the one supplied; these hypotheses are "
    "not verified. A violation indicates either bad input data or data outside the "
    "hypotheses, and the audit cannot tell which."
)


@dataclass(frozen=True)
class SpectrumRecord:
    name: str
    filled_volume: float
    lengths: tuple[float, ...] = ()

    def __post_init__(self):
        V = float(self.filled_volume)
        if not math.isfinite(V):
            raise ParseError("filled_volume must be finite")
        if V < 0:
            raise NegativeVolume(f"filled_volume must be >= 0, got {V}")
        lengths = tuple(float(x) for x in self.lengths)
        for i, x in enumerate(lengths, start=1):
            if not math.isfinite(x):
                raise ParseError(f"length {i} is not finite")
            if x <= 0:
                raise NonpositiveLength(f"length {i} is {x}, must be positive")
        for i in range(1, len(lengths)):
            if lengths[i] < lengths[i - 1]:
                raise UnsortedSpectrum(
                    f"lengths must be nondecreasing: l_{i} = {lengths[i - 1]} > l_{i + 1} = {lengths[i]}"
                )
        object.__setattr__(self, "filled_volume", V)
        object.__setattr__(self, "lengths", lengths)


def _parse_csv(text: str) -> list[float]:
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(cell.strip() for cell in r)]
    if not rows or [c.strip() for c in rows[0]] != ["index", "length"]:
        raise ParseError("CSV header must be 'index,length'")
    lengths = []
    for k, row in enumerate(rows[1:], start=1):
        if len(row) != 2:
            raise ParseError(f"row {k}: expected 2 columns, got {len(row)}")
        try:
            idx, length = int(row[0]), float(row[1])
        except ValueError as exc:
            raise ParseError(f"row {k}: {exc}") from None
        if idx != k:
            raise ParseError(f"row {k}: indices must be 1-based and contiguous, got {idx}")
        lengths.append(length)
    return lengths


def load_spectrum(
    data: bytes | str, format: str, volume: float | None = None, name: str = "spectrum"
) -> SpectrumRecord:
    """Parse and validate a spectrum.

    ``volume`` is required for CSV and overrides nothing for JSON (it is
    only used if the JSON object lacks ``filled_volume``).  Unsorted
    lengths are rejected, not sorted.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if format == "csv":
        if volume is None:
            raise ParseError("CSV spectra need the filled volume passed separately")
        return SpectrumRecord(name, volume, _parse_csv(data))
    if format == "json":
        try:
            obj = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise ParseError("JSON spectrum must be an object")
        V = obj.get("filled_volume", volume)
        lengths = obj.get("lengths")
        if V is None or lengths is None:
            raise ParseError("JSON spectrum needs 'filled_volume' and 'lengths'")
        if not isinstance(lengths, list) or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in lengths
        ):
            raise ParseError("'lengths' must be a list of numbers")
        if isinstance(V, bool) or not isinstance(V, (int, float)):
            raise ParseError("'filled_volume' must be a number")
        return SpectrumRecord(str(obj.get("name", name)), V, lengths)
    raise ParseError(f"unknown format {format!r}")


@dataclass(frozen=True)
class AuditEntry:
    n: int
    length: float
    bound: float
    margin: float
    passed: bool


@dataclass(frozen=True)
class AuditReport:
    name: str
    filled_volume: float
    entries: tuple[AuditEntry, ...] = field(default_factory=tuple)
    disclaimer: str = DISCLAIMER

    @property
    def violations(self) -> list[AuditEntry]:
        return [e for e in self.entries if not e.passed]

    @property
    def n_checked(self) -> int:
        return len(self.entries)

    @property
    def n_violations(self) -> int:
        return len(self.violations)


def audit(rec: SpectrumRecord) -> AuditReport:
    """Compare the n-th length with the bound for rank n."""
    entries = []
    for n, length in enumerate(rec.lengths, start=1):
        bound = geodesic_length_bound(n, rec.filled_volume)
        margin = bound - length
        entries.append(AuditEntry(n, length, bound, margin, margin >= 0))
    return AuditReport(rec.name, rec.filled_volume, tuple(entries))
