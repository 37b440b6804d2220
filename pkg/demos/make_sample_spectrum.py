"""Regenerate data/m004_core_of_5_1_filling.json with SnapPy.

The figure-eight knot complement m004 is the complement of the core
curve L of the (5, 1) Dehn filling M = m004(5, 1), a closed hyperbolic
manifold.  The audit bound then takes V = Vol(M).

Requires ``pip install snappy``; cuspbound itself does not depend on it.
"""

import json
from pathlib import Path

import snappy

CUTOFF = 2.7
OUT = Path(__file__).resolve().parent.parent / "data" / "m004_core_of_5_1_filling.json"

cusped = snappy.Manifold("m004")
filled = cusped.copy()
filled.dehn_fill((5, 1))
assert filled.solution_type() == "all tetrahedra positively oriented"

lengths = []
for geod in cusped.length_spectrum(CUTOFF):
    lengths += [float(geod.length.real())] * int(geod.multiplicity)
lengths.sort()

record = {
    "name": "m004 = m004(5,1) minus core curve",
    "source": f"SnapPy {snappy.__version__}: Manifold('m004').length_spectrum({CUTOFF}), "
    "real parts repeated by multiplicity; filled_volume = Manifold('m004(5,1)').volume()",
    "filled_volume": float(filled.volume()),
    "lengths": lengths,
}
OUT.write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")
print(f"wrote {len(lengths)} lengths to {OUT}")
