# %% [markdown]
# # Auditing a computed length spectrum
#
# data/m004_core_of_5_1_filling.json holds the length spectrum (up to 2.7)
# of the figure-eight knot complement, computed with SnapPy. It is the
# complement of the core curve of the (5, 1) filling, a closed hyperbolic
# manifold whose volume is stored as filled_volume.
# make_sample_spectrum.py regenerates it.

# %%
from pathlib import Path

from cuspbound.spectrum import audit, load_spectrum

path = Path(__file__).resolve().parent.parent / "data" / "m004_core_of_5_1_filling.json"
rec = load_spectrum(path.read_bytes(), "json")
report = audit(rec)

for e in report.entries[:8]:
    print(f"n={e.n:>2} length={e.length:.5f} bound={e.bound:.5f} margin={e.margin:.5f}")
print(f"... {report.n_checked} lengths checked, {report.n_violations} violations")
print(report.disclaimer)
