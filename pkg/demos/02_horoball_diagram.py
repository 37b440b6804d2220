# %% [markdown]
# # A horoball diagram
#
# Normalize a maximal cusp so that the ball at infinity sits at height 1.
# The cusp stabilizer contains beta = [[1, l], [0, 1]]; an element
# gamma = [[a, -1/c], [c, 0]] with |c| = 1 sends the ball at infinity to a
# full-sized ball at a/c. Words in beta and gamma fill in the diagram.

# %%
import math
from pathlib import Path

from cuspbound.cusp import (
    CuspLattice,
    H_INFINITY,
    coarea,
    filling_admissible,
    horoball_orbit,
    horoballs_to_csv,
    image_horoball,
    reduce_mod_lattice,
    slope_length,
)
from cuspbound.witnesses import gamma_full_size, parabolic_beta

l, a, c = 7.0, 3 + 1j, 1.0
beta, gamma = parabolic_beta(l), gamma_full_size(a, c)

print("gamma(H_inf) =", image_horoball(gamma, H_INFINITY))

# %% Orbit of H_inf under words of length <= 3; write CSV for an external plotter.
balls = horoball_orbit([beta, gamma], depth=3)
print(len(balls), "distinct horoballs;", sum(H.is_full_sized for H in balls), "full-sized")
out = Path("horoballs.csv")
out.write_text(horoballs_to_csv(balls))
print("wrote", out.resolve())

# %% Cusp lattice: co-area, reduction into the Dirichlet cell, slope lengths.
L = CuspLattice(l, 2.5 + 6j)
print("co-area:", coarea(L))
print("a/c reduced mod lattice:", reduce_mod_lattice(a / c + 3 * L.tau2, L))
for p, q in [(1, 0), (0, 1), (1, 1), (2, 1)]:
    print(f"slope ({p},{q}): length {slope_length(L, p, q):.4f}")

# %% Which fillings pass the 2 pi and 6 length tests?
for s in [(1, 0), (0, 1)]:
    print(s, "2pi:", filling_admissible([(L, s)]), " 6:", filling_admissible([(L, s)], threshold=6))
