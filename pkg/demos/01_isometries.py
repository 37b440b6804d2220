# %% [markdown]
# # Isometries of the upper half-space
#
# Orientation-preserving isometries of H^3 are 2x2 complex matrices of
# determinant one, up to sign. The trace decides the type of the map.

# %%
import math

import numpy as np

from cuspbound.moebius import (
    H3Point,
    MoebiusMap,
    act_on_h3,
    classify,
    compose,
    hyperbolic_distance,
    isometric_circle,
    trace,
    translation_length,
)

# %%
beta = MoebiusMap(1, 7, 0, 1)  # translation by 7 along the real axis
inversion = MoebiusMap(0, -1, 1, 0)
lox = MoebiusMap(2, 0, 0, 0.5)  # dilation by 4 about the vertical axis

for name, M in [("beta", beta), ("inversion", inversion), ("lox", lox)]:
    print(f"{name:10s} trace={trace(M)!s:12s} class={classify(M)}")

# %% Only loxodromic maps have a translation length.
print("translation length of lox:", translation_length(lox), "= 2 log 2 =", 2 * math.log(2))

# %% Products: beta^3 composed with a parabolic fixing 0.
gamma = MoebiusMap(1, 0, 7j, 1)
w = compose(beta**3, gamma)
print("beta^3 gamma =", w)
print("class:", classify(w), " length:", translation_length(w))

# %% The Poincare extension preserves hyperbolic distance.
rng = np.random.default_rng(0)
p = H3Point(0.3 + 0.2j, 0.8)
q = H3Point(-1.0 + 2.0j, 3.5)
print("d(p, q)        =", hyperbolic_distance(p, q))
print("d(w p, w q)    =", hyperbolic_distance(act_on_h3(w, p), act_on_h3(w, q)))

# %% Isometric circle of the inversion: center 0, radius 1.
print("isometric circle:", isometric_circle(inversion))
