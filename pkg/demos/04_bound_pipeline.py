# %% [markdown]
# # From volume to a geodesic length bound
#
# Cusp density gives a cusp area budget V_c = C0 V. Trace bounds for
# explicit loxodromics become an increasing family F_n of the link
# complement volume x; the volume drop under Dehn filling gives a
# decreasing family G_n. Their crossing x* does not depend on n, and
# log(F_n(x*)^2 + 4) bounds the n-th shortest closed geodesic.

# %%
import math

from cuspbound import bounds as B

c = B.constants()
print(f"v0 = {c.v0:.10f}, C0 = {c.C0:.6f}, pi^2 sqrt3 = {c.Vc_min:.4f}")

# %% Root of g_n and the trace bound for a few cusp budgets.
for Vc in (c.Vc_min, 50.0, 500.0):
    x1 = B.g_root(1, Vc)
    print(f"V_c={Vc:8.3f}  x_1={x1:.6f}  sqrt2 V_c^(2/3)={math.sqrt(2) * Vc ** (2 / 3):.6f}  "
          f"trace bound n=1: {B.lemma33_trace_bound(1, Vc):.4f}")

# %% The crossing, computed in closed form and by bisection.
V = 2.0299
x = B.crossing_volume(V)
print("x* closed form:", x, " bisection:", B.crossing_volume_numeric(V, 5))
print("F_5(x*) =", B.F_n(x, 5), " G_5(x*) =", B.G_n(x, 5, V))

# %% Bounds for the first few geodesics.
for n in range(1, 6):
    print(f"l_{n} <= {B.geodesic_length_bound(n, V):.6f}   (non-hyperbolic filling: {B.geodesic_length_bound(n, 0):.6f})")
