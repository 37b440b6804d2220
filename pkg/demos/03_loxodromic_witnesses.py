# %% [markdown]
# # Loxodromic witnesses from two parabolics
#
# Products of the cusp translation with a second parabolic (or with the
# element realizing a full-sized ball) give loxodromic elements whose trace
# modulus, and hence translation length, can be bounded explicitly.

# %%
import math

from cuspbound.bounds import translation_length_upper
from cuspbound.moebius import translation_length
from cuspbound.witnesses import WitnessParams, lemma31_pair, perp_witness

# %% beta^{+-n} gamma: at least one of the two is loxodromic.
pair = lemma31_pair(WitnessParams(l=7, a=3, c=1, n=1))
print("plus trace ", pair.plus_trace, pair.plus_class)
print("minus trace", pair.minus_trace, pair.minus_class)
print("chosen trace", pair.chosen_trace)

# %% Perpendicular case: |tr| = sqrt(n^2 l^4 + 4) and lengths stay below log(n^2 l^4 + 8).
l = 2 * math.pi + 0.5
print(f"{'n':>3} {'|tr|':>12} {'length':>10} {'bound':>10}")
for n in range(1, 11):
    M, tr = perp_witness(l, n)
    print(f"{n:>3} {tr:>12.4f} {translation_length(M):>10.5f} {translation_length_upper(tr):>10.5f}")
