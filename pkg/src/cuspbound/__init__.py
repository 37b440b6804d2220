"""Upper bounds on closed geodesic lengths of hyperbolic link complements.

Submodules:

- ``moebius``   -- PSL(2, C) isometries of the upper half-space
- ``cusp``      -- horoballs, cusp lattices, slope lengths
- ``witnesses`` -- explicit loxodromic elements and their trace bounds
- ``bounds``    -- the scalar bound chain and the final length bound
- ``spectrum``  -- auditing externally computed length spectra
- ``cli``       -- command-line front end
"""

from .bounds import BoundQuery, constants, geodesic_length_bound
from .moebius import H3Point, IsometryClass, MoebiusMap

__all__ = ["BoundQuery", "H3Point", "IsometryClass", "MoebiusMap", "constants", "geodesic_length_bound"]
__version__ = "0.1.0"
