"""
Projecting onto the nearest cog
===============================

Pushing every DFT coefficient radially onto the unit circle gives the
closest cog in Euclidean distance. Here the projection is compared with a
brute-force search over a fine lattice of three-dimensional cogs.
"""

import numpy as np

import cogs

rng = np.random.default_rng(3)
v = rng.normal(size=3)
print("input:", v)
print("|DFT|:", np.abs(cogs.dft(v)))

projected = cogs.nearest_cog(v)
print("nearest cog:", projected.vector)
print("distance:", np.linalg.norm(projected.vector - v))

lattice = np.array([c.vector for c, _ in cogs.enumerate_grid(3, 2000, "both")])
print("best of", len(lattice), "lattice cogs:", np.min(np.linalg.norm(lattice - v, axis=1)))

# Projecting a cog leaves it where it is.
print("idempotent:", np.allclose(cogs.nearest_cog(projected).vector, projected.vector, atol=1e-12))

##############################################################################
# When a coefficient vanishes the nearest cog is not unique.

try:
    cogs.nearest_cog([1.0, 1.0, 1.0])
except cogs.AmbiguousProjectionError as exc:
    print("ambiguous at bin", exc.bin)
print("with unit_phase:", cogs.nearest_cog([1.0, 1.0, 1.0], policy="unit_phase").vector)
