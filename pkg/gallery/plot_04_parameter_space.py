"""
The space of cogs
=================

For N >= 3 the cogs form a torus of dimension floor((N-1)/2) for each
branch choice. In two dimensions there are no free angles and only four
cogs.
"""

import numpy as np

import cogs

for N in range(2, 10):
    print(f"N={N}: {cogs.manifold_dim(N)} free angles")

print("all cogs in R^2:")
for cog, p in cogs.enumerate_grid(2, 1, "both"):
    print(" ", p.theta0_branch.value, p.half_branch.value, np.round(cog.vector, 12))

##############################################################################
# A lattice over the single angle in R^3, one loop per branch. The
# components trace closed curves as the angle goes once round.

for cog, p in cogs.enumerate_grid(3, 8, "both"):
    print(f"{p.theta0_branch.value:>5} phi={p.free_angles[0]:.3f}  {np.round(cog.vector, 4)}")

try:
    cogs.enumerate_grid(15, 10, "both")
except cogs.EnumerationTooLargeError as exc:
    print("refused:", exc)
