"""
A cog in three dimensions
=========================

The vector (2/3, 2/3, -1/3) and its two cyclic shifts form an orthonormal
basis of R^3. This script checks that three ways, then recovers the
phases that describe it.
"""

import math

import numpy as np

import cogs

v = np.array([2 / 3, 2 / 3, -1 / 3])

# The cyclic companions are the rows of this matrix.
print("companions:")
print(np.array([v, cogs.cycle(v), cogs.cycle(cogs.cycle(v))]))

# Direct test: the cyclic autocorrelation must be the Kronecker delta.
report = cogs.is_cog_direct(v)
print(report.summary())
print("per-shift residuals:", report.per_shift_residuals)

# Spectral test: every DFT coefficient must have modulus 1.
print(cogs.is_cog_spectral(v).summary())
print("DFT:", np.round(cogs.dft(v), 12))

# Gram test: inner products of all companions form the identity.
print("Gram matrix:")
print(np.round(cogs.gram_matrix(v), 12))

##############################################################################
# Phases
# ------
# Rotating each DFT coefficient by pi/4 gives a point (C_n, S_n) on the unit
# circle; its angle is theta_n.

for n in range(3):
    C, S = cogs.circle_coords(v, n)
    print(f"n={n}: (C, S) = ({C:+.6f}, {S:+.6f}), C^2 + S^2 = {C * C + S * S:.15f}")

result = cogs.canonical_form(v)
print("theta:", result.theta)
print("theta_0 / pi =", result.theta[0] / math.pi)
print("theta_1 + theta_2 - 5pi/2 =", result.theta[1] + result.theta[2] - 2.5 * math.pi)

# Feeding the phases back through the canonical form gives v again.
print("rebuilt:", cogs.synthesize(result.representation).vector)
