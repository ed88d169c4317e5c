"""
Building cogs from phases
=========================

Any phases with theta_0 in {pi/4, 5pi/4} and theta_n + theta_{N-n} = pi/2
(mod 2 pi) produce a cog. The free coordinates are a branch for theta_0,
floor((N-1)/2) angles, and for even N a branch for theta_{N/2}.
"""

import numpy as np

import cogs

N = 8
params = cogs.FreePhaseParams(N, "minus", (0.25, 3.5, 6.0), half_branch="plus")
rep = cogs.complete_phases(params)
print("phases:", np.round(rep.theta, 6))

cog = cogs.synthesize(rep)
print("cog:", np.round(cog.vector, 6))
print("component sum:", cog.vector.sum(), "(minus branch gives -1)")
print(cogs.is_cog_direct(cog).summary())

##############################################################################
# Constraint violations are reported with the offending index.

try:
    cogs.validate_phases([np.pi / 4, 1.0, 1.0])
except cogs.PhaseConstraintError as exc:
    print(f"rejected ({exc.kind} at index {exc.index}): {exc}")

##############################################################################
# Random cogs
# -----------
# Sampling is uniform on the chart angles and reproducible from the seed.

cfg = cogs.SamplerConfig(N=12, seed=2024)
for cog, p in cogs.sample_cogs(cfg, 3):
    print(p.theta0_branch.value, p.half_branch.value, np.round(cog.vector, 4))

first, _ = cogs.sample_cog(cfg)
again, _ = cogs.sample_cog(cfg)
print("same seed, same cog:", np.array_equal(first.vector, again.vector))

# Cycling, negating or reversing a cog gives another cog.
a = first.vector
for name, other in (("cycle", cogs.cycle(a)), ("negate", -a), ("reverse", a[::-1])):
    print(name, cogs.is_cog_direct(other).is_cog)
