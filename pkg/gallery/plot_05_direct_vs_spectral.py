"""
Direct against spectral verification
====================================

The direct test costs O(N^2); the spectral test needs one FFT. Both give
the same answer away from the tolerance threshold.
"""

import sys
import time

import numpy as np

import cogs

sizes = [int(x) for x in sys.argv[1:]] or [16, 64, 256, 1024]

for N in sizes:
    cog, _ = cogs.sample_cog(cogs.SamplerConfig(N, seed=N))
    t0 = time.perf_counter()
    direct = cogs.is_cog_direct(cog)
    t1 = time.perf_counter()
    spectral = cogs.is_cog_spectral(cog)
    t2 = time.perf_counter()
    print(f"N={N:5d} direct {t1 - t0:.2e} s  spectral {t2 - t1:.2e} s  agree={cogs.methods_agree(direct, spectral)}")

# The same comparison on random vectors, which are never cogs.
rng = np.random.default_rng(0)
agree = sum(
    cogs.methods_agree(cogs.is_cog_direct(v), cogs.is_cog_spectral(v))
    for v in (rng.normal(size=rng.integers(2, 65)) for _ in range(1000))
)
print(f"random vectors: {agree}/1000 agree")

# The command line runs the same comparison: cog bench --n-list 64,256,1024
