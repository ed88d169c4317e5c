"""
The space of all cogs in R^N.

For a given N the cogs are parameterized by a branch choice for theta_0,
M = floor((N-1)/2) free angles on the circle, and for even N a second
branch choice for theta_{N/2}. This module samples and enumerates that
chart and projects arbitrary vectors onto the nearest cog.

Random sampling uses NumPy's PCG64 bit generator (``numpy.random.default_rng``
with an integer seed). For each sample the draws are made in this order:
the theta_0 branch if the policy is ``'random'`` (one ``integers(0, 2)``
draw, 0 meaning plus), then M angles from ``uniform(0, 2 pi)``, then the
half branch the same way when N is even and its policy is ``'random'``.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .core import TWO_PI, Tolerance, as_real_vector, check_dimension
from .errors import (
    AmbiguousProjectionError,
    EnumerationTooLargeError,
    InvalidArgumentError,
    InvariantBreachError,
)
from .synth import Branch, FreePhaseParams, complete_phases, num_free_angles, synthesize
from .verify import CogVector, is_cog_direct

SAMPLE_POLICIES = ("fixed_plus", "fixed_minus", "random")
GRID_POLICIES = ("fixed_plus", "fixed_minus", "both")
TIE_POLICIES = ("error", "unit_phase")
DEFAULT_GRID_CAP = 10**6
DEFAULT_TIE_TOL = 1e-12


def manifold_dim(N):
    """Dimension of the cog set in R^N, ``floor((N-1)/2)``."""
    return num_free_angles(N)


def _check_policy(policy, allowed, what):
    if policy not in allowed:
        raise InvalidArgumentError(f"{what} must be one of {allowed}, got {policy!r}")
    return policy


@dataclass(frozen=True)
class SamplerConfig:
    """
    Settings for :func:`sample_cog`.

    ``half_policy`` applies to theta_{N/2} for even N and defaults to
    ``branch_policy``; with ``'random'`` the two branches are drawn
    independently.
    """

    N: int
    seed: int = 0
    branch_policy: str = "random"
    half_policy: str | None = None

    def __post_init__(self):
        check_dimension(self.N)
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)):
            raise InvalidArgumentError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < 2**64:
            raise InvalidArgumentError("seed must be an unsigned 64-bit integer")
        _check_policy(self.branch_policy, SAMPLE_POLICIES, "branch_policy")
        if self.half_policy is not None:
            _check_policy(self.half_policy, SAMPLE_POLICIES, "half_policy")


def _draw_branch(rng, policy):
    if policy == "fixed_plus":
        return Branch.PLUS
    if policy == "fixed_minus":
        return Branch.MINUS
    return Branch.PLUS if rng.integers(0, 2) == 0 else Branch.MINUS


def _draw_params(rng, cfg):
    N = cfg.N
    branch0 = _draw_branch(rng, cfg.branch_policy)
    angles = tuple(rng.uniform(0.0, TWO_PI, size=num_free_angles(N)).tolist())
    half = None
    if N % 2 == 0:
        half = _draw_branch(rng, cfg.half_policy or cfg.branch_policy)
    return FreePhaseParams(N, branch0, angles, half)


def sample_cogs(cfg, count, tol=None):
    """Yield ``count`` (CogVector, FreePhaseParams) pairs from one seeded stream."""
    rng = np.random.default_rng(cfg.seed)
    for _ in range(count):
        params = _draw_params(rng, cfg)
        yield synthesize(complete_phases(params), tol), params


def sample_cog(cfg, tol=None):
    """Draw one cog uniformly on the parameter chart; deterministic in ``cfg``."""
    return next(sample_cogs(cfg, 1, tol))


def _grid_branches(policy):
    if policy == "fixed_plus":
        return (Branch.PLUS,)
    if policy == "fixed_minus":
        return (Branch.MINUS,)
    return (Branch.PLUS, Branch.MINUS)


def grid_size(N, points_per_angle, branch_policy="fixed_plus", half_policy=None):
    N = check_dimension(N)
    count = len(_grid_branches(branch_policy)) * points_per_angle ** num_free_angles(N)
    if N % 2 == 0:
        count *= len(_grid_branches(half_policy or branch_policy))
    return count


def enumerate_grid(N, points_per_angle, branch_policy="fixed_plus", half_policy=None,
                   cap=DEFAULT_GRID_CAP, tol=None):
    """
    Yield cogs on a regular lattice of the parameter chart.

    Free angles run over ``2 pi k / points_per_angle`` for
    ``k = 0 ... points_per_angle - 1``. Tuples ``(theta0 branch, angles...,
    half branch)`` are visited in lexicographic order with plus before
    minus. ``branch_policy`` and ``half_policy`` accept ``'fixed_plus'``,
    ``'fixed_minus'`` or ``'both'``; ``half_policy`` defaults to
    ``branch_policy``.

    Raises :class:`EnumerationTooLargeError` before yielding anything if
    the lattice has more than ``cap`` points.
    """
    N = check_dimension(N)
    if isinstance(points_per_angle, bool) or not isinstance(points_per_angle, (int, np.integer)) \
            or points_per_angle < 1:
        raise InvalidArgumentError(f"points_per_angle must be a positive integer, got {points_per_angle!r}")
    _check_policy(branch_policy, GRID_POLICIES, "branch_policy")
    if half_policy is not None:
        _check_policy(half_policy, GRID_POLICIES, "half_policy")
    total = grid_size(N, points_per_angle, branch_policy, half_policy)
    if total > cap:
        raise EnumerationTooLargeError(f"grid has {total} points, more than the cap of {cap}")
    return _grid(N, points_per_angle, branch_policy, half_policy, tol)


def _grid(N, points, branch_policy, half_policy, tol):
    M = num_free_angles(N)
    lattice = [TWO_PI * k / points for k in range(points)]
    halves = _grid_branches(half_policy or branch_policy) if N % 2 == 0 else (None,)
    for b0, angles, half in itertools.product(
        _grid_branches(branch_policy), itertools.product(lattice, repeat=M), halves
    ):
        params = FreePhaseParams(N, b0, angles, half)
        yield synthesize(complete_phases(params), tol), params


def nearest_cog(v, policy="error", tol=None, tie_tol=DEFAULT_TIE_TOL):
    """
    Euclidean projection of ``v`` onto the set of cogs.

    Every DFT coefficient is pushed radially onto the unit circle; the
    real coefficients (index 0, and N/2 for even N) go to the sign of
    their value. By Parseval this minimizes the distance bin by bin, so
    the result is a global minimizer.

    Parameters
    ----------
    v : array_like
        Real vector, N >= 2.
    policy : {'error', 'unit_phase'}
        What to do with a coefficient of modulus below ``tie_tol``, where
        the nearest point is not unique. ``'error'`` raises
        :class:`AmbiguousProjectionError` naming the first such bin;
        ``'unit_phase'`` sets it (and its conjugate partner) to 1.
    tol : Tolerance, optional
        Tolerance the returned :class:`CogVector` is verified at.
    tie_tol : float
        Modulus below which a coefficient is treated as zero.
    """
    _check_policy(policy, TIE_POLICIES, "policy")
    tol = tol or Tolerance()
    a = as_real_vector(v)
    N = a.shape[0]
    spectrum = np.fft.fft(a)
    moduli = np.abs(spectrum)
    projected = np.empty(N, dtype=np.complex128)
    for n in range(N // 2 + 1):
        if moduli[n] < tie_tol:
            if policy == "error":
                raise AmbiguousProjectionError(
                    f"DFT bin {n} has modulus {moduli[n]:.3e} < {tie_tol:g}; nearest cog is not unique",
                    bin=n,
                )
            projected[n] = 1.0
        elif n == 0 or 2 * n == N:
            projected[n] = 1.0 if spectrum[n].real > 0 else -1.0
        else:
            projected[n] = spectrum[n] / moduli[n]
    for n in range(N // 2 + 1, N):
        projected[n] = np.conj(projected[N - n])
    out = np.fft.ifft(projected).real
    report = is_cog_direct(out, tol)
    if not report.is_cog:
        raise InvariantBreachError(f"projection failed verification: {report.summary()}")
    return CogVector(out, tol)


def distance(u, v):
    """Euclidean distance between two vectors."""
    return float(np.linalg.norm(as_real_vector(u) - as_real_vector(v)))
