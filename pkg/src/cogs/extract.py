"""Recovering the phase representation of a given cog."""

import math
from dataclasses import dataclass

import numpy as np

from .core import TWO_PI, Tolerance, as_real_vector, canonical_angle, ordered_row_sum
from .errors import InvalidArgumentError, NotACogError
from .synth import PhaseRepresentation, synthesize_raw, validate_phases
from .verify import as_cog

QUARTER_PI = math.pi / 4


@dataclass(frozen=True, eq=False)
class ExtractionResult:
    representation: PhaseRepresentation
    unit_circle_residuals: np.ndarray
    reconstruction_residual: float

    @property
    def theta(self):
        return self.representation.theta


def circle_coords_all(v):
    """
    ``(C, S)`` arrays with ``C[n] + i S[n] = sum_j a_j exp(i (pi/4 - 2 pi n (j-1) / N))``.

    Accumulated in ascending ``j`` with exponents reduced modulo N.
    """
    a = as_real_vector(v)
    N = a.shape[0]
    n = np.arange(N)

    def rows(start, stop):
        j = np.arange(start, stop)[:, None]
        angle = QUARTER_PI - TWO_PI * ((n * j) % N) / N
        return np.concatenate((a[j] * np.cos(angle), a[j] * np.sin(angle)), axis=1)

    CS = ordered_row_sum(rows, N, 2 * N)
    return CS[:N], CS[N:]


def circle_coords(v, n):
    """Return ``(C_n, S_n)`` for one frequency index ``n`` in [0, N)."""
    a = as_real_vector(v)
    N = a.shape[0]
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or not 0 <= n < N:
        raise InvalidArgumentError(f"frequency index must be an integer in [0, {N - 1}], got {n!r}")
    j = np.arange(N)
    angle = QUARTER_PI - TWO_PI * ((int(n) * j) % N) / N
    C = float(np.cumsum(a * np.cos(angle))[-1])
    S = float(np.cumsum(a * np.sin(angle))[-1])
    return C, S


def extract_phases(v, tol=None):
    """
    Compute the phase representation of a cog.

    Each theta_n is ``atan2(S_n, C_n)`` reduced to [0, 2 pi). Raises
    :class:`NotACogError` if some ``(C_n, S_n)`` is further than
    ``abs_tol`` from the unit circle, or if resynthesizing the phases does
    not reproduce the input to within ``10 * abs_tol``.
    """
    if tol is None:
        tol = getattr(v, "tolerance", None) or Tolerance()
    a = as_real_vector(v)
    C, S = circle_coords_all(a)
    residuals = np.abs(C * C + S * S - 1.0)
    worst = int(np.argmax(residuals))
    if residuals[worst] > tol.abs_tol:
        raise NotACogError(
            f"(C_{worst}, S_{worst}) is {residuals[worst]:.3e} off the unit circle "
            f"(abs_tol {tol.abs_tol:g})"
        )
    theta = canonical_angle(np.arctan2(S, C))
    rep = validate_phases(theta, tol)
    recon = float(np.max(np.abs(synthesize_raw(rep.theta) - a)))
    if recon > 10 * tol.abs_tol:
        raise NotACogError(
            f"reconstruction from extracted phases is off by {recon:.3e} (limit {10 * tol.abs_tol:g})"
        )
    return ExtractionResult(rep, residuals, recon)


def canonical_form(v, tol=None):
    """Verify ``v`` with the direct test, then extract its phases.

    Raises :class:`NotACogError` carrying the failed report.
    """
    tol = tol or Tolerance()
    cog = as_cog(v, tol)
    return extract_phases(cog, tol)
