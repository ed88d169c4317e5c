"""
Deciding whether a vector is a cyclic orthonormal generator.

Three equivalent tests are provided. The direct test evaluates the cyclic
autocorrelation at every shift and compares it with the Kronecker delta.
The spectral test checks that every DFT coefficient has unit modulus,
which is the same condition seen through the Fourier transform. The Gram
test builds the matrix of inner products between all cyclic companions.
"""

from dataclasses import dataclass, field

import numpy as np

from .core import Tolerance, as_real_vector, autocorrelation_all, companions, dft
from .errors import CorruptedCogError, InvalidArgumentError, NotACogError

GRAM_MAX_DIM = 4096


@dataclass(frozen=True, eq=False)
class CogVector:
    """A real vector that passed cog verification at ``tolerance``."""

    vector: np.ndarray
    tolerance: Tolerance = field(default_factory=Tolerance)

    def __post_init__(self):
        arr = np.array(self.vector, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "vector", arr)

    @property
    def N(self):
        return self.vector.shape[0]

    def __len__(self):
        return self.N

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.vector
        return self.vector.astype(dtype)

    def __repr__(self):
        return f"CogVector({np.array2string(self.vector, precision=6)}, abs_tol={self.tolerance.abs_tol:g})"


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """Outcome of a cog test with its per-shift or per-bin diagnostics.

    ``per_shift_residuals`` is filled by the direct and Gram methods,
    ``per_bin_moduli`` by the spectral method; the other is ``None``.
    """

    is_cog: bool
    method: str
    per_shift_residuals: np.ndarray | None
    per_bin_moduli: np.ndarray | None
    component_sum: float
    tolerance_used: Tolerance

    @property
    def max_deviation(self):
        """Largest residual (direct, gram) or ``|1 - |a_n||`` (spectral)."""
        if self.per_shift_residuals is not None:
            return float(np.max(self.per_shift_residuals))
        return float(np.max(np.abs(1.0 - self.per_bin_moduli)))

    def to_dict(self):
        def listify(x):
            return None if x is None else [float(y) for y in x]

        return {
            "is_cog": bool(self.is_cog),
            "method": self.method,
            "max_deviation": self.max_deviation,
            "per_shift_residuals": listify(self.per_shift_residuals),
            "per_bin_moduli": listify(self.per_bin_moduli),
            "component_sum": float(self.component_sum),
            "tolerance_used": self.tolerance_used.to_dict(),
        }

    def summary(self):
        verdict = "is a cog" if self.is_cog else "is NOT a cog"
        return (
            f"[{self.method}] vector {verdict}: max deviation {self.max_deviation:.3e} "
            f"(abs_tol {self.tolerance_used.abs_tol:g}), component sum {self.component_sum:.12g}"
        )


def _component_sum(a):
    return float(np.cumsum(a)[-1])


def is_cog_direct(v, tol=None):
    """
    Test the cog property shift by shift.

    ``per_shift_residuals[s] = |sum_j a_j a_{(j+s)*} - delta_0^s|`` and the
    vector is a cog when every residual is at most ``tol.abs_tol``. Cost is
    O(N^2).
    """
    tol = tol or Tolerance()
    a = as_real_vector(v)
    residuals = np.abs(autocorrelation_all(a))
    residuals[0] = abs(residuals[0] - 1.0)
    is_cog = bool(np.max(residuals) <= tol.abs_tol)
    return VerificationReport(is_cog, "direct", residuals, None, _component_sum(a), tol)


def is_cog_spectral(v, tol=None):
    """
    Test the cog property through the spectrum: ``v`` is a cog exactly when
    every DFT coefficient lies on the unit circle.

    Runs in O(N log N). Near the threshold the boolean may differ from
    :func:`is_cog_direct`, which is authoritative; see
    :func:`methods_agree`.
    """
    tol = tol or Tolerance()
    a = as_real_vector(v)
    moduli = np.abs(dft(a, method="fft"))
    is_cog = bool(np.max(np.abs(1.0 - moduli)) <= tol.abs_tol)
    return VerificationReport(is_cog, "spectral", None, moduli, _component_sum(a), tol)


def gram_matrix(v):
    """Matrix of inner products ``<cycle^r(v), cycle^c(v)>``.

    The result is symmetric and circulant. Materialized densely, so N is
    capped at 4096.
    """
    a = as_real_vector(v)
    if a.shape[0] > GRAM_MAX_DIM:
        raise InvalidArgumentError(f"gram_matrix is limited to N <= {GRAM_MAX_DIM}")
    rows = companions(a)
    return rows @ rows.T


def is_cog_gram(v, tol=None):
    """Test the cog property by comparing the Gram matrix with the identity.

    Residuals are reported per shift as the largest deviation over the
    matching circulant diagonal.
    """
    tol = tol or Tolerance()
    a = as_real_vector(v)
    N = a.shape[0]
    dev = np.abs(gram_matrix(a) - np.eye(N))
    r, c = np.indices((N, N))
    shift = (c - r) % N
    residuals = np.zeros(N)
    np.maximum.at(residuals, shift.ravel(), dev.ravel())
    is_cog = bool(np.max(residuals) <= tol.abs_tol)
    return VerificationReport(is_cog, "gram", residuals, None, _component_sum(a), tol)


_METHODS = {"direct": is_cog_direct, "spectral": is_cog_spectral, "gram": is_cog_gram}


def verify(v, tol=None, method="direct"):
    """Run the named cog test and return its :class:`VerificationReport`."""
    try:
        fn = _METHODS[method]
    except KeyError:
        raise InvalidArgumentError(f"unknown verification method {method!r}") from None
    return fn(v, tol)


def methods_agree(first, second):
    """True when two reports agree, or either sits in the near-threshold band.

    The band is ``[abs_tol / 2, 2 * abs_tol]`` on each report's own
    ``max_deviation``; disagreement inside it is tolerated.
    """
    if first.is_cog == second.is_cog:
        return True
    for report in (first, second):
        t = report.tolerance_used.abs_tol
        if t / 2 <= report.max_deviation <= 2 * t:
            return True
    return False


def as_cog(v, tol=None):
    """Verify ``v`` with the direct test and wrap it as a :class:`CogVector`.

    Raises :class:`NotACogError` carrying the failed report.
    """
    if isinstance(v, CogVector) and (tol is None or tol == v.tolerance):
        return v
    tol = tol or Tolerance()
    report = is_cog_direct(v, tol)
    if not report.is_cog:
        raise NotACogError(report.summary(), report=report)
    return CogVector(as_real_vector(v), tol)


def component_sum_sign(v, tol=None):
    """
    Sign of ``sum_j a_j`` for a cog; the sum of a cog is always +1 or -1.

    Raises :class:`CorruptedCogError` when ``|sum_j a_j|`` is further than
    ``abs_tol`` from 1. The tolerance defaults to the one ``v`` was verified
    at when ``v`` is a :class:`CogVector`.
    """
    if tol is None:
        tol = getattr(v, "tolerance", None) or Tolerance()
    total = _component_sum(as_real_vector(v))
    if abs(abs(total) - 1.0) > tol.abs_tol:
        raise CorruptedCogError(
            f"component sum {total!r} is not within {tol.abs_tol:g} of +1 or -1"
        )
    return 1 if total > 0 else -1
