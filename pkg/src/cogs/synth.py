"""
Building cogs from phase angles.

Every cog in R^N can be written as

    a_k = sqrt(2)/N * sum_{n=0}^{N-1} cos(2 pi n (k-1) / N + theta_n)

and conversely this formula yields a cog whenever theta_0 is congruent to
pi/4 or 5pi/4 and theta_n + theta_{N-n} is congruent to pi/2 (mod 2 pi).
The free parameters are therefore a branch for theta_0, the angles
theta_1 ... theta_M with M = floor((N-1)/2), and for even N a branch for
theta_{N/2}.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    TWO_PI,
    Tolerance,
    angle_distance,
    canonical_angle,
    check_dimension,
    ordered_row_sum,
)
from .errors import InvalidArgumentError, InvalidParamsError, InvariantBreachError, PhaseConstraintError
from .verify import CogVector, is_cog_direct

QUARTER_PI = math.pi / 4
HALF_PI = math.pi / 2


class Branch(str, enum.Enum):
    """The two admissible values of a self-paired phase."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def angle(self):
        return QUARTER_PI if self is Branch.PLUS else 5 * QUARTER_PI

    @property
    def sign(self):
        return 1 if self is Branch.PLUS else -1

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise InvalidArgumentError(f"branch must be 'plus' or 'minus', got {value!r}") from None


def num_free_angles(N):
    """Number of continuous phase parameters, ``floor((N-1)/2)``."""
    return (check_dimension(N) - 1) // 2


@dataclass(frozen=True, eq=False)
class PhaseRepresentation:
    """Phases theta_0 ... theta_{N-1} in [0, 2 pi) satisfying the cog constraints."""

    theta: np.ndarray

    def __post_init__(self):
        arr = canonical_angle(np.array(self.theta, dtype=np.float64))
        arr.setflags(write=False)
        object.__setattr__(self, "theta", arr)

    @property
    def N(self):
        return self.theta.shape[0]

    def __len__(self):
        return self.N

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.theta
        return self.theta.astype(dtype)


@dataclass(frozen=True)
class FreePhaseParams:
    """
    Chart coordinates of a cog.

    Attributes
    ----------
    N : int
        Dimension.
    theta0_branch : Branch
        Selects theta_0 = pi/4 (plus) or 5 pi/4 (minus).
    free_angles : tuple of float
        theta_1 ... theta_M, M = floor((N-1)/2).
    half_branch : Branch or None
        Selects theta_{N/2} for even N; must be None for odd N.
    """

    N: int
    theta0_branch: Branch
    free_angles: tuple = ()
    half_branch: Branch | None = None

    def __post_init__(self):
        object.__setattr__(self, "theta0_branch", Branch.parse(self.theta0_branch))
        if self.half_branch is not None:
            object.__setattr__(self, "half_branch", Branch.parse(self.half_branch))
        object.__setattr__(self, "free_angles", tuple(float(x) for x in self.free_angles))

    def check(self):
        """Raise :class:`InvalidParamsError` if the parameters do not fit ``N``."""
        N = check_dimension(self.N)
        M = num_free_angles(N)
        if len(self.free_angles) != M:
            raise InvalidParamsError(
                f"N={N} needs exactly {M} free angles, got {len(self.free_angles)}"
            )
        if not all(math.isfinite(x) for x in self.free_angles):
            raise InvalidParamsError("free angles must be finite")
        if N % 2 == 0 and self.half_branch is None:
            raise InvalidParamsError(f"N={N} is even and needs a half_branch")
        if N % 2 == 1 and self.half_branch is not None:
            raise InvalidParamsError(f"N={N} is odd and takes no half_branch")

    def to_dict(self):
        return {
            "n": self.N,
            "theta0_branch": self.theta0_branch.value,
            "free_angles": list(self.free_angles),
            "half_branch": None if self.half_branch is None else self.half_branch.value,
        }


def _branch_of(angle, angle_tol):
    if angle_distance(angle, QUARTER_PI) <= angle_tol:
        return Branch.PLUS
    if angle_distance(angle, 5 * QUARTER_PI) <= angle_tol:
        return Branch.MINUS
    return None


def validate_phases(theta, tol=None):
    """
    Check the phase constraints and return a :class:`PhaseRepresentation`.

    Checks run in index order and the first failure is raised as a
    :class:`PhaseConstraintError`: theta_0 must be pi/4 or 5 pi/4, and
    theta_n + theta_{N-n} must be pi/2 modulo 2 pi for n = 1 ... N//2.
    For even N the self-paired index N/2 is reported as a ``'half_index'``
    violation.
    """
    tol = tol or Tolerance()
    arr = np.asarray(theta, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidArgumentError(f"theta must be 1-D, got shape {arr.shape}")
    N = check_dimension(arr.shape[0])
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError("phases must be finite")
    arr = canonical_angle(arr)

    if _branch_of(arr[0], tol.angle_tol) is None:
        raise PhaseConstraintError(
            f"theta_0 = {arr[0]:.12g} is not congruent to pi/4 or 5pi/4", "theta0", 0
        )
    n = np.arange(1, N // 2 + 1)
    pair_sum = arr[n] + arr[N - n]
    bad = angle_distance(pair_sum, HALF_PI) > tol.angle_tol
    if N % 2 == 0:
        # the self-paired index is checked as a branch, not as a sum
        bad[-1] = _branch_of(arr[N // 2], tol.angle_tol) is None
    if np.any(bad):
        i = int(n[np.argmax(bad)])
        if 2 * i == N:
            raise PhaseConstraintError(
                f"theta_{i} = {arr[i]:.12g} (half index) is not congruent to pi/4 or 5pi/4",
                "half_index",
                i,
            )
        raise PhaseConstraintError(
            f"theta_{i} + theta_{N - i} = {arr[i] + arr[N - i]:.12g} is not congruent to pi/2",
            "pair_sum",
            i,
        )
    return PhaseRepresentation(arr)


def complete_phases(params):
    """
    Expand chart coordinates into a full phase list.

    theta_{N-n} is set to ``(pi/2 - theta_n) mod 2 pi`` for each free angle
    and the branch values fill theta_0 and, for even N, theta_{N/2}.
    """
    params.check()
    N = params.N
    M = len(params.free_angles)
    theta = np.empty(N)
    theta[0] = params.theta0_branch.angle
    if M:
        phi = canonical_angle(np.array(params.free_angles))
        theta[1 : M + 1] = phi
        theta[N - M :] = canonical_angle(HALF_PI - phi)[::-1]
    if N % 2 == 0:
        theta[M + 1] = params.half_branch.angle
    return PhaseRepresentation(theta)


def free_params_of(rep, tol=None):
    """Inverse of :func:`complete_phases`: read chart coordinates off ``rep``."""
    tol = tol or Tolerance()
    theta = np.asarray(rep, dtype=np.float64)
    N = check_dimension(theta.shape[0])
    M = num_free_angles(N)
    branch0 = _branch_of(theta[0], tol.angle_tol)
    if branch0 is None:
        raise PhaseConstraintError("theta_0 is not congruent to pi/4 or 5pi/4", "theta0", 0)
    half = None
    if N % 2 == 0:
        half = _branch_of(theta[N // 2], tol.angle_tol)
        if half is None:
            raise PhaseConstraintError(
                f"theta_{N // 2} is not congruent to pi/4 or 5pi/4", "half_index", N // 2
            )
    return FreePhaseParams(N, branch0, tuple(theta[1 : M + 1]), half)


def synthesize_raw(theta):
    """Evaluate the canonical-form sum for ``theta`` without any checks.

    Summation runs over ascending n with the integer product n (k-1)
    reduced modulo N before it is turned into an angle.
    """
    theta = np.asarray(theta, dtype=np.float64)
    N = theta.shape[0]
    k = np.arange(N)

    def rows(start, stop):
        n = np.arange(start, stop)[:, None]
        return np.cos(TWO_PI * ((n * k) % N) / N + theta[start:stop, None])

    return math.sqrt(2.0) / N * ordered_row_sum(rows, N, N)


def synthesize(rep, tol=None):
    """
    Build the cog with phase representation ``rep``.

    ``rep`` should come from :func:`validate_phases` or
    :func:`complete_phases`; a plain sequence is validated first. The
    output is checked with :func:`is_cog_direct` and a failure raises
    :class:`InvariantBreachError`, since valid phases always give a cog.
    """
    tol = tol or Tolerance()
    if not isinstance(rep, PhaseRepresentation):
        rep = validate_phases(rep, tol)
    a = synthesize_raw(rep.theta)
    report = is_cog_direct(a, tol)
    if not report.is_cog:
        raise InvariantBreachError(f"synthesized vector failed verification: {report.summary()}")
    return CogVector(a, tol)
