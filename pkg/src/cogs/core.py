"""
Core vector operations for cyclic orthonormal generators.

Indices follow the 1-based convention ``(a_1, ..., a_N)`` at the API level
wherever an index is a component position; arrays are stored 0-based and
:func:`star_index` is the only place the two conventions meet.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, InvalidDimensionError, InvalidShiftError

TWO_PI = 2.0 * math.pi

DEFAULT_ABS_TOL = 1e-9
DEFAULT_ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances used by verification and phase validation.

    Parameters
    ----------
    abs_tol : float
        Absolute tolerance on autocorrelation residuals, spectral moduli
        and component sums.
    angle_tol : float
        Tolerance, in radians, on angle congruences modulo 2*pi.
    """

    abs_tol: float = DEFAULT_ABS_TOL
    angle_tol: float = DEFAULT_ANGLE_TOL

    def __post_init__(self):
        for name in ("abs_tol", "angle_tol"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise InvalidArgumentError(f"{name} must be a finite number, got {value!r}")
            if not 0.0 < value < 1e-2:
                raise InvalidArgumentError(f"{name} must lie in (0, 1e-2), got {value!r}")

    def to_dict(self):
        return {"abs_tol": self.abs_tol, "angle_tol": self.angle_tol}


def check_dimension(N):
    """Raise :class:`InvalidDimensionError` unless ``N`` is an integer >= 2."""
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)):
        raise InvalidDimensionError(f"dimension must be an integer, got {N!r}")
    if N < 2:
        raise InvalidDimensionError(f"dimension must be at least 2, got {N}")
    return int(N)


def as_real_vector(v):
    """Validate ``v`` as a real vector and return it as a float64 array.

    Accepts any 1-D sequence of finite reals, or an object exposing a
    ``vector`` attribute (such as :class:`cogs.verify.CogVector`).
    """
    v = getattr(v, "vector", v)
    arr = np.asarray(v)
    if arr.ndim != 1:
        raise InvalidArgumentError(f"expected a 1-D vector, got shape {arr.shape}")
    if np.iscomplexobj(arr):
        raise InvalidArgumentError("complex-valued vectors are not supported")
    try:
        arr = arr.astype(np.float64, copy=False)
    except (TypeError, ValueError) as exc:
        raise InvalidArgumentError(f"components must be real numbers: {exc}") from None
    check_dimension(arr.shape[0])
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError("components must be finite (no NaN or Inf)")
    return arr


def canonical_angle(theta):
    """Reduce angle(s) to the half-open interval [0, 2*pi)."""
    t = np.mod(np.asarray(theta, dtype=np.float64), TWO_PI)
    # np.mod of a tiny negative number rounds up to exactly 2*pi
    t = np.where(t >= TWO_PI, 0.0, t)
    if t.ndim == 0:
        return float(t)
    return t


def angle_distance(x, target):
    """Distance between ``x`` and ``target`` on the circle R / 2*pi*Z."""
    d = np.mod(np.asarray(x, dtype=np.float64) - target + math.pi, TWO_PI) - math.pi
    d = np.abs(d)
    if d.ndim == 0:
        return float(d)
    return d


def star_index(n, N):
    """
    Return the unique representative of ``n`` modulo ``N`` in {1, ..., N}.

    >>> star_index(0, 3), star_index(5, 3), star_index(-1, 4)
    (3, 2, 3)
    """
    N = check_dimension(N)
    return (int(n) - 1) % N + 1


def cycle(v):
    """Return the cycle ``(a_2, ..., a_N, a_1)`` of ``v``."""
    a = as_real_vector(v)
    return np.concatenate((a[1:], a[:1]))


def companions(v):
    """Return the N x N array whose row ``r`` is ``v`` cycled ``r`` times."""
    a = as_real_vector(v)
    N = a.shape[0]
    idx = (np.arange(N)[:, None] + np.arange(N)[None, :]) % N
    return a[idx]


def kronecker_delta(s):
    return 1.0 if s == 0 else 0.0


def cyclic_autocorrelation(v, s, compensated=False):
    """
    Cyclic autocorrelation ``sum_j a_j * a_{(j+s)*}`` at shift ``s``.

    The sum is accumulated left to right in ascending ``j`` so the result
    is reproducible. Pass ``compensated=True`` to use :func:`math.fsum`
    instead.
    """
    a = as_real_vector(v)
    N = a.shape[0]
    if isinstance(s, bool) or not isinstance(s, (int, np.integer)) or not 0 <= s < N:
        raise InvalidShiftError(f"shift must be an integer in [0, {N - 1}], got {s!r}")
    shifted = np.roll(a, -int(s))
    terms = a * shifted
    if compensated:
        return math.fsum(terms)
    return float(np.cumsum(terms)[-1])


ROW_BLOCK_ELEMENTS = 1 << 20


def ordered_row_sum(make_rows, count, width):
    """
    Sum ``count`` rows of length ``width`` strictly in ascending row order.

    ``make_rows(start, stop)`` must return a fresh array holding rows
    ``start`` to ``stop - 1``. Rows are generated in blocks of at most
    about 2**20 elements and accumulated with :func:`numpy.cumsum`, so the
    result matches a plain ``acc += row`` loop bit for bit.
    """
    step = max(1, ROW_BLOCK_ELEMENTS // max(width, 1))
    acc = None
    for start in range(0, count, step):
        block = make_rows(start, min(start + step, count))
        if acc is not None:
            block[0] += acc
        acc = np.cumsum(block, axis=0)[-1]
    return acc


def autocorrelation_all(v):
    """Cyclic autocorrelation at every shift ``s = 0, ..., N-1``.

    Each entry is accumulated in ascending ``j``, so entry ``s`` matches
    ``cyclic_autocorrelation(v, s)`` bit for bit.
    """
    a = as_real_vector(v)
    N = a.shape[0]
    s = np.arange(N)

    def rows(start, stop):
        j = np.arange(start, stop)[:, None]
        return a[j] * a[(j + s) % N]

    return ordered_row_sum(rows, N, N)


def dft_direct(v):
    """Direct O(N^2) evaluation of ``sum_j a_j exp(-2 pi i n (j-1) / N)``.

    Exponents are reduced modulo N before evaluation and the sum is
    accumulated in ascending ``j``.
    """
    a = as_real_vector(v)
    N = a.shape[0]
    n = np.arange(N)

    def rows(start, stop):
        j = np.arange(start, stop)[:, None]
        return a[j] * np.exp(-2j * np.pi * ((n * j) % N) / N)

    return ordered_row_sum(rows, N, N)


def dft(v, method="fft"):
    """
    Discrete Fourier transform of a real vector.

    Parameters
    ----------
    v : array_like
        Real vector of length N >= 2.
    method : {'fft', 'direct'}
        ``'fft'`` uses :func:`numpy.fft.fft`; ``'direct'`` uses the
        quadratic reference summation in :func:`dft_direct`.

    Returns
    -------
    bins : ndarray of complex128
        ``bins[n] = sum_j a_j exp(-2 pi i n (j-1) / N)``.
    """
    if method == "fft":
        return np.fft.fft(as_real_vector(v))
    if method == "direct":
        return dft_direct(v)
    raise InvalidArgumentError(f"unknown dft method {method!r}")


def cyclic_trig_sums(N, a, theta):
    """
    Closed form of ``sum_{n<N} cos(2 pi n a / N + theta)`` and the matching
    sine sum, for a nonzero integer ``a``.

    Returns ``(N cos(theta), N sin(theta))`` when N divides ``a`` and
    ``(0.0, 0.0)`` otherwise.
    """
    N = check_dimension(N)
    if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
        raise InvalidArgumentError(f"a must be an integer, got {a!r}")
    if a == 0:
        raise InvalidArgumentError("a must be a nonzero integer")
    if a % N == 0:
        return N * math.cos(theta), N * math.sin(theta)
    return 0.0, 0.0
