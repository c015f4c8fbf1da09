"""Dense complex matrix helpers with tolerance-guarded integer snapping.

Everything the package ultimately reports (multiplicities, dimensions,
generator counts) is an integer; floating point enters only through the
matrix images of the two group generators.  Every float-to-integer
conversion goes through ``snap_integer`` so numerical corruption becomes
a hard error instead of a silently wrong table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ComplexMatrix = np.ndarray

DEFAULT_EPS = 1e-9


class SnapFailure(ValueError):
    """A quantity that should have been a (non-negative) integer was not."""


@dataclass(frozen=True)
class Tolerance:
    """Absolute entrywise tolerance for all approximate comparisons."""

    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not 0.0 < self.eps < 1e-3:
            raise ValueError(f"tolerance eps must lie in (0, 1e-3), got {self.eps!r}")


_default_tolerance = Tolerance()


def default_tolerance() -> Tolerance:
    return _default_tolerance


def set_default_tolerance(eps: float) -> None:
    """Override the process-wide default tolerance."""
    global _default_tolerance
    _default_tolerance = Tolerance(eps)


def resolve_tolerance(tol: Tolerance | None) -> Tolerance:
    return _default_tolerance if tol is None else tol


def as_matrix(entries) -> ComplexMatrix:
    """Copy nested lists or an array to an owned square complex128 matrix."""
    a = np.array(entries, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def max_abs(a: ComplexMatrix) -> float:
    """Largest entry magnitude; 0.0 for empty matrices."""
    return float(np.max(np.abs(a))) if a.size else 0.0


def clean(a: ComplexMatrix, tol: Tolerance | None = None) -> ComplexMatrix:
    """Copy with sub-tolerance entries zeroed.

    Rank computations here always see matrices whose honest entries are
    of order one, so anything below tolerance is floating point noise
    and must not produce pivots.
    """
    out = np.array(a, dtype=np.complex128)
    if out.size:
        out[np.abs(out) <= resolve_tolerance(tol).eps] = 0
    return out


def mat_mul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} by {b.shape}")
    return a @ b


def mat_pow(a: ComplexMatrix, n: int) -> ComplexMatrix:
    """Non-negative matrix power by repeated squaring."""
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = np.eye(a.shape[0], dtype=np.complex128)
    base = a
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def is_identity(a: ComplexMatrix, tol: Tolerance | None = None) -> bool:
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    eps = resolve_tolerance(tol).eps
    return max_abs(a - np.eye(a.shape[0], dtype=np.complex128)) <= eps


def row_reduce(a: ComplexMatrix, tol: Tolerance | None = None):
    """Row echelon form with partial pivoting.

    Returns (reduced, pivot_columns).  The pivot threshold is the
    tolerance scaled by the largest entry magnitude of the input, so an
    exactly-zero matrix has no pivots.
    """
    m = np.array(a, dtype=np.complex128)
    pivots: list[int] = []
    if m.size == 0:
        return m, pivots
    threshold = resolve_tolerance(tol).eps * max_abs(m)
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = r + int(np.argmax(np.abs(m[r:, c])))
        if abs(m[p, c]) <= threshold:
            continue
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = m[r] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        r += 1
        pivots.append(c)
    return m, pivots


def rank(a: ComplexMatrix, tol: Tolerance | None = None) -> int:
    _, pivots = row_reduce(a, tol)
    return len(pivots)


def snap_integer(x: float, tol: Tolerance | None = None) -> int:
    """Round to the nearest integer, failing hard when x is not close to one."""
    eps = resolve_tolerance(tol).eps
    n = round(float(x))
    if abs(float(x) - n) > eps:
        raise SnapFailure(f"{x!r} is not within {eps} of an integer")
    return int(n)
