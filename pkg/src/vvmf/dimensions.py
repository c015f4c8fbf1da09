"""Dimension formulas for holomorphic and cusp forms of every integer weight.

All values come from the cached invariants of the parity parts.  The
single case the theory does not pin down exactly is weight one for an
odd part that cannot be certified irreducible; there the returned
value is a lower bound and is marked as such instead of silently
pretending to be exact.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .invariants import (
    EvenInvariants,
    OddInvariants,
    even_invariants,
    exponent_data,
    floor_trace,
    floor_trace_complement,
    odd_invariants,
)
from .linalg import SnapFailure, Tolerance, snap_integer
from .modrep import (
    ASSERTED_IRREDUCIBLE,
    ASSERTED_REDUCIBLE,
    ClosureCapExceeded,
    ModularRepresentation,
    ParityError,
    enumerate_closure,
    parity,
    parity_split,
)

EXACT = "exact"
LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class DimResult:
    """One computed dimension with its provenance rule."""

    value: int
    status: str = EXACT
    rule: str = ""

    def __post_init__(self):
        assert self.value >= 0


def certify_irreducible(rep: ModularRepresentation, closure_cap: int | None = None,
                        tol: Tolerance | None = None) -> bool:
    """True when the representation is known to be irreducible.

    Degree at most one and explicit assertions settle it immediately;
    otherwise the image group is enumerated and the character norm
    decides.  An enumeration hitting the cap leaves the representation
    uncertified, which callers must treat as possibly reducible.
    """
    if rep.degree <= 1:
        return True
    if rep.irreducible_assertion == ASSERTED_IRREDUCIBLE:
        return True
    if rep.irreducible_assertion == ASSERTED_REDUCIBLE:
        return False
    try:
        group = enumerate_closure(rep, closure_cap)
    except ClosureCapExceeded:
        return False
    norm = sum(abs(complex(np.trace(g))) ** 2 for g in group) / len(group)
    try:
        return snap_integer(norm, tol) == 1
    except SnapFailure:
        return False


class _Analysis:
    """Parity split plus lazily extracted invariants for one representation."""

    def __init__(self, rep: ModularRepresentation, tol: Tolerance | None):
        self.rep = rep
        self.tol = tol
        self.split = parity_split(rep, tol)

    @cached_property
    def even(self) -> EvenInvariants:
        return even_invariants(self.split.even_part, self.tol)

    @cached_property
    def odd(self) -> OddInvariants:
        return odd_invariants(self.split.odd_part, self.tol)

    @cached_property
    def weight1_exact(self) -> bool:
        return certify_irreducible(self.split.odd_part, tol=self.tol)


_cache: "weakref.WeakKeyDictionary[ModularRepresentation, _Analysis]" = weakref.WeakKeyDictionary()


def _analysis_for(rep: ModularRepresentation, tol: Tolerance | None = None) -> _Analysis:
    if tol is not None:
        return _Analysis(rep, tol)
    analysis = _cache.get(rep)
    if analysis is None:
        analysis = _Analysis(rep, None)
        _cache[rep] = analysis
    return analysis


def _even_dim(a: _Analysis, k: int, cusp: bool) -> DimResult:
    if a.split.even_part.degree == 0:
        return DimResult(0, EXACT, "parity-zero")
    if k < 0:
        return DimResult(0, EXACT, "negative-weight")
    inv = a.even
    if cusp:
        if k == 0:
            return DimResult(0, EXACT, "weight-0-cusp")
        if k == 1:
            return DimResult(inv.lambda_minus + inv.gamma(1) + inv.h0, EXACT, "cusp-weight-2")
        return DimResult(inv.lambda_minus + inv.gamma(k), EXACT, "even-cusp-k>1")
    if k == 0:
        return DimResult(inv.h0, EXACT, "weight-0-h0")
    return DimResult(inv.lambda_plus + inv.gamma(k), EXACT, "even-k>0")


def _odd_dim(a: _Analysis, k: int, cusp: bool) -> DimResult:
    if a.split.odd_part.degree == 0:
        return DimResult(0, EXACT, "parity-zero")
    if k < 0:
        return DimResult(0, EXACT, "negative-weight")
    inv = a.odd
    if k > 0:
        lam = inv.dot_lambda_minus if cusp else inv.dot_lambda_plus
        rule = "odd-cusp-k>0" if cusp else "odd-k>0"
        return DimResult(lam + inv.dot_gamma(k), EXACT, rule)
    lam = inv.dot_lambda_minus if cusp else inv.dot_lambda_plus
    if a.weight1_exact:
        return DimResult(max(0, lam), EXACT, "odd-weight-1-irreducible")
    return DimResult(max(0, lam), LOWER_BOUND, "odd-weight-1-lower-bound")


def dim_holomorphic(rep: ModularRepresentation, w: int, tol: Tolerance | None = None) -> DimResult:
    """Dimension of the holomorphic forms of integer weight w."""
    a = _analysis_for(rep, tol)
    if w % 2 == 0:
        return _even_dim(a, w // 2, cusp=False)
    return _odd_dim(a, (w - 1) // 2, cusp=False)


def dim_cusp(rep: ModularRepresentation, w: int, tol: Tolerance | None = None) -> DimResult:
    """Dimension of the cusp forms of integer weight w."""
    a = _analysis_for(rep, tol)
    if w % 2 == 0:
        return _even_dim(a, w // 2, cusp=True)
    return _odd_dim(a, (w - 1) // 2, cusp=True)


def dim_table(rep: ModularRepresentation, w_min: int, w_max: int,
              tol: Tolerance | None = None) -> list[tuple[int, DimResult, DimResult]]:
    """Rows (w, holomorphic, cusp) for every integer weight in the range."""
    if w_min > w_max:
        raise ValueError(f"empty weight range {w_min}..{w_max}")
    _analysis_for(rep, tol)
    return [(w, dim_holomorphic(rep, w, tol), dim_cusp(rep, w, tol))
            for w in range(w_min, w_max + 1)]


def dim_via_exponent_shift(rep: ModularRepresentation, k: int,
                           tol: Tolerance | None = None) -> tuple[int, int]:
    """Second dimension route for an even irreducible representation.

    Returns (holomorphic, cusp) dimensions of weight-k forms for the
    k-th character twist, read directly off the floor traces at shift
    k/12.  Exactness needs irreducibility, which the caller vouches for.
    """
    if parity(rep, tol) != 1:
        raise ParityError("the exponent shift route needs a purely even representation")
    exp = exponent_data(rep, tol)
    holo = max(0, floor_trace(exp, Fraction(k, 12)))
    cusp = max(0, -floor_trace_complement(exp, 1 - Fraction(k, 12)))
    return holo, cusp
