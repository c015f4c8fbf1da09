"""Generator weight profiles, Hilbert series and duality reports.

The graded modules of holomorphic and cusp forms are free of rank d
over the ring generated by the two classical Eisenstein series, so each
module is described completely by the multiset of weights of its free
generators.  Those weights live in 0..12 (even parts on even weights,
odd parts on odd ones) and determine the Hilbert series with the fixed
denominator (1-z^4)(1-z^6).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimensions import EXACT, _analysis_for, dim_cusp, dim_holomorphic
from .linalg import Tolerance
from .modrep import ModularRepresentation, contragredient

HOLOMORPHIC = "holomorphic"
CUSP = "cusp"

DENOMINATOR = "(1-z^4)(1-z^6)"


class Weight1Indeterminate(ValueError):
    """Generator counts need weight-one dimensions the theory cannot pin down."""


@dataclass(frozen=True)
class GeneratorProfile:
    """Weights of the free module generators, as weight -> count."""

    kind: str
    counts: dict[int, int]
    degree: int

    def __post_init__(self):
        assert self.kind in (HOLOMORPHIC, CUSP)
        for w, c in self.counts.items():
            if not (0 <= w <= 12 and c >= 0):
                raise ValueError(f"generator count {c} at weight {w} is out of range")
        if sum(self.counts.values()) != self.degree:
            raise ValueError("generator counts must total the degree")


@dataclass(frozen=True)
class HilbertSeries:
    """Rational generating function of the dimension sequence."""

    numerator: tuple[int, ...]
    denominator: str = DENOMINATOR

    def coefficient(self, w: int) -> int:
        if 0 <= w < len(self.numerator):
            return self.numerator[w]
        return 0

    def expand(self, max_weight: int) -> list[int]:
        """Taylor coefficients of numerator/denominator up to max_weight."""
        dims = [0] * (max_weight + 1)
        for u, c in enumerate(self.numerator):
            if c == 0 or u > max_weight:
                continue
            for a in range((max_weight - u) // 4 + 1):
                for b in range((max_weight - u - 4 * a) // 6 + 1):
                    dims[u + 4 * a + 6 * b] += c
        return dims


def generator_profile(rep: ModularRepresentation, kind: str = HOLOMORPHIC,
                      tol: Tolerance | None = None) -> GeneratorProfile:
    """Count free generators by weight.

    The counts are integer combinations of the cached invariants; the
    odd table additionally needs exact weight-one dimensions and raises
    when those are only lower bounds.
    """
    if kind not in (HOLOMORPHIC, CUSP):
        raise ValueError(f"kind must be {HOLOMORPHIC!r} or {CUSP!r}")
    a = _analysis_for(rep, tol)
    counts: dict[int, int] = {}

    def put(table):
        for w, c in table.items():
            if c:
                counts[w] = counts.get(w, 0) + c

    if a.split.even_part.degree:
        inv = a.even
        g, lp, lm, h0 = inv.gamma, inv.lambda_plus, inv.lambda_minus, inv.h0
        if kind == HOLOMORPHIC:
            put({0: h0, 2: g(1) + lp, 4: g(2) + lp - h0, 6: g(3) - g(1) - h0,
                 8: g(6) - g(5) - lp, 10: h0 - lp})
        else:
            put({2: g(1) + lm + h0, 4: g(2) + lm, 6: g(3) - g(1) - h0,
                 8: g(6) - g(5) - lm - h0, 10: -lm, 12: h0})
    if a.split.odd_part.degree:
        m1 = dim_holomorphic(rep, 1, tol)
        s1 = dim_cusp(rep, 1, tol)
        if m1.status != EXACT or s1.status != EXACT:
            raise Weight1Indeterminate(
                f"{rep.name}: odd part is not certified irreducible, weight-one "
                "dimensions are only lower bounds")
        inv = a.odd
        g, lp, lm = inv.dot_gamma, inv.dot_lambda_plus, inv.dot_lambda_minus
        if kind == HOLOMORPHIC:
            put({1: m1.value, 3: g(1) + lp, 5: g(2) + lp - m1.value,
                 7: g(3) - g(1) - m1.value, 9: g(6) - g(5) - lp, 11: m1.value - lp})
        else:
            put({1: s1.value, 3: g(1) + lm, 5: g(2) + lm - s1.value,
                 7: g(3) - g(1) - s1.value, 9: g(6) - g(5) - lm, 11: s1.value - lm})
    return GeneratorProfile(kind, counts, rep.degree)


def hilbert_series(rep: ModularRepresentation, kind: str = HOLOMORPHIC,
                   tol: Tolerance | None = None) -> HilbertSeries:
    """Numerator polynomial of the dimension generating function."""
    profile = generator_profile(rep, kind, tol)
    top = max(profile.counts, default=0)
    return HilbertSeries(tuple(profile.counts.get(w, 0) for w in range(top + 1)))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    status: str  # "pass", "fail" or "skipped"
    counterexamples: tuple = ()
    note: str = ""


@dataclass(frozen=True)
class DualityReport:
    rep_name: str
    dual_name: str
    n_max: int
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def _sum_check(name, rep, dual, n_max, part_degree, weight_pair, tol) -> IdentityCheck:
    if part_degree == 0:
        return IdentityCheck(name, "skipped", note="no part of this parity")
    bad = []
    for n in range(1, n_max + 1):
        for k in range(1, 6 * n):
            w_holo, w_cusp = weight_pair(n, k)
            total = (dim_holomorphic(rep, w_holo, tol).value
                     + dim_cusp(dual, w_cusp, tol).value)
            if total != n * part_degree:
                bad.append((n, k, total))
    if bad:
        return IdentityCheck(name, "fail", tuple(bad))
    return IdentityCheck(name, "pass")


def duality_report(rep: ModularRepresentation, n_max: int = 3,
                   tol: Tolerance | None = None) -> DualityReport:
    """Verify the dimension and generator identities tying rep to its dual.

    The pointwise checks sum a holomorphic dimension of rep and a cusp
    dimension of the dual at complementary weights; both only ever see
    weights where every status is exact.  The generator mirror needs
    exact weight-one data and is skipped, not failed, without it.
    """
    dual = contragredient(rep)
    a = _analysis_for(rep, tol)
    d_even = a.split.even_part.degree
    d_odd = a.split.odd_part.degree
    checks = [
        _sum_check("even-weight-sum", rep, dual, n_max, d_even,
                   lambda n, k: (2 * k, 12 * n + 2 - 2 * k), tol),
        _sum_check("odd-weight-sum", rep, dual, n_max, d_odd,
                   lambda n, k: (2 * k + 1, 12 * n + 1 - 2 * k), tol),
    ]
    try:
        mirrors = (
            ("generator-mirror-holo", hilbert_series(rep, HOLOMORPHIC, tol),
             hilbert_series(dual, CUSP, tol)),
            ("generator-mirror-cusp", hilbert_series(rep, CUSP, tol),
             hilbert_series(dual, HOLOMORPHIC, tol)),
        )
    except Weight1Indeterminate as err:
        checks.append(IdentityCheck("generator-mirror-holo", "skipped", note=str(err)))
        checks.append(IdentityCheck("generator-mirror-cusp", "skipped", note=str(err)))
    else:
        for name, series_rep, series_dual in mirrors:
            bad = tuple(w for w in range(13)
                        if series_dual.coefficient(w) != series_rep.coefficient(12 - w))
            checks.append(IdentityCheck(name, "fail" if bad else "pass", bad))
    return DualityReport(rep.name, dual.name, n_max, tuple(checks))
