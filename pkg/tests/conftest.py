import pytest

from vvmf.catalog import resolve
from vvmf.modrep import ModularRepresentation, validate

# The sweep targets: every built-in atom that the battery tests exercise,
# plus two direct sums and two character twists.
CATALOG_EXPRESSIONS = (
    ["rho0"]
    + [f"kappa^{j}" for j in range(1, 12)]
    + ["p1(2)", "p1(3)", "rho0+kappa^2", "kappa^1+kappa^2", "p1(2)*k^2", "p1(3)*k^3"]
)


@pytest.fixture(scope="session")
def catalog_reps():
    reps = {}
    for expr in CATALOG_EXPRESSIONS:
        rep = resolve(expr)
        validate(rep)
        reps[expr] = rep
    return reps


@pytest.fixture(scope="session")
def std2():
    # Two-dimensional representation factoring through the symmetric group
    # on three letters; even, irreducible, t of order 2.
    rep = ModularRepresentation([[-1, 1], [0, 1]], [[1, 0], [1, -1]], "std2")
    validate(rep)
    return rep
