import pytest

from vvmf.catalog import resolve
from vvmf.dimensions import (
    EXACT,
    LOWER_BOUND,
    certify_irreducible,
    dim_cusp,
    dim_holomorphic,
    dim_table,
    dim_via_exponent_shift,
)
from vvmf.invariants import even_invariants, odd_invariants
from vvmf.modrep import (
    ParityError,
    build_kappa_power,
    build_p1_permutation,
    build_rho0,
    contragredient,
    direct_sum,
    parity_split,
    tensor_kappa,
)

RHO0_M = [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1]
RHO0_S = [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]


def classical_level_one(k):
    # Weight 2k holomorphic forms for the trivial character.
    if k < 0:
        return 0
    return k // 6 if k % 6 == 1 else k // 6 + 1


def test_rho0_low_weights():
    rep = build_rho0()
    for w in range(15):
        assert dim_holomorphic(rep, w).value == RHO0_M[w]
        assert dim_cusp(rep, w).value == RHO0_S[w]


def test_rho0_closed_form_to_48():
    rep = build_rho0()
    for k in range(25):
        m = dim_holomorphic(rep, 2 * k)
        s = dim_cusp(rep, 2 * k)
        assert m.value == classical_level_one(k)
        assert s.value == max(0, m.value - 1)
        assert m.status == EXACT and s.status == EXACT


def test_negative_weights_vanish(catalog_reps):
    for rep in catalog_reps.values():
        for w in (-1, -2, -5, -12):
            assert dim_holomorphic(rep, w).value == 0
            assert dim_cusp(rep, w).value == 0


def test_even_cusp_forms_vanish_at_weight_zero(catalog_reps):
    for rep in catalog_reps.values():
        assert dim_cusp(rep, 0).value == 0


def test_kappa_weight_one():
    k1 = build_kappa_power(1)
    m = dim_holomorphic(k1, 1)
    s = dim_cusp(k1, 1)
    assert (m.value, m.status) == (1, EXACT)
    assert (s.value, s.status) == (1, EXACT)
    assert dim_holomorphic(k1, 3).value == 0
    assert dim_holomorphic(contragredient(k1), 1).value == 0


def test_eta_power_oracles():
    assert dim_holomorphic(build_kappa_power(2), 2).value == 1
    assert dim_cusp(build_kappa_power(2), 2).value == 1
    assert dim_holomorphic(build_kappa_power(4), 4).value == 1
    assert dim_cusp(build_kappa_power(4), 4).value == 1


def test_p1_two_table(catalog_reps):
    rep = catalog_reps["p1(2)"]
    assert [dim_holomorphic(rep, w).value for w in range(0, 9, 2)] == [1, 1, 2, 2, 3]
    assert [dim_cusp(rep, w).value for w in range(0, 9, 2)] == [0, 0, 0, 0, 1]
    assert all(dim_holomorphic(rep, w).value == 0 for w in range(1, 9, 2))


def test_weight_one_lower_bound_for_uncertified_sums():
    rep = resolve("kappa^1+kappa^11")
    m = dim_holomorphic(rep, 1)
    s = dim_cusp(rep, 1)
    assert (m.value, m.status) == (0, LOWER_BOUND)
    assert (s.value, s.status) == (0, LOWER_BOUND)
    assert m.rule == "odd-weight-1-lower-bound"

    other = resolve("kappa^1+kappa^3")
    m = dim_holomorphic(other, 1)
    assert (m.value, m.status) == (1, LOWER_BOUND)


def test_weight_one_exact_when_certified(std2):
    twisted = tensor_kappa(std2, 1)
    assert certify_irreducible(twisted)
    m = dim_holomorphic(twisted, 1)
    assert (m.value, m.status) == (0, EXACT)
    assert m.rule == "odd-weight-1-irreducible"


def test_certify_irreducible(std2):
    assert certify_irreducible(build_rho0())
    assert certify_irreducible(build_kappa_power(7))
    assert certify_irreducible(std2)
    assert not certify_irreducible(build_p1_permutation(2))
    assert not certify_irreducible(direct_sum(build_kappa_power(1), build_kappa_power(3)))
    assert not certify_irreducible(std2, closure_cap=3)


def test_rule_tags():
    rep = build_rho0()
    assert dim_holomorphic(rep, 0).rule == "weight-0-h0"
    assert dim_holomorphic(rep, -2).rule == "negative-weight"
    assert dim_cusp(rep, 2).rule == "cusp-weight-2"
    assert dim_holomorphic(rep, 1).rule == "parity-zero"
    assert dim_holomorphic(build_kappa_power(1), 1).rule == "odd-weight-1-irreducible"


def test_cusp_inside_holomorphic(catalog_reps):
    for rep in catalog_reps.values():
        for w in range(-6, 31):
            assert dim_cusp(rep, w).value <= dim_holomorphic(rep, w).value


@pytest.mark.parametrize("pair", [
    ("rho0", "kappa^2"), ("kappa^2", "kappa^10"), ("p1(2)", "kappa^4"),
    ("kappa^1", "p1(2)"), ("p1(3)", "p1(2)*k^2"), ("kappa^5", "kappa^7"),
])
def test_dimension_additivity(pair, catalog_reps):
    a, b = catalog_reps[pair[0]], catalog_reps[pair[1]]
    total = direct_sum(a, b)
    for w in range(-6, 31):
        for dim in (dim_holomorphic, dim_cusp):
            ra, rb, rt = dim(a, w), dim(b, w), dim(total, w)
            if EXACT == ra.status == rb.status == rt.status:
                assert rt.value == ra.value + rb.value, (pair, w)


def test_weight_shift_bound(catalog_reps):
    for name, rep in catalog_reps.items():
        for k in (1, 2, 3):
            twisted = tensor_kappa(rep, k)
            for w in range(-20, 21):
                lhs = dim_holomorphic(rep, w).value
                rhs = dim_cusp(twisted, w + k).value
                assert lhs <= rhs, (name, k, w)


def test_periodicity_by_parity_part(catalog_reps):
    for name, rep in catalog_reps.items():
        split = parity_split(rep)
        for w in range(-4, 31):
            d_part = split.even_part.degree if w % 2 == 0 else split.odd_part.degree
            m = dim_holomorphic(rep, w)
            if m.status == EXACT and m.value > 0:
                assert dim_holomorphic(rep, w + 12).value == m.value + d_part, (name, w)


def test_lambda_cohomology_identities(catalog_reps, std2):
    # lambda_plus = dim M_0 - dim S_2 of the dual; lambda_minus likewise.
    evens = [catalog_reps[n] for n in ("rho0", "kappa^2", "kappa^6", "p1(2)",
                                       "p1(3)", "rho0+kappa^2", "p1(2)*k^2")]
    for rep in evens + [std2]:
        inv = even_invariants(parity_split(rep).even_part)
        dual = contragredient(rep)
        assert inv.lambda_plus == (dim_holomorphic(rep, 0).value
                                   - dim_cusp(dual, 2).value), rep.name
        assert inv.lambda_minus == (dim_cusp(rep, 0).value
                                    - dim_holomorphic(dual, 2).value), rep.name


def test_dot_lambda_cohomology_identities(catalog_reps):
    odds = [catalog_reps[f"kappa^{j}"] for j in (1, 3, 5, 7, 9, 11)]
    for rep in odds:
        inv = odd_invariants(rep)
        dual = contragredient(rep)
        m1, s1 = dim_holomorphic(rep, 1), dim_cusp(rep, 1)
        assert m1.status == EXACT and s1.status == EXACT
        assert inv.dot_lambda_plus == m1.value - dim_cusp(dual, 1).value
        assert inv.dot_lambda_minus == s1.value - dim_holomorphic(dual, 1).value


def test_two_path_consistency(catalog_reps, std2):
    evens = [catalog_reps[n] for n in
             ("rho0", "kappa^2", "kappa^4", "kappa^6", "kappa^8", "kappa^10")]
    for rep in evens + [std2]:
        for k in range(-12, 25):
            twisted = tensor_kappa(rep, k)
            expected = (dim_holomorphic(twisted, k).value, dim_cusp(twisted, k).value)
            assert dim_via_exponent_shift(rep, k) == expected, (rep.name, k)


def test_exponent_shift_needs_even():
    with pytest.raises(ParityError):
        dim_via_exponent_shift(build_kappa_power(1), 4)


def test_dim_table():
    rows = dim_table(build_rho0(), 0, 12)
    assert [w for w, _, _ in rows] == list(range(13))
    assert [m.value for _, m, _ in rows] == RHO0_M[:13]
    assert [s.value for _, _, s in rows] == RHO0_S[:13]
    with pytest.raises(ValueError):
        dim_table(build_rho0(), 5, 4)


def test_kappa_table_periodic_structure():
    rep = build_kappa_power(1)
    rows = dim_table(rep, 1, 13)
    by_w = {w: m.value for w, m, _ in rows}
    assert by_w[1] == 1
    assert by_w[13] == by_w[1] + 1
    assert all(by_w[w] == 0 for w in range(2, 13, 2))
