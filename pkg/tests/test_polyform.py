from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomap.cyclo import BranchPolySpec, CycloSpec, apply_map
from cyclomap.gf_core import preset
from cyclomap.permcheck import invert, is_identity, is_permutation, oracle_eval_table
from cyclomap.polyform import (
    DensePoly,
    compose_tables,
    evaluate,
    expand,
    expand_branches,
    fold_exponent,
    format_poly,
    interpolate,
    monomial,
    reduce_mod_xq_x,
    value_table,
    zero_poly,
)
from conftest import FIXTURES


def spec25(r, k):
    return CycloSpec(25, len(r), tuple(r), tuple(k))


def test_expand_examples(F25):
    assert format_poly(expand(F25, spec25((1, 7), (0, 0)))) == "2x^19 + 3x^13 + 3x^7 + 3x"
    assert format_poly(expand(F25, CycloSpec(25, 1, (1,), (0,)))) == "x"
    assert format_poly(expand(F25, spec25((1, 7), (0, 2)))) == "(2a + 1)x^19 + 3x^13 + (3a + 4)x^7 + 3x"


def test_expand_f64_example(F64):
    spec = CycloSpec(64, 21, (1,) * 21, (0,) * 19 + (1, 62))
    f = expand(F64, spec)
    expected = (FIXTURES / "f64_ell21_f.txt").read_text().strip()
    assert format_poly(f) == expected
    assert len(f.support()) == 21
    assert format_poly(f).startswith("(a^5 + a)x^61 + (a^5 + a^4 + a^3 + 1)x^58 + ")


def test_expansion_support_bound(F25):
    # exponents r_i + j*s: at most ell^2 terms, all below q
    spec = CycloSpec(25, 4, (1, 5, 3, 1), (2, 9, 0, 17))
    sup = expand(F25, spec).support()
    assert len(sup) <= 16
    assert sup and max(sup) < 25
    allowed = {ri + j * 6 for ri in spec.r for j in range(4)}
    assert set(sup) <= allowed


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([1, 2, 3, 4, 6, 8, 12, 24]), st.data())
def test_expand_agrees_with_apply_map(ell, data):
    F = preset("F25")
    s = 24 // ell
    r = tuple(data.draw(st.lists(st.integers(1, s), min_size=ell, max_size=ell)))
    k = tuple(data.draw(st.lists(st.integers(0, 23), min_size=ell, max_size=ell)))
    spec = CycloSpec(25, ell, r, k)
    assert value_table(expand(F, spec)) == oracle_eval_table(F, spec)


def test_expand_exhaustive_pointwise_example(F25):
    spec = spec25((1, 7), (0, 2))
    f = expand(F25, spec)
    for x in range(25):
        assert evaluate(f, x) == apply_map(F25, spec, x)
    assert evaluate(expand(F25, spec25((1, 7), (0, 0))), 0) == 0


def test_expand_branches_monomial_matches(F25):
    for r, k in [((1, 7), (0, 2)), ((5, 11), (3, 4)), ((12, 12), (0, 0))]:
        spec = spec25(r, k)
        branches = tuple(tuple([0] * ri + [1]) for ri in r)
        bspec = BranchPolySpec(2, spec.A(F25), branches)
        assert expand_branches(F25, bspec) == expand(F25, spec)


def test_expand_branches_single_coset(F25):
    R = tuple([3, 0, 1] + [0] * 27 + [1])  # x^30 + x^2 + 3
    got = expand_branches(F25, BranchPolySpec(1, (1,), (R,)))
    assert got == reduce_mod_xq_x(F25, R)
    assert format_poly(got) == "x^6 + x^2 + 3"


def test_expand_branches_general_pointwise(F25):
    # x in C_i -> A_i * R_i(x) with non-monomial R_i
    R0 = (1, 1)  # x + 1
    R1 = (0, 2, 0, 1)  # x^3 + 2x
    A = (F25.pow_gamma(5), F25.pow_gamma(11))
    f = expand_branches(F25, BranchPolySpec(2, A, (R0, R1)))
    for x in range(1, 25):
        i = F25.dlog(x) % 2
        R = (R0, R1)[i]
        val = 0
        for d, c in enumerate(R):
            val = F25.add(val, F25.mul(c, F25.pow(x, d)))
        assert evaluate(f, x) == F25.mul(A[i], val)


def test_reduce_examples(F25):
    assert reduce_mod_xq_x(F25, [0] * 25 + [1]) == monomial(F25, 1)
    assert reduce_mod_xq_x(F25, [0] * 49 + [1]) == monomial(F25, 1)
    assert reduce_mod_xq_x(F25, [3]) == DensePoly(F25, (3,) + (0,) * 24)
    assert fold_exponent(25, 0) == 0
    assert fold_exponent(25, 24) == 24
    assert fold_exponent(25, 25) == 1
    assert fold_exponent(25, 48) == 24
    assert fold_exponent(25, 49) == 1


def test_reduce_preserves_function(F25):
    raw = [F25.pow_gamma(d) if d % 7 == 3 else 0 for d in range(80)]
    p = reduce_mod_xq_x(F25, raw)
    for x in range(25):
        direct = 0
        for d, c in enumerate(raw):
            if c:
                direct = F25.add(direct, F25.mul(c, F25.pow(x, d)))
        assert evaluate(p, x) == direct


def test_evaluate_identity_and_zero(F25):
    ident = expand(F25, CycloSpec(25, 1, (1,), (0,)))
    assert all(evaluate(ident, x) == x for x in range(25))
    assert all(evaluate(zero_poly(F25), x) == 0 for x in range(25))
    const = DensePoly(F25, (7,) + (0,) * 24)
    assert evaluate(const, 0) == 7


def test_compose_identity(F25):
    ident = monomial(F25, 1)
    assert compose_tables(ident, ident) == tuple(range(25))


def test_compose_with_inverse_all_ell2_pps(F25):
    for r in product([1, 5, 7, 11], repeat=2):
        for k in product(range(24), repeat=2):
            spec = spec25(r, k)
            if not is_permutation(spec):
                continue
            f = expand(F25, spec)
            g = expand(F25, invert(spec))
            assert is_identity(compose_tables(f, g)) and is_identity(compose_tables(g, f))


def test_f64_example_is_involution(F64):
    spec = CycloSpec(64, 21, (1,) * 21, (0,) * 19 + (1, 62))
    f = expand(F64, spec)
    assert is_identity(compose_tables(f, f))


def test_interpolate_examples(F25):
    assert interpolate(F25, tuple(range(25))) == monomial(F25, 1)
    assert interpolate(F25, (0,) * 25) == zero_poly(F25)
    spec = spec25((1, 7), (0, 2))
    p = interpolate(F25, oracle_eval_table(F25, spec))
    assert format_poly(p) == "(2a + 1)x^19 + 3x^13 + (3a + 4)x^7 + 3x"
    with pytest.raises(ValueError):
        interpolate(F25, (0,) * 24)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=9, max_size=9))
def test_interpolate_roundtrip_f9(table):
    F = preset("F9")
    p = interpolate(F, table)
    assert value_table(p) == tuple(table)


def test_interpolate_inverts_expand_f64(F64):
    spec = CycloSpec(64, 3, (5, 7, 19), (4, 0, 40))
    f = expand(F64, spec)
    assert interpolate(F64, value_table(f)) == f


def test_format_poly(F25):
    assert format_poly(zero_poly(F25)) == "0"
    assert format_poly(monomial(F25, 1)) == "x"
    assert format_poly(monomial(F25, 3, F25.elem((1, 2)))) == "(2a + 1)x^3"
    assert format_poly(monomial(F25, 0, F25.elem((1, 2)))) == "2a + 1"
    assert format_poly(monomial(F25, 2, F25.elem((0, 2)))) == "2ax^2"
    assert str(monomial(F25, 4)) == "x^4"


def test_dense_poly_length_checked(F25):
    with pytest.raises(ValueError):
        DensePoly(F25, (0,) * 24)
