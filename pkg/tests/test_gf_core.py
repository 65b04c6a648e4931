import pickle
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclomap.errors import (
    DivisionByZero,
    FieldTooLarge,
    GammaNotPrimitive,
    LogOfZero,
    NonMonicModulus,
    NotPrime,
    SpecParseError,
)
from cyclomap.gf_core import build_field, load_field_file, parse_field_line, preset, resolve_field


def schoolbook_mul(x, y, modulus, p):
    """Independent reference: multiply coefficient lists, then long-divide by the modulus."""
    prod = [0] * (len(x) + len(y))
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            prod[i + j] += a * b
    m = len(modulus) - 1
    prod = [c % p for c in prod]
    while len(prod) > m:
        lead = prod.pop()
        shift = len(prod) - m
        for i in range(m):
            prod[shift + i] = (prod[shift + i] - lead * modulus[i]) % p
    return tuple(prod + [0] * (m - len(prod)))


def test_presets():
    assert preset("F25").q == 25
    assert preset("F64").q == 64
    assert preset("F9").q == 9
    assert preset("F3").q == 3
    with pytest.raises(KeyError):
        preset("F7")


@pytest.mark.parametrize("name", ["F3", "F9", "F25", "F64"])
def test_table_invariants(name):
    F = preset(name)
    assert len(F.exp_table) == F.q - 1
    assert len(set(F.exp_table)) == F.q - 1
    assert 0 not in F.exp_table
    assert F.exp_table[0] == 1
    assert F.mul(F.exp_table[-1], F.gamma) == 1
    for e, x in enumerate(F.exp_table):
        assert F.log_table[x] == e


def test_a_squared_in_f25(F25):
    a = F25.gamma
    # a^2 = -4a - 2 = a + 3 over F_5
    assert F25.coeffs(F25.mul(a, a)) == (3, 1)
    assert F25.format_elem(F25.mul(a, a)) == "a + 3"


def test_pow_gamma_examples(F25):
    assert F25.pow_gamma(0) == 1
    assert F25.pow_gamma(24) == 1
    assert F25.pow_gamma(1) == F25.elem((0, 1))
    assert F25.pow_gamma(-1) == F25.pow_gamma(23)


def test_dlog_examples(F25):
    assert F25.dlog(1) == 0
    assert F25.dlog(F25.gamma) == 1
    minus_one = F25.elem((4,))
    assert F25.dlog(minus_one) == 12
    half = F25.pow_gamma(12)
    assert half == minus_one and F25.mul(half, half) == 1
    with pytest.raises(LogOfZero):
        F25.dlog(0)


def test_format_elem(F25, F64):
    assert F25.format_elem(F25.elem((1, 2))) == "2a + 1"
    assert F25.format_elem(0) == "0"
    assert F25.format_elem(F25.elem((3, 0))) == "3"
    assert F25.format_elem(F25.elem((0, 1))) == "a"
    assert F25.format_elem(F25.elem((0, 3))) == "3a"
    assert F64.format_elem(F64.elem((0, 1, 0, 0, 0, 1))) == "a^5 + a"


@pytest.mark.parametrize("name", ["F9", "F25"])
def test_additive_and_multiplicative_inverses(name):
    F = preset(name)
    for x in range(F.q):
        assert F.add(x, F.neg(x)) == 0
        if x:
            assert F.mul(x, F.inv(x)) == 1
    with pytest.raises(DivisionByZero):
        F.inv(0)


@pytest.mark.parametrize("name", ["F9", "F25", "F64"])
def test_table_mul_matches_schoolbook(name):
    F = preset(name)
    for x, y in product(range(F.q), repeat=2):
        assert F.coeffs(F.mul(x, y)) == schoolbook_mul(F.coeffs(x), F.coeffs(y), F.modulus, F.p)


@pytest.mark.parametrize("name", ["F9", "F25"])
def test_ring_axioms_exhaustive(name):
    F = preset(name)
    els = range(F.q)
    for x, y, z in product(els, repeat=3):
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
        assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
        assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))


def test_digit_addition_matches_table(F25):
    for x, y in product(range(25), repeat=2):
        assert F25._add_digits(x, y) == F25.add(x, y)


@given(st.integers(min_value=-10**6, max_value=10**6))
def test_dlog_pow_roundtrip(e):
    F = preset("F25")
    assert F.dlog(F.pow_gamma(e)) == e % 24


@given(st.integers(1, 63), st.integers(1, 63))
def test_dlog_is_homomorphism(x, y):
    F = preset("F64")
    assert F.dlog(F.mul(x, y)) == (F.dlog(x) + F.dlog(y)) % 63


def test_build_errors():
    with pytest.raises(NotPrime):
        build_field(4, 2, (1, 1, 1), (0, 1))
    with pytest.raises(NonMonicModulus):
        build_field(5, 2, (2, 4, 3), (0, 1))
    with pytest.raises(NonMonicModulus):
        build_field(5, 2, (2, 1), (0, 1))
    with pytest.raises(GammaNotPrimitive):
        build_field(5, 2, (2, 4, 1), (1,))
    with pytest.raises(GammaNotPrimitive):
        build_field(5, 2, (2, 4, 1), (0, 0))
    with pytest.raises(FieldTooLarge):
        build_field(2, 6, (1, 1, 0, 1, 1, 0, 1), (0, 1), max_q=32)


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x - 2)(x - 3) over F_5
    with pytest.raises(GammaNotPrimitive):
        build_field(5, 2, (1, 0, 1), (0, 1))


def test_non_primitive_gamma(F25):
    a2 = F25.coeffs(F25.mul(F25.gamma, F25.gamma))
    with pytest.raises(GammaNotPrimitive):
        build_field(5, 2, (2, 4, 1), a2)


def test_field_line_and_file(tmp_path):
    assert parse_field_line("5 2 2,4,1 0,1") == preset("F25")
    path = tmp_path / "fields.txt"
    path.write_text("# presets\n5 2 2,4,1 0,1\n\n2 6 1,1,0,1,1,0,1 0,1  # F64\n")
    assert load_field_file(path) == [preset("F25"), preset("F64")]
    assert resolve_field(str(path)) == preset("F25")
    assert resolve_field("F64") == preset("F64")
    assert resolve_field("5 2 2,4,1 0,1") == preset("F25")
    with pytest.raises(SpecParseError):
        parse_field_line("5 2 2,4,1")
    with pytest.raises(SpecParseError):
        parse_field_line("5 2 2,x,1 0,1")
    with pytest.raises(SpecParseError):
        resolve_field("no-such-field")


def test_pickle_roundtrip(F25):
    G = pickle.loads(pickle.dumps(F25))
    assert G == F25 and G.exp_table == F25.exp_table
