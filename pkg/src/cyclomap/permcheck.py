"""Permutation, inverse, involution and fixed-point analysis for monomial-branch
cyclotomic mappings, plus brute-force table oracles used to check them.

The closed forms only use modular arithmetic on the (r, k) vectors. A spec is a
permutation iff every r_i is coprime to s and i -> (k_i + i*r_i) mod ell is a
bijection phi of the coset labels. Its inverse is again such a mapping with

    rr[phi(i)] = g_i = r_i^{-1} mod s
    kk[phi(i)] = (-k_i*g_i + i*(1 - r_i*g_i)) mod (q-1)

Mapping tables are tuples indexed by the field element itself:
``table[x]`` is the image of element ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .cyclo import CycloSpec, apply_map, check_ell, image_coset, zeta
from .errors import EvenCharacteristic, NotAPermutation, NotBijective
from .gf_core import FieldCtx, FieldElem

MapTable = tuple[FieldElem, ...]


@dataclass(frozen=True)
class InverseData:
    phi: tuple[int, ...]
    g: tuple[int, ...]
    # exact Bezout cofactors: r_i*g_i + s*t_i == 1
    t: tuple[int, ...]
    rr: tuple[int, ...]
    kk: tuple[int, ...]


def phi_map(spec: CycloSpec) -> tuple[int, ...]:
    return tuple(image_coset(spec, i) for i in range(spec.ell))


def is_permutation(spec: CycloSpec) -> bool:
    s = spec.s
    if any(gcd(ri, s) != 1 for ri in spec.r):
        return False
    return len(set(phi_map(spec))) == spec.ell


def inv_mod(r: int, s: int) -> int:
    """r^{-1} mod s canonical in [1, s]; for s == 1 this is 1."""
    if s == 1:
        return 1
    return pow(r, -1, s)


def inverse_data(spec: CycloSpec) -> InverseData:
    if not is_permutation(spec):
        raise NotAPermutation(f"{spec} is not a permutation")
    ell, s, n = spec.ell, spec.s, spec.q - 1
    phi = phi_map(spec)
    g = tuple(inv_mod(ri, s) for ri in spec.r)
    t = tuple((1 - ri * gi) // s for ri, gi in zip(spec.r, g))
    rr = [0] * ell
    kk = [0] * ell
    for i in range(ell):
        rr[phi[i]] = g[i]
        kk[phi[i]] = (-spec.k[i] * g[i] + i * (1 - spec.r[i] * g[i])) % n
    return InverseData(phi, g, t, tuple(rr), tuple(kk))


def invert(spec: CycloSpec) -> CycloSpec:
    """Closed-form compositional inverse; raises NotAPermutation."""
    data = inverse_data(spec)
    return CycloSpec(spec.q, spec.ell, data.rr, data.kk)


def is_involution(spec: CycloSpec) -> bool:
    """True iff the spec is a permutation equal to its own inverse."""
    if not is_permutation(spec):
        return False
    s, n = spec.s, spec.q - 1
    r, k = spec.r, spec.k
    for i, j in enumerate(phi_map(spec)):
        gi = inv_mod(r[i], s)
        if r[j] != gi:
            return False
        if k[j] != (-k[i] * gi + i * (1 - r[i] * gi)) % n:
            return False
    return True


def involution_conditions(ctx: FieldCtx, spec: CycloSpec) -> tuple[bool, bool, bool, bool]:
    """The four involution conditions checked with field elements.

    (i) Bezout cofactors exist, (ii) phi is a bijection,
    (iii) r_{phi(i)} = r_i^{-1} mod s, (iv) A_{phi(i)} = A_i^{-g_i} * zeta^{i*t_i}.
    Conditions (iii) and (iv) are only meaningful when (i) holds; they are
    reported False otherwise.
    """
    s = spec.s
    cond1 = all(gcd(ri, s) == 1 for ri in spec.r)
    phi = phi_map(spec)
    cond2 = len(set(phi)) == spec.ell
    if not cond1:
        return cond1, cond2, False, False
    A = spec.A(ctx)
    z = zeta(ctx, spec.ell)
    cond3 = cond4 = True
    for i, j in enumerate(phi):
        gi = inv_mod(spec.r[i], s)
        ti = (1 - spec.r[i] * gi) // s
        if spec.r[j] % s != gi % s:
            cond3 = False
        if A[j] != ctx.mul(ctx.pow(A[i], -gi), ctx.pow(z, i * ti)):
            cond4 = False
    return cond1, cond2, cond3, cond4


def index2_involution(ctx: FieldCtx, r0: int, r1: int) -> bool:
    """Index-2 involution test with A_0 = A_1 = 1: s | r0^2 - 1 and 2s | r1^2 - 1."""
    if ctx.p == 2:
        raise EvenCharacteristic("the index-2 shortcut needs q odd")
    s = check_ell(ctx.q, 2)
    return (r0 * r0 - 1) % s == 0 and (r1 * r1 - 1) % (2 * s) == 0


def count_fixed_points(spec: CycloSpec) -> int:
    """Number of nonzero fixed points (0 is always fixed and not counted).

    Only cosets with phi(i) = i can hold fixed points. For such i write
    k_i + i*(r_i - 1) = ell*t (mod q-1); the fixed points in C_i are then the
    j in [0, s) with t + j*(r_i - 1) = 0 (mod s), which has gcd(r_i - 1, s)
    solutions when that gcd divides t and none otherwise.
    """
    ell, s, n = spec.ell, spec.s, spec.q - 1
    total = 0
    for i in range(ell):
        c = (spec.k[i] + i * (spec.r[i] - 1)) % n
        if c % ell:
            continue
        t = c // ell
        d = gcd(spec.r[i] - 1, s)
        if t % d == 0:
            total += d
    return total


# -- inverse coefficients in product form ------------------------------------


def b_coefficient(ctx: FieldCtx, spec: CycloSpec, k: int, j: int) -> FieldElem:
    """B_k * zeta^{-jk} from the inverse vectors: gamma^{kk_k - s*j*k}."""
    data = inverse_data(spec)
    return ctx.pow_gamma(data.kk[k] - spec.s * j * k)


def product_form_coefficient(ctx: FieldCtx, spec: CycloSpec, k: int, j: int) -> FieldElem:
    """A_i^{-(r'_k + j*s)} * zeta^{-i*(t'_k + j*r_i)} where phi(i) = k.

    Here t'_k = (r_i*r'_k - 1)/s, the cofactor with the sign convention
    r_i*r'_k - s*t'_k = 1. This is the coefficient of x^{r'_k + j*s} in the
    inverse before the 1/ell normalization.
    """
    data = inverse_data(spec)
    i = data.phi.index(k)
    s = spec.s
    rk = data.rr[k]
    tk = (spec.r[i] * rk - 1) // s
    A_i = ctx.pow_gamma(spec.k[i])
    z = zeta(ctx, spec.ell)
    return ctx.mul(ctx.pow(A_i, -(rk + j * s)), ctx.pow(z, -i * (tk + j * spec.r[i])))


# -- brute-force oracles ------------------------------------------------------


def oracle_eval_table(ctx: FieldCtx, spec: CycloSpec) -> MapTable:
    return tuple(apply_map(ctx, spec, x) for x in range(ctx.q))


def oracle_is_permutation(table: Sequence[FieldElem]) -> bool:
    return len(set(table)) == len(table)


def oracle_invert(table: Sequence[FieldElem]) -> MapTable:
    if not oracle_is_permutation(table):
        raise NotBijective("table has a collision")
    out = [0] * len(table)
    for x, y in enumerate(table):
        out[y] = x
    return tuple(out)


def oracle_is_involution(table: Sequence[FieldElem]) -> bool:
    return all(table[y] == x for x, y in enumerate(table))


def oracle_fixed_points(table: Sequence[FieldElem]) -> int:
    return sum(1 for x, y in enumerate(table) if x != 0 and x == y)


def compose(f: Sequence[FieldElem], g: Sequence[FieldElem]) -> MapTable:
    """Table of x -> f(g(x))."""
    return tuple(f[y] for y in g)


def is_identity(table: Sequence[FieldElem]) -> bool:
    return all(x == y for x, y in enumerate(table))
