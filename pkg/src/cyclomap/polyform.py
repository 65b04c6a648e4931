"""Dense polynomials modulo x^q - x and the cyclotomic-mapping expansion.

A mapping of index ell with branch coefficients A_i and branch polynomials
R_i corresponds to the unique reduced polynomial

    P(x) = (1/ell) * sum_{i,j < ell} A_i * zeta^{-j*i} * R_i(x) * x^{j*s}

where zeta = gamma^s. For monomial branches R_i = x^{r_i} with r_i <= s
every exponent r_i + j*s is already below q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclo import BranchPolySpec, CycloSpec, check_ell
from .gf_core import FieldCtx, FieldElem
from .permcheck import MapTable


@dataclass(frozen=True)
class DensePoly:
    """Reduced polynomial over ``ctx``; ``coeffs[d]`` multiplies x^d, len == q."""

    ctx: FieldCtx
    coeffs: tuple[FieldElem, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.q:
            raise ValueError(f"DensePoly needs exactly q={self.ctx.q} coefficients")

    def support(self) -> list[int]:
        return [d for d, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        return format_poly(self)


def zero_poly(ctx: FieldCtx) -> DensePoly:
    return DensePoly(ctx, (0,) * ctx.q)


def monomial(ctx: FieldCtx, d: int, c: FieldElem = 1) -> DensePoly:
    return reduce_mod_xq_x(ctx, [0] * d + [c])


def fold_exponent(q: int, d: int) -> int:
    """Exponent after reduction by x^q = x; keeps 0 at 0 and maps q to 1."""
    if d < q:
        return d
    return (d - 1) % (q - 1) + 1


def reduce_mod_xq_x(ctx: FieldCtx, raw: Sequence[FieldElem]) -> DensePoly:
    out = [0] * ctx.q
    for d, c in enumerate(raw):
        if c:
            e = fold_exponent(ctx.q, d)
            out[e] = ctx.add(out[e], c)
    return DensePoly(ctx, tuple(out))


def _inv_ell(ctx: FieldCtx, ell: int) -> FieldElem:
    # ell | q-1 implies p does not divide ell
    return ctx.inv(ctx.from_int(ell))


def expand(ctx: FieldCtx, spec: CycloSpec) -> DensePoly:
    ell, s = spec.ell, spec.s
    inv_ell = _inv_ell(ctx, ell)
    out = [0] * ctx.q
    for i in range(ell):
        for j in range(ell):
            # A_i * zeta^{-j*i} = gamma^{k_i - s*j*i}
            c = ctx.mul(inv_ell, ctx.pow_gamma(spec.k[i] - s * j * i))
            d = spec.r[i] + j * s
            out[d] = ctx.add(out[d], c)
    return DensePoly(ctx, tuple(out))


def expand_branches(ctx: FieldCtx, bspec: BranchPolySpec) -> DensePoly:
    bspec.validate(ctx)
    ell = bspec.ell
    s = check_ell(ctx.q, ell)
    inv_ell = _inv_ell(ctx, ell)
    zinv = ctx.inv(ctx.pow_gamma(s))
    raw = [0] * (ctx.q + max(len(R) for R in bspec.branches) + ell * s)
    for i, (A_i, R) in enumerate(zip(bspec.A, bspec.branches)):
        for j in range(ell):
            c = ctx.mul(inv_ell, ctx.mul(A_i, ctx.pow(zinv, j * i)))
            if c == 0:
                continue
            for d, Rd in enumerate(R):
                if Rd:
                    raw[d + j * s] = ctx.add(raw[d + j * s], ctx.mul(c, Rd))
    return reduce_mod_xq_x(ctx, raw)


def evaluate(poly: DensePoly, x: FieldElem) -> FieldElem:
    """Horner's rule, stepping over runs of zero coefficients with one power."""
    ctx = poly.ctx
    acc = 0
    prev = None
    for d in range(ctx.q - 1, -1, -1):
        c = poly.coeffs[d]
        if not c:
            continue
        if prev is not None:
            acc = ctx.mul(acc, ctx.pow(x, prev - d))
        acc = ctx.add(acc, c)
        prev = d
    if prev is None:
        return 0
    return ctx.mul(acc, ctx.pow(x, prev))


def value_table(poly: DensePoly) -> MapTable:
    return tuple(evaluate(poly, x) for x in range(poly.ctx.q))


def compose_tables(f: DensePoly, g: DensePoly) -> MapTable:
    """Table of x -> f(g(x)) over every element of the field."""
    return tuple(evaluate(f, evaluate(g, x)) for x in range(f.ctx.q))


def interpolate(ctx: FieldCtx, table: Sequence[FieldElem]) -> DensePoly:
    """Lagrange interpolation through all q points.

    With M(x) = x^q - x = prod (x - a) and M'(a) = -1, the basis polynomial at
    a is -M(x)/(x - a); each quotient comes from one synthetic division.
    """
    q = ctx.q
    if len(table) != q:
        raise ValueError(f"table must have q={q} entries")
    minus_one = ctx.neg(1)
    # M(x) coefficients, little-endian
    M = [0] * (q + 1)
    M[q] = 1
    M[1] = ctx.add(M[1], minus_one)
    out = [0] * q
    for a, fa in enumerate(table):
        if fa == 0:
            continue
        scale = ctx.mul(fa, minus_one)
        b = M[q]
        for d in range(q - 1, -1, -1):
            # b is the quotient coefficient of x^d
            out[d] = ctx.add(out[d], ctx.mul(scale, b))
            b = ctx.add(M[d], ctx.mul(a, b))
        # b now holds the remainder M(a), which must vanish
        assert b == 0
    return DensePoly(ctx, tuple(out))


def format_poly(poly: DensePoly, symbol: str = "a") -> str:
    """Render as e.g. ``(2a + 1)x^19 + 3x^13 + (3a + 4)x^7 + 3x``."""
    ctx = poly.ctx
    terms = []
    for d in range(ctx.q - 1, -1, -1):
        c = poly.coeffs[d]
        if not c:
            continue
        ctext = ctx.format_elem(c, symbol)
        if d == 0:
            terms.append(ctext)
            continue
        if " + " in ctext:
            ctext = f"({ctext})"
        mono = "x" if d == 1 else f"x^{d}"
        terms.append(mono if c == 1 else ctext + mono)
    return " + ".join(terms) if terms else "0"
