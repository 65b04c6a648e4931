"""Enumeration of canonical cyclotomic-mapping permutations, inverses, involutions.

Records come out in lexicographic order of (ell, r, k). For each index the
r-vectors range over units of Z/s in [1, s] and the k-vectors over
[0, q-2]^ell, with the k-loop pruned as soon as two coset images collide.

Index lists follow one of two counting conventions:

``maximal`` (default)
    An index that properly divides another listed index is dropped: every
    mapping of index d is also a mapping of any multiple of d, so counting
    "index at most L" is done at the largest indices only. Over F_25 with
    indices {1, 2} this gives 4608 permutations and 624 involutions.
``each``
    Every listed index is enumerated on its own, so a mapping expressible at
    several indices is reported once per index (4800 over F_25, {1, 2}).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, gcd
from typing import Iterable, Iterator, Sequence

from .cyclo import CycloSpec, check_ell, divisors
from .errors import CountTooLarge, LengthMismatch
from .gf_core import FieldCtx
from .permcheck import count_fixed_points, inv_mod, invert
from .polyform import expand, format_poly

CONVENTIONS = ("maximal", "each")
# beyond this many cosets the bitmask count is refused unless pair weights are uniform
MAX_DP_INDEX = 30


@dataclass(frozen=True)
class SearchQuery:
    ell_list: tuple[int, ...]
    involutions_only: bool = False
    max_fixed_points: int | None = None
    emit_polys: bool = False
    # one value (broadcast) or a full-length vector; lengths must match ell
    fix_r: tuple[int, ...] | None = None
    convention: str = "maximal"


@dataclass(frozen=True)
class PermRecord:
    spec: CycloSpec
    inverse: CycloSpec
    involution: bool
    nonzero_fixed_points: int
    poly_text: str | None = None
    inverse_poly_text: str | None = None


def effective_indices(q: int, ell_list: Iterable[int], convention: str = "maximal") -> list[int]:
    """Validated, sorted indices actually enumerated under ``convention``."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    ells = sorted(set(ell_list))
    for ell in ells:
        check_ell(q, ell)
    if convention == "maximal":
        ells = [d for d in ells if not any(e != d and e % d == 0 for e in ells)]
    return ells


def indices_up_to(q: int, ell_max: int) -> list[int]:
    return [d for d in divisors(q - 1) if d <= ell_max]


def allowed_r(q: int, ell: int, fix_r: Sequence[int] | None = None) -> list[list[int]]:
    """Per-position candidate exponents: units of Z/s in [1, s], optionally pinned."""
    s = check_ell(q, ell)
    units = [r for r in range(1, s + 1) if gcd(r, s) == 1]
    if fix_r is None:
        return [units] * ell
    if len(fix_r) == 1:
        fix_r = tuple(fix_r) * ell
    if len(fix_r) != ell:
        raise LengthMismatch(f"--fix-r has {len(fix_r)} entries but ell={ell}")
    out = []
    for r in fix_r:
        r = (r - 1) % s + 1
        out.append([r] if gcd(r, s) == 1 else [])
    return out


def _k_vectors(r: Sequence[int], ell: int, n: int) -> Iterator[tuple[int, ...]]:
    """All k in [0, n)^ell (lex order) whose coset images (k_i + i*r_i) mod ell are distinct."""
    k = [0] * ell
    used = [False] * ell

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == ell:
            yield tuple(k)
            return
        off = i * r[i]
        for ki in range(n):
            res = (ki + off) % ell
            if used[res]:
                continue
            used[res] = True
            k[i] = ki
            yield from rec(i + 1)
            used[res] = False

    return rec(0)


def make_record(ctx: FieldCtx, spec: CycloSpec, emit_polys: bool = False) -> PermRecord:
    inverse = invert(spec)
    poly = inv_poly = None
    if emit_polys:
        poly = format_poly(expand(ctx, spec))
        inv_poly = poly if inverse == spec else format_poly(expand(ctx, inverse))
    return PermRecord(
        spec=spec,
        inverse=inverse,
        involution=inverse == spec,
        nonzero_fixed_points=count_fixed_points(spec),
        poly_text=poly,
        inverse_poly_text=inv_poly,
    )


def _shard(ctx: FieldCtx, query: SearchQuery, ell: int, r0: int) -> Iterator[PermRecord]:
    q, n = ctx.q, ctx.q - 1
    allowed = allowed_r(q, ell, query.fix_r)
    for rest in product(*allowed[1:]):
        r = (r0, *rest)
        for k in _k_vectors(r, ell, n):
            spec = CycloSpec(q, ell, r, k)
            inverse = invert(spec)
            involution = inverse == spec
            if query.involutions_only and not involution:
                continue
            if query.max_fixed_points is not None:
                if count_fixed_points(spec) > query.max_fixed_points:
                    continue
            yield make_record(ctx, spec, query.emit_polys)


def _shard_list(args: tuple[FieldCtx, SearchQuery, int, int]) -> list[PermRecord]:
    return list(_shard(*args))


def shards(ctx: FieldCtx, query: SearchQuery) -> list[tuple[int, int]]:
    """(ell, leading r component) work units, in output order."""
    out = []
    for ell in effective_indices(ctx.q, query.ell_list, query.convention):
        for r0 in allowed_r(ctx.q, ell, query.fix_r)[0]:
            out.append((ell, r0))
    return out


def enumerate_pps(ctx: FieldCtx, query: SearchQuery, jobs: int = 1) -> Iterator[PermRecord]:
    """Stream every record matching ``query`` in (ell, r, k) order.

    With ``jobs > 1`` shards run in worker processes, each shard is
    materialized, and results are merged in shard order, so the output is
    identical to the sequential stream.
    """
    work = shards(ctx, query)
    if query.max_fixed_points is not None and query.max_fixed_points < 0:
        return
    if jobs <= 1 or len(work) <= 1:
        for ell, r0 in work:
            yield from _shard(ctx, query, ell, r0)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for records in pool.map(_shard_list, [(ctx, query, ell, r0) for ell, r0 in work]):
            yield from records


def few_fixed_point_involutions(
    ctx: FieldCtx, ell: int, max_fp: int, jobs: int = 1
) -> Iterator[PermRecord]:
    query = SearchQuery(ell_list=(ell,), involutions_only=True, max_fixed_points=max_fp)
    check_ell(ctx.q, ell)
    return enumerate_pps(ctx, query, jobs=jobs)


def default_jobs() -> int:
    return os.cpu_count() or 1


# -- counting without enumeration -------------------------------------------


def _involution_weights(q: int, ell: int, allowed: list[list[int]]):
    """Per-coset and per-pair involution multiplicities.

    An involution's coset permutation phi is itself an involution, and the
    constraints split along its cycles: a fixed coset i contributes the number
    of (r_i, k_i) that are self-inverse on C_i, a swapped pair (i, j) the
    number of (r_i, k_i) whose inverse branch is the data placed on C_j.
    """
    s, n = (q - 1) // ell, q - 1
    fixed = [0] * ell
    pair = [[0] * ell for _ in range(ell)]
    for i in range(ell):
        for r in allowed[i]:
            g = inv_mod(r, s)
            # fixed coset: phi(i) = i, r = g, k = -k*g + i*(1 - r*g)
            if g == r:
                c = i * (1 - r * g)
                for ki in range((i - i * r) % ell, n, ell):
                    if ki == (-ki * g + c) % n:
                        fixed[i] += 1
            for j in range(i + 1, ell):
                if g not in allowed[j]:
                    continue
                gj = inv_mod(g, s)
                for ki in range((j - i * r) % ell, n, ell):
                    kj = (-ki * g + i * (1 - r * g)) % n
                    if (kj + j * g) % ell != i:
                        continue
                    if ki == (-kj * gj + j * (1 - g * gj)) % n:
                        pair[i][j] += 1
    return fixed, pair


def _uniform_matchings(fixed: list[int], w: int) -> int:
    """Weighted matchings when every pair has weight w.

    Sum over m swapped pairs: e_{ell-2m}(fixed) picks the fixed cosets and
    the remaining 2m cosets pair up in (2m-1)!! ways.
    """
    ell = len(fixed)
    e = [1] + [0] * ell  # elementary symmetric sums of the fixed weights
    for f in fixed:
        for d in range(ell, 0, -1):
            e[d] += e[d - 1] * f
    total = 0
    pairings = 1  # (2m-1)!!
    for m in range(ell // 2 + 1):
        if m:
            pairings *= 2 * m - 1
        total += e[ell - 2 * m] * pairings * w**m
    return total


def _count_involutive_matchings(fixed: list[int], pair: list[list[int]]) -> int:
    ell = len(fixed)
    weights = {pair[i][j] for i in range(ell) for j in range(i + 1, ell)}
    if len(weights) <= 1:
        return _uniform_matchings(fixed, weights.pop() if weights else 0)
    if ell > MAX_DP_INDEX:
        raise CountTooLarge(
            f"involution count at ell={ell} needs a 2^{ell} table; use --fix-r or enumerate with --limit"
        )
    full = (1 << ell) - 1

    @lru_cache(maxsize=None)
    def ways(mask: int) -> int:
        if mask == full:
            return 1
        i = (~mask & (mask + 1)).bit_length() - 1
        m = mask | (1 << i)
        total = fixed[i] * ways(m) if fixed[i] else 0
        row = pair[i]
        for j in range(i + 1, ell):
            if row[j] and not m >> j & 1:
                total += row[j] * ways(m | (1 << j))
        return total

    result = ways(0)
    ways.cache_clear()
    return result


def count_for_index(q: int, ell: int, fix_r: Sequence[int] | None = None) -> tuple[int, int]:
    """(permutations, involutions) at one index, computed combinatorially.

    For fixed r the admissible k-vectors number ell! * s^ell (each coset image
    residue is hit by exactly s values of k_i), so only the r-choices vary.
    """
    s = check_ell(q, ell)
    allowed = allowed_r(q, ell, fix_r)
    n_r = 1
    for a in allowed:
        n_r *= len(a)
    pps = n_r * factorial(ell) * s**ell
    if pps == 0:
        return 0, 0
    fixed, pair = _involution_weights(q, ell, allowed)
    return pps, _count_involutive_matchings(fixed, pair)


def count_summary(
    ctx: FieldCtx,
    ell_list: Iterable[int],
    fix_r: Sequence[int] | None = None,
    convention: str = "maximal",
) -> tuple[int, int]:
    pps = invs = 0
    for ell in effective_indices(ctx.q, ell_list, convention):
        a, b = count_for_index(ctx.q, ell, fix_r)
        pps += a
        invs += b
    return pps, invs
