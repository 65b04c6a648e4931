"""Cross-validation of the closed forms against brute-force tables."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import batch
from .cyclo import check_ell
from .gf_core import FieldCtx
from .permcheck import (
    compose,
    count_fixed_points,
    invert,
    is_identity,
    is_involution,
    oracle_eval_table,
    oracle_fixed_points,
    oracle_is_involution,
)
from .polyform import expand, value_table
from .search import SearchQuery, effective_indices, enumerate_pps


@dataclass
class VerifyReport:
    checked: int = 0
    composition_failures: int = 0
    involution_mismatches: int = 0
    fixedpoint_mismatches: int = 0
    # only filled by the all-specs sweep
    specs: int | None = None
    criterion_mismatches: int | None = None

    def line(self) -> str:
        out = (
            f"checked={self.checked} composition_failures={self.composition_failures} "
            f"involution_mismatches={self.involution_mismatches} "
            f"fixedpoint_mismatches={self.fixedpoint_mismatches}"
        )
        if self.specs is not None:
            out += f" specs={self.specs} criterion_mismatches={self.criterion_mismatches}"
        return out

    @property
    def ok(self) -> bool:
        return not (
            self.composition_failures
            or self.involution_mismatches
            or self.fixedpoint_mismatches
            or self.criterion_mismatches
        )


def verify_permutations(
    ctx: FieldCtx, ell_list: Iterable[int], convention: str = "maximal", report: VerifyReport | None = None
) -> VerifyReport:
    """Check every enumerated permutation: the polynomial of the inverse composes
    with the polynomial of the map to the identity in both orders, and the
    involution flag and fixed-point count agree with the pointwise table."""
    report = report or VerifyReport()
    query = SearchQuery(ell_list=tuple(ell_list), convention=convention)
    for rec in enumerate_pps(ctx, query):
        spec = rec.spec
        report.checked += 1
        f = value_table(expand(ctx, spec))
        finv = value_table(expand(ctx, invert(spec)))
        if not (is_identity(compose(f, finv)) and is_identity(compose(finv, f))):
            report.composition_failures += 1
        table = oracle_eval_table(ctx, spec)
        flag = is_involution(spec)
        if flag != oracle_is_involution(table) or flag != (invert(spec) == spec):
            report.involution_mismatches += 1
        if count_fixed_points(spec) != oracle_fixed_points(table):
            report.fixedpoint_mismatches += 1
    return report


def sweep_criterion(ctx: FieldCtx, ell: int) -> tuple[int, int]:
    """(specs, mismatches) of the permutation criterion against table
    bijectivity over all of [1, s]^ell x [0, q-2]^ell."""
    s = check_ell(ctx.q, ell)
    specs = mismatches = 0
    for r in product(range(1, s + 1), repeat=ell):
        for K in batch.k_blocks(ctx.order, ell):
            crit = batch.criterion(ctx.q, ell, r, K)
            bij = batch.tables_bijective(batch.image_tables(ctx, ell, r, K))
            specs += len(K)
            mismatches += int((crit != bij).sum())
    return specs, mismatches


def run_verification(
    ctx: FieldCtx,
    ell_list: Iterable[int],
    convention: str = "maximal",
    all_specs: bool = False,
) -> VerifyReport:
    ells = effective_indices(ctx.q, ell_list, convention)
    report = verify_permutations(ctx, ells, convention="each")
    if all_specs:
        report.specs = report.criterion_mismatches = 0
        for ell in ells:
            n, bad = sweep_criterion(ctx, ell)
            report.specs += n
            report.criterion_mismatches += bad
    return report
