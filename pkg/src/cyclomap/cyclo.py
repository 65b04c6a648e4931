"""Cyclotomic cosets and generalized cyclotomic mappings with monomial branches.

For an index ``ell`` dividing q - 1, the nonzero field elements split into
``ell`` cosets C_i = gamma^i * C_0, where C_0 is the subgroup of ell-th powers.
A mapping is described by integer vectors ``r`` (branch exponents) and ``k``
(discrete logs of the branch coefficients): it sends 0 to 0 and x in C_i to
gamma^{k_i} * x^{r_i}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import EllDoesNotDivide, LengthMismatch, SpecParseError, ZeroHasNoCoset
from .gf_core import FieldCtx, FieldElem


def check_ell(q: int, ell: int) -> int:
    """Return s = (q-1)/ell, raising if ell is not a positive divisor of q-1."""
    if ell < 1 or (q - 1) % ell:
        raise EllDoesNotDivide(f"ell={ell} does not divide q-1={q - 1}")
    return (q - 1) // ell


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True, order=True)
class CycloSpec:
    """Canonical monomial-branch mapping over a field with ``q`` elements.

    Invariants (enforced by :func:`canonicalize`): ``ell * s == q - 1``,
    ``len(r) == len(k) == ell``, ``1 <= r_i <= s`` and ``0 <= k_i <= q - 2``.
    Ordering is lexicographic in (q, ell, r, k), which is the search order.
    """

    q: int
    ell: int
    r: tuple[int, ...]
    k: tuple[int, ...]

    @property
    def s(self) -> int:
        return (self.q - 1) // self.ell

    def A(self, ctx: FieldCtx) -> tuple[FieldElem, ...]:
        """Branch coefficients A_i = gamma^{k_i}."""
        return tuple(ctx.pow_gamma(ki) for ki in self.k)

    def __str__(self) -> str:
        return format_spec(self)


@dataclass(frozen=True)
class BranchPolySpec:
    """Mapping with arbitrary polynomial branches: x in C_i -> A[i] * R_i(x).

    ``branches[i]`` is the little-endian coefficient list of R_i. Only used
    for polynomial expansion; permutation analysis works on :class:`CycloSpec`.
    """

    ell: int
    A: tuple[FieldElem, ...]
    branches: tuple[tuple[FieldElem, ...], ...]

    def validate(self, ctx: FieldCtx) -> None:
        check_ell(ctx.q, self.ell)
        if len(self.A) != self.ell or len(self.branches) != self.ell:
            raise LengthMismatch(
                f"need {self.ell} coefficients and branches, got {len(self.A)} and {len(self.branches)}"
            )
        for i, R in enumerate(self.branches):
            nz = [c for c in R if c]
            if not nz or R[max(d for d, c in enumerate(R) if c)] != 1:
                raise ValueError(f"branch R_{i} must be a monic polynomial")


def canonicalize(q: int, ell: int, r_raw: Sequence[int], k_raw: Sequence[int]) -> CycloSpec:
    """Canonical spec describing the same mapping as the raw vectors.

    Exponents are reduced into [1, s] (residue 0 goes to s) and logs into
    [0, q-2]. On C_i, x^{r + m*s} = zeta^{i*m} * x^r, so moving r_i by m*s
    shifts k_i by i*m*s to keep the mapping unchanged.
    """
    s = check_ell(q, ell)
    if len(r_raw) != ell or len(k_raw) != ell:
        raise LengthMismatch(f"r and k must have length ell={ell}, got {len(r_raw)} and {len(k_raw)}")
    n = q - 1
    r = []
    k = []
    for i, (ri, ki) in enumerate(zip(r_raw, k_raw)):
        rc = (ri - 1) % s + 1
        r.append(rc)
        k.append((ki + i * (ri - rc)) % n)
    return CycloSpec(q, ell, tuple(r), tuple(k))


def coset_index(ctx: FieldCtx, ell: int, x: FieldElem) -> int:
    check_ell(ctx.q, ell)
    if x == 0:
        raise ZeroHasNoCoset("0 lies in no cyclotomic coset")
    return ctx.dlog(x) % ell


def zeta(ctx: FieldCtx, ell: int) -> FieldElem:
    """The primitive ell-th root of unity gamma^s."""
    return ctx.pow_gamma(check_ell(ctx.q, ell))


def apply_map(ctx: FieldCtx, spec: CycloSpec, x: FieldElem) -> FieldElem:
    """Evaluate the piecewise definition at x."""
    if x == 0:
        return 0
    e = ctx.dlog(x)
    i = e % spec.ell
    return ctx.pow_gamma(spec.k[i] + e * spec.r[i])


def image_coset(spec: CycloSpec, i: int) -> int:
    """Coset that C_i is sent into: (k_i + i*r_i) mod ell."""
    return (spec.k[i] + i * spec.r[i]) % spec.ell


_SPEC_KEYS = ("ell", "r", "k")
_INT_LIST = re.compile(r"^-?\d+(,-?\d+)*$")


def parse_spec(text: str, q: int) -> CycloSpec:
    """Parse ``ell=2 r=1,7 k=0,2`` and canonicalize for a field of size q."""
    fields: dict[str, str] = {}
    for tok in text.split():
        key, sep, val = tok.partition("=")
        if not sep or key not in _SPEC_KEYS:
            raise SpecParseError(f"bad token {tok!r}; expected ell=, r=, k=")
        if key in fields:
            raise SpecParseError(f"duplicate key {key!r}")
        if not _INT_LIST.match(val):
            raise SpecParseError(f"{key} must be a comma-separated integer list, got {val!r}")
        fields[key] = val
    missing = [key for key in _SPEC_KEYS if key not in fields]
    if missing:
        raise SpecParseError(f"missing {', '.join(missing)} in spec {text!r}")
    if "," in fields["ell"]:
        raise SpecParseError(f"ell must be a single integer, got {fields['ell']!r}")
    ell = int(fields["ell"])
    r = [int(t) for t in fields["r"].split(",")]
    k = [int(t) for t in fields["k"].split(",")]
    return canonicalize(q, ell, r, k)


def format_ints(v: Sequence[int]) -> str:
    return ",".join(map(str, v))


def format_spec(spec: CycloSpec) -> str:
    return f"ell={spec.ell} r={format_ints(spec.r)} k={format_ints(spec.k)}"
