"""Small finite fields F_q, q = p^m, with exp/log tables.

Elements are plain ints in ``range(q)``: the base-p digits of the int are the
coefficients of the element as a polynomial in the generator symbol ``a``,
little-endian (digit i is the coefficient of a^i). Zero is ``0`` and the
multiplicative identity is ``1``. The packing is unique per element, so ints
compare structurally and serve directly as table keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    GammaNotPrimitive,
    LogOfZero,
    NonMonicModulus,
    NotPrime,
    SpecParseError,
)

FieldElem = int

DEFAULT_MAX_Q = 1 << 20
# full q*q addition table only below this size
_ADD_TABLE_MAX_Q = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _polmulmod(x: Sequence[int], y: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    """Schoolbook product of two coefficient vectors, reduced by a monic modulus."""
    m = len(modulus) - 1
    prod = [0] * (len(x) + len(y) - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                prod[i + j] = (prod[i + j] + xi * yj) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            for i in range(m + 1):
                prod[d - m + i] = (prod[d - m + i] - c * modulus[i]) % p
    return (prod + [0] * m)[:m]


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable field context. Build instances with :func:`build_field`."""

    p: int
    m: int
    modulus: tuple[int, ...]
    gamma: FieldElem
    exp_table: tuple[FieldElem, ...] = field(repr=False)
    log_table: tuple[int, ...] = field(repr=False)
    name: str = ""
    _add_table: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def order(self) -> int:
        """Order of the multiplicative group, q - 1."""
        return self.p**self.m - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.modulus, self.gamma) == (
            other.p,
            other.m,
            other.modulus,
            other.gamma,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus, self.gamma))

    def __reduce__(self):
        # rebuild from the defining data; tables are cheap to recompute
        return (
            build_field,
            (self.p, self.m, self.modulus, self.coeffs(self.gamma), self.q, self.name),
        )

    # -- element encoding ------------------------------------------------

    def coeffs(self, x: FieldElem) -> tuple[int, ...]:
        """Little-endian coefficient vector of ``x`` (length m)."""
        out = []
        for _ in range(self.m):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def elem(self, coeffs: Iterable[int]) -> FieldElem:
        """Pack a coefficient vector (reduced mod p, zero-padded) into an element."""
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"expected at most {self.m} coefficients, got {len(coeffs)}")
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + c % self.p
        return x

    def elements(self) -> list[FieldElem]:
        """All field elements in canonical order: 0, then gamma^0 ... gamma^(q-2)."""
        return [0, *self.exp_table]

    def position(self, x: FieldElem) -> int:
        """Index of ``x`` within :meth:`elements`."""
        return 0 if x == 0 else self.log_table[x] + 1

    # -- arithmetic --------------------------------------------------------

    def add(self, x: FieldElem, y: FieldElem) -> FieldElem:
        if self.p == 2:
            return x ^ y
        if self._add_table is not None:
            return self._add_table[x * self.q + y]
        return self._add_digits(x, y)

    def _add_digits(self, x: int, y: int) -> int:
        p = self.p
        out, place = 0, 1
        while x or y:
            x, a = divmod(x, p)
            y, b = divmod(y, p)
            out += ((a + b) % p) * place
            place *= p
        return out

    def neg(self, x: FieldElem) -> FieldElem:
        if self.p == 2 or x == 0:
            return x
        return self.elem((-c) % self.p for c in self.coeffs(x))

    def sub(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return self.add(x, self.neg(y))

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        if x == 0 or y == 0:
            return 0
        log = self.log_table
        return self.exp_table[(log[x] + log[y]) % self.order]

    def inv(self, x: FieldElem) -> FieldElem:
        if x == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self.exp_table[-self.log_table[x] % self.order]

    def div(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return self.mul(x, self.inv(y))

    def pow(self, x: FieldElem, e: int) -> FieldElem:
        """x**e for any integer e; 0**0 = 1, 0**e = 0 for e > 0."""
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return 0
        return self.exp_table[(self.log_table[x] * e) % self.order]

    def pow_gamma(self, e: int) -> FieldElem:
        """gamma**(e mod (q-1)); negative exponents are fine."""
        return self.exp_table[e % self.order]

    def dlog(self, x: FieldElem) -> int:
        """Discrete log base gamma, canonical in [0, q-2]."""
        if x == 0:
            raise LogOfZero("discrete logarithm of 0 is undefined")
        return self.log_table[x]

    def from_int(self, n: int) -> FieldElem:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    # -- rendering -------------------------------------------------------

    def format_elem(self, x: FieldElem, symbol: str = "a") -> str:
        """Render as descending powers of the generator symbol, e.g. ``2a + 1``."""
        terms = []
        for d, c in reversed(list(enumerate(self.coeffs(x)))):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
                continue
            mono = symbol if d == 1 else f"{symbol}^{d}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def build_field(
    p: int,
    m: int,
    modulus: Sequence[int],
    gamma: Sequence[int],
    max_q: int = DEFAULT_MAX_Q,
    name: str = "",
) -> FieldCtx:
    """Construct F_{p^m} as F_p[a]/(modulus) with primitive element ``gamma``.

    ``modulus`` is the little-endian coefficient list of a monic degree-m
    polynomial, ``gamma`` the little-endian coefficient list of the generator.
    The exp table is built by repeated schoolbook multiplication by gamma, and
    the field is accepted only if the first q - 1 powers are pairwise distinct.
    That single check certifies both primitivity of gamma and irreducibility
    of the modulus.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    modulus = tuple(c % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise NonMonicModulus(f"modulus must be monic of degree {m}, got {list(modulus)}")
    q = p**m
    if q > max_q:
        raise FieldTooLarge(f"q = {q} exceeds the table budget {max_q}")

    def pack(vec: Sequence[int]) -> int:
        x = 0
        for c in reversed(vec):
            x = x * p + c
        return x

    g = [c % p for c in gamma]
    if len(g) > m:
        raise ValueError(f"gamma has more than {m} coefficients")
    g += [0] * (m - len(g))
    if not any(g):
        raise GammaNotPrimitive("gamma must be nonzero")

    exp_list: list[int] = []
    log_list = [-1] * q
    cur = [1] + [0] * (m - 1)
    for e in range(q - 1):
        x = pack(cur)
        if x == 0 or log_list[x] != -1:
            raise GammaNotPrimitive(
                f"gamma^{e} repeats an earlier power: gamma is not primitive "
                "or the modulus is reducible"
            )
        log_list[x] = e
        exp_list.append(x)
        cur = _polmulmod(cur, g, modulus, p)
    if pack(cur) != 1:
        raise GammaNotPrimitive("gamma^(q-1) != 1")

    add_table = None
    if p != 2 and q <= _ADD_TABLE_MAX_Q:
        digits = [[(x // p**i) % p for i in range(m)] for x in range(q)]
        add_table = tuple(
            pack([(a + b) % p for a, b in zip(digits[x], digits[y])])
            for x in range(q)
            for y in range(q)
        )

    return FieldCtx(
        p=p,
        m=m,
        modulus=modulus,
        gamma=pack(g),
        exp_table=tuple(exp_list),
        log_table=tuple(log_list),
        name=name,
        _add_table=add_table,
    )


# name -> (p, m, modulus, gamma), coefficient lists little-endian
PRESETS: dict[str, tuple[int, int, tuple[int, ...], tuple[int, ...]]] = {
    "F3": (3, 1, (1, 1), (2,)),  # a + 1 = 0, so a = 2
    "F9": (3, 2, (2, 2, 1), (0, 1)),  # a^2 + 2a + 2 = 0
    "F25": (5, 2, (2, 4, 1), (0, 1)),  # a^2 + 4a + 2 = 0
    "F64": (2, 6, (1, 1, 0, 1, 1, 0, 1), (0, 1)),  # a^6 + a^4 + a^3 + a + 1 = 0
}

_preset_cache: dict[str, FieldCtx] = {}


def preset(name: str) -> FieldCtx:
    """Built-in field by name (``F3``, ``F9``, ``F25``, ``F64``)."""
    if name not in PRESETS:
        raise KeyError(f"unknown field preset {name!r}; known: {', '.join(PRESETS)}")
    if name not in _preset_cache:
        p, m, modulus, gamma = PRESETS[name]
        _preset_cache[name] = build_field(p, m, modulus, gamma, name=name)
    return _preset_cache[name]


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise SpecParseError(f"expected comma-separated integers, got {text!r}") from None


def parse_field_line(line: str, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Parse ``p m modulus_csv gamma_csv``, e.g. ``5 2 2,4,1 0,1``."""
    parts = line.split()
    if len(parts) != 4:
        raise SpecParseError(f"field line needs 4 fields (p m modulus gamma), got {line!r}")
    try:
        p, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise SpecParseError(f"bad p or m in {line!r}") from None
    return build_field(p, m, _csv_ints(parts[2]), _csv_ints(parts[3]), max_q=max_q)


def load_field_file(path: str | Path, max_q: int = DEFAULT_MAX_Q) -> list[FieldCtx]:
    """Read one field per non-blank line; ``#`` starts a comment."""
    fields = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            fields.append(parse_field_line(line, max_q=max_q))
    return fields


def resolve_field(desc: str) -> FieldCtx:
    """Preset name, inline ``p m modulus gamma`` line, or path to a preset file.

    A file resolves to its first field line.
    """
    desc = desc.strip()
    if desc in PRESETS:
        return preset(desc)
    if len(desc.split()) == 4:
        return parse_field_line(desc)
    path = Path(desc)
    if path.is_file():
        fields = load_field_file(path)
        if not fields:
            raise SpecParseError(f"no field definition in {path}")
        return fields[0]
    raise SpecParseError(f"cannot resolve field {desc!r}")
