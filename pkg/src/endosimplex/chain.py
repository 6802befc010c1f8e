"""Endomorphisms of a finite chain under pointwise join and composition.

The chain C_n is the set {0, ..., n-1} ordered by <=, a join-semilattice
under max.  A join endomorphism of C_n is the same thing as a monotone
self-map; it is stored as the tuple of its values.  Two operations make
the set of all such maps a semiring:

    (a + b)(x) = max(a(x), b(x))
    (a * b)(x) = b(a(x))

The product reads left to right: ``a * b`` means "apply a first, then b".
There is no additive neutral element (maps are not required to fix 0), so
no semiring zero exists and no operation here assumes one.

Two text notations are supported.  The tuple form lists all values,
"0,0,1,2"; the run-length form groups equal values, "0_2 1 2" (value,
underscore, run length, whitespace separated; a bare value is a run of
one).  ``parse_endo`` accepts either, ``format_endo`` emits either, and
the two round-trip.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, groupby
from typing import Iterable, Iterator

TUPLE = "tuple"
RUN_LENGTH = "run-length"
NOTATION_STYLES = (TUPLE, RUN_LENGTH)

_RUN_TOKEN = re.compile(r"^(\d+)(?:_(\d+))?$")
_INT_TOKEN = re.compile(r"^\d+$")


class NotationError(ValueError):
    """Malformed or inconsistent endomorphism notation."""


@dataclass(frozen=True, order=True, slots=True)
class Endo:
    """An order-preserving self-map of the chain {0, ..., n-1}.

    ``values[i]`` is the image of i.  Instances are immutable and hashable,
    and sort by their value tuples; that lexicographic order is the
    canonical order used throughout the package.  Invalid data (wrong
    length, out-of-range or non-monotone values) is rejected on
    construction.
    """

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"chain length must be at least 1, got {self.n}")
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(values)}")
        for i, v in enumerate(values):
            if not isinstance(v, int) or not 0 <= v <= self.n - 1:
                raise ValueError(
                    f"value {v!r} at position {i} is outside the chain 0..{self.n - 1}"
                )
        if any(a > b for a, b in zip(values, values[1:])):
            raise ValueError(
                "values are not monotone: not an endomorphism of the join-semilattice"
            )

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __str__(self) -> str:
        return format_endo(self, RUN_LENGTH)

    # -- structure -----------------------------------------------------

    def image(self) -> tuple[int, ...]:
        """Distinct values, ascending."""
        return tuple(sorted(set(self.values)))

    def fixed_points(self) -> tuple[int, ...]:
        """All x with a(x) = x, ascending."""
        return tuple(x for x, v in enumerate(self.values) if v == x)

    def is_constant(self) -> bool:
        return self.values[0] == self.values[-1]

    def runs(self) -> tuple[tuple[int, int], ...]:
        """(value, run length) pairs, left to right."""
        return tuple((v, len(list(g))) for v, g in groupby(self.values))

    # -- semiring operations --------------------------------------------

    def _check_same_chain(self, other: Endo) -> None:
        if not isinstance(other, Endo):
            raise TypeError(f"expected an Endo, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"chain length mismatch: {self.n} vs {other.n}")

    def __add__(self, other: Endo) -> Endo:
        """Pointwise join: (a + b)(x) = max(a(x), b(x))."""
        self._check_same_chain(other)
        return Endo(self.n, tuple(map(max, self.values, other.values)))

    def __mul__(self, other: Endo) -> Endo:
        """Composition, left to right: (a * b)(x) = b(a(x))."""
        self._check_same_chain(other)
        b = other.values
        return Endo(self.n, tuple(b[v] for v in self.values))

    def __pow__(self, m: int) -> Endo:
        """m-fold product a * a * ... * a; m must be positive.

        m = 0 is rejected: the semiring carries no global multiplicative
        neutral element to serve as a zeroth power.
        """
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"exponent must be a positive integer, got {m!r}")
        result = self
        for _ in range(m - 1):
            result = result * self
        return result

    # -- multiplicative behaviour ----------------------------------------

    def is_idempotent(self) -> bool:
        """True iff a * a = a, i.e. a fixes every value it attains."""
        return all(self.values[v] == v for v in set(self.values))

    def nilpotency(self) -> tuple[int, int] | None:
        """(v, m) with the least m >= 1 such that a**m is the constant v.

        Returns None when no power of a is constant.  The search stops at
        exponent n: iterating a monotone self-map of an n-chain settles
        within n steps (a verified package invariant).
        """
        p = self
        for m in range(1, self.n + 1):
            if p.is_constant():
                return p.values[0], m
            p = p * self
        return None

    def eventual_idempotent(self) -> tuple[Endo, int]:
        """(a**m, m) for the least m >= 1 making a**m idempotent.

        Every monotone self-map of a finite chain reaches an idempotent
        power by exponent n; the trailing assertion guards that bound.
        """
        p = self
        for m in range(1, self.n + 1):
            if p.is_idempotent():
                return p, m
            p = p * self
        raise AssertionError(
            f"no idempotent power of {self} within exponent {self.n}; "
            "the stabilization bound is violated"
        )


# -- constructors ---------------------------------------------------------


def make_endo(n: int, values: Iterable[int]) -> Endo:
    """Validate and build the endomorphism of C_n with the given values."""
    return Endo(n, tuple(values))


def constant(n: int, v: int) -> Endo:
    """The constant map x -> v."""
    if not 0 <= v <= n - 1:
        raise ValueError(f"constant value {v} is outside the chain 0..{n - 1}")
    return Endo(n, (v,) * n)


def identity(n: int) -> Endo:
    """The identity map of C_n."""
    return Endo(n, tuple(range(n)))


# -- operations as free functions ------------------------------------------


def add(a: Endo, b: Endo) -> Endo:
    return a + b


def compose(a: Endo, b: Endo) -> Endo:
    """a * b: apply a first, then b."""
    return a * b


def power(a: Endo, m: int) -> Endo:
    return a**m


# -- notation ---------------------------------------------------------------


def parse_endo(text: str, n: int) -> Endo:
    """Parse either notation into a validated endomorphism of C_n.

    A comma anywhere selects the tuple form; otherwise the text is read as
    whitespace-separated run-length tokens "v_len" (bare "v" meaning
    "v_1").  The total length must equal n.
    """
    stripped = text.strip()
    if not stripped:
        raise NotationError("empty endomorphism notation")
    if "," in stripped:
        tokens = [t.strip() for t in stripped.split(",")]
        if not all(_INT_TOKEN.match(t) for t in tokens):
            raise NotationError(f"malformed tuple notation: {text!r}")
        values = [int(t) for t in tokens]
        if len(values) != n:
            raise NotationError(
                f"tuple notation has {len(values)} values, expected {n}"
            )
        return Endo(n, tuple(values))
    values = []
    for token in stripped.split():
        match = _RUN_TOKEN.match(token)
        if match is None:
            raise NotationError(f"malformed run-length token {token!r} in {text!r}")
        v = int(match.group(1))
        length = int(match.group(2)) if match.group(2) is not None else 1
        if length < 1:
            raise NotationError(f"run length must be positive in token {token!r}")
        values.extend([v] * length)
    if len(values) != n:
        raise NotationError(f"run lengths sum to {len(values)}, expected {n}")
    return Endo(n, tuple(values))


def format_endo(e: Endo, style: str = RUN_LENGTH) -> str:
    """Render an endomorphism in the requested notation."""
    if style == TUPLE:
        return ",".join(str(v) for v in e.values)
    if style == RUN_LENGTH:
        return " ".join(
            f"{v}_{length}" if length > 1 else str(v) for v, length in e.runs()
        )
    raise ValueError(f"unknown notation style {style!r}; use one of {NOTATION_STYLES}")


# -- whole-semiring enumeration ---------------------------------------------


def all_endos(n: int) -> list[Endo]:
    """Every endomorphism of C_n in lexicographic order of value tuples."""
    return [Endo(n, values) for values in combinations_with_replacement(range(n), n)]


def iter_endo_values(n: int) -> Iterator[tuple[int, ...]]:
    """Value tuples of all endomorphisms of C_n, lexicographic, unvalidated."""
    return combinations_with_replacement(range(n), n)


def endo_count(n: int) -> int:
    """Order of the endomorphism semiring of C_n: binomial(2n-1, n)."""
    if n < 1:
        raise ValueError(f"chain length must be at least 1, got {n}")
    return math.comb(2 * n - 1, n)
