"""Simplices: subsemirings of chain endomorphisms with image in a vertex set.

Fixing vertices a_0 < ... < a_{k-1} inside the chain C_n, the simplex on
those vertices is the set of endomorphisms whose image lies inside the
vertex set.  It is closed under pointwise join and composition, and its
k constant maps play the role of geometric vertices: sub-simplices on
vertex subsets are faces, members using every vertex form the interior,
the rest form the boundary.

Enumeration is always in lexicographic order of value tuples and refuses
carriers larger than a configurable cap (default one million members)
instead of exhausting memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .chain import Endo, constant, format_endo

DEFAULT_ENUM_CAP = 10**6


class SizeCapError(RuntimeError):
    """Requested enumeration exceeds the configured size cap."""


@dataclass(frozen=True, order=True, slots=True)
class Simplex:
    """A chain length n and a strictly increasing, nonempty vertex tuple."""

    n: int
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"chain length must be at least 1, got {self.n}")
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        if not vertices:
            raise ValueError("a simplex needs at least one vertex")
        for v in vertices:
            if not isinstance(v, int) or not 0 <= v <= self.n - 1:
                raise ValueError(f"vertex {v!r} is outside the chain 0..{self.n - 1}")
        if any(a >= b for a, b in zip(vertices, vertices[1:])):
            raise ValueError(f"vertices must be strictly increasing, got {vertices}")

    @classmethod
    def full(cls, n: int) -> Simplex:
        """The whole endomorphism semiring of C_n, seen as a simplex."""
        return cls(n, tuple(range(n)))

    @property
    def k(self) -> int:
        """Number of vertices (the dimension in the vertex-count convention)."""
        return len(self.vertices)

    def __str__(self) -> str:
        return f"simplex(n={self.n}, vertices={{{','.join(map(str, self.vertices))}}})"

    def is_full(self) -> bool:
        return self.k == self.n

    def is_internal(self) -> bool:
        """Neither chain endpoint 0 nor n-1 is a vertex."""
        return self.vertices[0] != 0 and self.vertices[-1] != self.n - 1

    def size(self) -> int:
        """Number of members: binomial(n + k - 1, n)."""
        return math.comb(self.n + self.k - 1, self.n)

    def vertex_constants(self) -> tuple[Endo, ...]:
        return tuple(constant(self.n, a) for a in self.vertices)

    def vertex_index(self, a: int) -> int:
        try:
            return self.vertices.index(a)
        except ValueError:
            raise ValueError(f"{a} is not a vertex of {self}") from None

    def contains(self, e: Endo) -> bool:
        """Membership: every value of e is a vertex."""
        if e.n != self.n:
            raise ValueError(f"chain length mismatch: {e.n} vs {self.n}")
        vset = set(self.vertices)
        return all(v in vset for v in e.values)

    # -- carrier -------------------------------------------------------

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
        """All members, lexicographic by value tuple.

        Monotone maps into the sorted vertex tuple are exactly the
        nondecreasing n-sequences over it, so multiset combinations
        enumerate them in canonical order.
        """
        count = self.size()
        if count > cap:
            raise SizeCapError(
                f"{self} has {count} members, above the cap of {cap}"
            )
        members = tuple(
            Endo(self.n, values)
            for values in combinations_with_replacement(self.vertices, self.n)
        )
        return EndoSet(self, members)

    # -- faces -----------------------------------------------------------

    def faces(self, dim: int | None = None) -> list[Simplex]:
        """Sub-simplices on nonempty vertex subsets, of size dim when given.

        Without dim, all faces (including this simplex itself) are listed
        by ascending dimension, then lexicographically.
        """
        if dim is not None:
            if not 1 <= dim <= self.k:
                raise ValueError(f"face dimension {dim} outside 1..{self.k}")
            dims: Iterator[int] | range = (dim,)
        else:
            dims = range(1, self.k + 1)
        return [
            Simplex(self.n, sub)
            for d in dims
            for sub in combinations(self.vertices, d)
        ]

    def proper_faces(self) -> list[Simplex]:
        """Faces on strict vertex subsets."""
        return [f for f in self.faces() if f.k < self.k]

    def least_face(self) -> Simplex:
        """The facet omitting the biggest vertex; needs k >= 2."""
        if self.k < 2:
            raise ValueError("a single-vertex simplex has no proper faces")
        return Simplex(self.n, self.vertices[:-1])

    def biggest_face(self) -> Simplex:
        """The facet omitting the least vertex; needs k >= 2."""
        if self.k < 2:
            raise ValueError("a single-vertex simplex has no proper faces")
        return Simplex(self.n, self.vertices[1:])

    # -- distinguished member sets -----------------------------------------

    def boundary(self, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
        """Members whose image misses some vertex (union of proper faces)."""
        full_image = set(self.vertices)
        return EndoSet(
            self,
            tuple(
                e for e in self.elements(cap).members if set(e.values) != full_image
            ),
        )

    def interior(self, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
        """Members whose image is the whole vertex set."""
        full_image = set(self.vertices)
        return EndoSet(
            self,
            tuple(
                e for e in self.elements(cap).members if set(e.values) == full_image
            ),
        )

    def fixed_subsemiring(self, a: int, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
        """Members fixing the chain element a; empty when a is not a vertex."""
        if not 0 <= a <= self.n - 1:
            raise ValueError(f"{a} is outside the chain 0..{self.n - 1}")
        return EndoSet(
            self, tuple(e for e in self.elements(cap).members if e.values[a] == a)
        )


def is_internal_face(face: Simplex, simplex: Simplex) -> bool:
    """True when the face avoids both extreme vertices of the simplex."""
    if face.n != simplex.n or not set(face.vertices) <= set(simplex.vertices):
        raise ValueError(f"{face} is not a face of {simplex}")
    return (
        simplex.vertices[0] not in face.vertices
        and simplex.vertices[-1] not in face.vertices
    )


def all_simplices(n: int) -> list[Simplex]:
    """Every simplex over C_n (all nonempty vertex subsets), by size then lex."""
    return [
        Simplex(n, sub)
        for k in range(1, n + 1)
        for sub in combinations(range(n), k)
    ]


@dataclass(frozen=True, slots=True)
class EndoSet:
    """A finite set of members of one simplex, canonically ordered.

    Construction sorts, deduplicates, and verifies that every member lies
    in the carrier simplex.
    """

    simplex: Simplex
    members: tuple[Endo, ...]
    _value_set: frozenset[tuple[int, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        vset = set(self.simplex.vertices)
        n = self.simplex.n
        unique = sorted(set(self.members))
        for e in unique:
            if e.n != n:
                raise ValueError(f"chain length mismatch: {e.n} vs {n}")
            if not all(v in vset for v in e.values):
                raise ValueError(f"{e} is not a member of {self.simplex}")
        object.__setattr__(self, "members", tuple(unique))
        object.__setattr__(self, "_value_set", frozenset(e.values for e in unique))

    def __iter__(self) -> Iterator[Endo]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, e: Endo) -> bool:
        return isinstance(e, Endo) and e.n == self.simplex.n and e.values in self._value_set

    def value_set(self) -> frozenset[tuple[int, ...]]:
        """The members as raw value tuples (for bulk set arithmetic)."""
        return self._value_set

    def union(self, *others: EndoSet) -> EndoSet:
        """Union of sets sharing this set's carrier simplex."""
        members = list(self.members)
        for other in others:
            if other.simplex != self.simplex:
                raise ValueError("cannot union sets over different simplices")
            members.extend(other.members)
        return EndoSet(self.simplex, tuple(members))

    def to_json(self) -> dict:
        return {
            "n": self.simplex.n,
            "vertices": list(self.simplex.vertices),
            "members": [format_endo(e) for e in self.members],
        }
