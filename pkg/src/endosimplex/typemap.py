"""Vertex-action types, lifting, block classification, and counting formulas.

Each member of a simplex acts on the vertex list: recording, for every
vertex, the index of the vertex it is sent to yields a monotone self-map
of C_k, the member's *type*.  Types live in the coordinate simplex (the
full endomorphism semiring of C_k), and taking types is a semiring
homomorphism: the type of a sum is the sum of types, the type of a
product is the product of types.  Consequently any add/mul-closed set of
types pulls back ("lifts") to an add/mul-closed member set, and one-sided
ideals lift to one-sided ideals.

Classifying members by the long-run behaviour of their type partitions
the simplex into blocks:

* ``N[a]``  -- type has a constant power landing on vertex a
               (vertex-nilpotent members, one block per target vertex);
* ``I[t]``  -- type is the fixed idempotent t (non-constant,
               non-identity);
* ``IC[t]`` -- type is a non-idempotent root of the idempotent t, i.e.
               some power of the type equals t;
* ``RI``    -- type is the identity of C_k: exactly the right identities
               of the simplex, which are its interior idempotents.

The constant-power test runs before the identity test so that the
one-member simplex (whose single type is simultaneously constant and the
identity of C_1) counts as nilpotent.

Counting: a-nilpotent members of the full semiring number
C(a) * C(n-a-1) in Catalan numbers; idempotents with a prescribed
fixed-point set number the product of consecutive gaps; right identities
of a simplex number the product of consecutive vertex gaps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .chain import Endo, format_endo, identity
from .simplex import DEFAULT_ENUM_CAP, EndoSet, Simplex
from .strata import _add_violation, _mul_violation


def type_of(s: Simplex, e: Endo) -> Endo:
    """The vertex-index action of e, as an endomorphism of C_k."""
    if not s.contains(e):
        raise ValueError(f"{e} is not a member of {s}")
    index = {a: i for i, a in enumerate(s.vertices)}
    return Endo(s.k, tuple(index[e.values[a]] for a in s.vertices))


def coordinate_simplex(s: Simplex) -> Simplex:
    """The simplex the types of s live in: all of C_k's endomorphisms."""
    return Simplex.full(s.k)


def lift(
    s: Simplex, signatures: Iterable[Endo], cap: int = DEFAULT_ENUM_CAP
) -> EndoSet:
    """Members of s whose type belongs to the given set of signatures."""
    sigs = set()
    for sig in signatures:
        if not isinstance(sig, Endo) or sig.n != s.k:
            raise ValueError(
                f"invalid signature {sig!r}: expected an endomorphism of C_{s.k}"
            )
        sigs.add(sig.values)
    index = {a: i for i, a in enumerate(s.vertices)}
    positions = s.vertices
    members = tuple(
        e
        for e in s.elements(cap).members
        if tuple(index[e.values[a]] for a in positions) in sigs
    )
    return EndoSet(s, members)


# -- block labels ------------------------------------------------------------

_KIND_ORDER = {"N": 0, "I": 1, "IC": 2, "RI": 3}


@dataclass(frozen=True, slots=True)
class BlockLabel:
    """Identity of one partition block.

    kind "N" carries the target vertex index; kinds "I" and "IC" carry the
    idempotent signature (never constant, never the identity); kind "RI"
    carries nothing.
    """

    kind: str
    vertex: int | None = None
    signature: Endo | None = None

    def __post_init__(self) -> None:
        if self.kind == "N":
            if self.vertex is None or self.signature is not None:
                raise ValueError("a nilpotent label needs exactly a vertex index")
        elif self.kind in ("I", "IC"):
            sig = self.signature
            if self.vertex is not None or sig is None:
                raise ValueError(f"an {self.kind} label needs exactly a signature")
            if not sig.is_idempotent():
                raise ValueError(f"{self.kind} signature {sig} is not idempotent")
            if sig.is_constant():
                raise ValueError(f"{self.kind} signature {sig} is constant")
            if sig == identity(sig.n):
                raise ValueError(f"{self.kind} signature {sig} is the identity")
        elif self.kind == "RI":
            if self.vertex is not None or self.signature is not None:
                raise ValueError("the right-identity label carries no payload")
        else:
            raise ValueError(f"unknown block kind {self.kind!r}")

    def canonical(self, s: Simplex) -> str:
        """Stable label string: N[vertex value], I[sig], IC[sig], or RI."""
        if self.kind == "N":
            return f"N[{s.vertices[self.vertex]}]"
        if self.kind in ("I", "IC"):
            return f"{self.kind}[{','.join(str(v) for v in self.signature.values)}]"
        return "RI"

    def sort_key(self) -> tuple:
        return (
            _KIND_ORDER[self.kind],
            self.vertex if self.vertex is not None else -1,
            self.signature.values if self.signature is not None else (),
        )


def _signature_label(sig: Endo) -> BlockLabel:
    # constant-power test first: at k = 1 the lone signature is both the
    # identity and a constant, and it must count as nilpotent
    nil = sig.nilpotency()
    if nil is not None:
        return BlockLabel("N", vertex=nil[0])
    if sig == identity(sig.n):
        return BlockLabel("RI")
    if sig.is_idempotent():
        return BlockLabel("I", signature=sig)
    root, _ = sig.eventual_idempotent()
    return BlockLabel("IC", signature=root)


def classify(s: Simplex, e: Endo) -> BlockLabel:
    """Assign e to its partition block by the behaviour of its type."""
    return _signature_label(type_of(s, e))


# -- the partition -------------------------------------------------------------


@dataclass
class PartitionChecks:
    """Verdicts of the structural contracts a partition must satisfy.

    Nilpotent, idempotent-type, and right-identity blocks must each be
    add- and mul-closed.  An idempotent-closure block is constrained only
    jointly with the block of its idempotent: the union must be add- and
    mul-closed (sums and products of roots of t may land on t itself, so
    the closure block alone closes under neither operation in general).
    """

    disjoint: bool
    cover: bool
    block_add_closed: dict[BlockLabel, bool]
    block_mul_closed: dict[BlockLabel, bool]
    closure_union_add_closed: dict[BlockLabel, bool]
    closure_union_mul_closed: dict[BlockLabel, bool]

    def all_pass(self) -> bool:
        return (
            self.disjoint
            and self.cover
            and all(self.block_add_closed.values())
            and all(self.block_mul_closed.values())
            and all(self.closure_union_add_closed.values())
            and all(self.closure_union_mul_closed.values())
        )


@dataclass
class PartitionReport:
    """Blocks, sizes, and contract verdicts for one simplex."""

    simplex: Simplex
    blocks: dict[BlockLabel, EndoSet]
    checks: PartitionChecks

    @property
    def census(self) -> dict[BlockLabel, int]:
        return {label: len(block) for label, block in self.blocks.items()}

    def block(self, canonical: str) -> EndoSet | None:
        for label, members in self.blocks.items():
            if label.canonical(self.simplex) == canonical:
                return members
        return None

    def all_pass(self) -> bool:
        return self.checks.all_pass()

    def to_json(self) -> dict:
        s = self.simplex
        return {
            "n": s.n,
            "vertices": list(s.vertices),
            "blocks": {
                label.canonical(s): [format_endo(e) for e in block]
                for label, block in self.blocks.items()
            },
            "census": {
                label.canonical(s): len(block) for label, block in self.blocks.items()
            },
            "checks": {
                "disjoint": self.checks.disjoint,
                "cover": self.checks.cover,
                "block_add_closed": {
                    label.canonical(s): v
                    for label, v in self.checks.block_add_closed.items()
                },
                "block_mul_closed": {
                    label.canonical(s): v
                    for label, v in self.checks.block_mul_closed.items()
                },
                "closure_union_add_closed": {
                    label.canonical(s): v
                    for label, v in self.checks.closure_union_add_closed.items()
                },
                "closure_union_mul_closed": {
                    label.canonical(s): v
                    for label, v in self.checks.closure_union_mul_closed.items()
                },
                "all_pass": self.checks.all_pass(),
            },
        }


def partition(s: Simplex, cap: int = DEFAULT_ENUM_CAP) -> PartitionReport:
    """Classify every member of s and verify the per-block contracts."""
    elements = s.elements(cap)
    index = {a: i for i, a in enumerate(s.vertices)}
    by_signature: dict[tuple[int, ...], list[Endo]] = {}
    for e in elements.members:
        sig = tuple(index[e.values[a]] for a in s.vertices)
        by_signature.setdefault(sig, []).append(e)

    grouped: dict[BlockLabel, list[Endo]] = {}
    for sig_values, members in by_signature.items():
        label = _signature_label(Endo(s.k, sig_values))
        grouped.setdefault(label, []).extend(members)

    blocks = {
        label: EndoSet(s, tuple(grouped[label]))
        for label in sorted(grouped, key=BlockLabel.sort_key)
    }

    total = sum(len(b) for b in blocks.values())
    covered = frozenset().union(*(b.value_set() for b in blocks.values()))
    disjoint = total == len(covered)
    cover = covered == elements.value_set()

    block_add: dict[BlockLabel, bool] = {}
    block_mul: dict[BlockLabel, bool] = {}
    union_add: dict[BlockLabel, bool] = {}
    union_mul: dict[BlockLabel, bool] = {}
    for label, block in blocks.items():
        if label.kind != "IC":
            raw = [e.values for e in block.members]
            rset = block.value_set()
            block_add[label] = _add_violation(raw, rset) is None
            block_mul[label] = _mul_violation(raw, rset) is None
        else:
            partner = blocks.get(BlockLabel("I", signature=label.signature))
            joint = list(block.members) + (list(partner.members) if partner else [])
            joint_raw = [e.values for e in joint]
            joint_set = frozenset(joint_raw)
            union_add[label] = _add_violation(joint_raw, joint_set) is None
            union_mul[label] = _mul_violation(joint_raw, joint_set) is None

    checks = PartitionChecks(
        disjoint=disjoint,
        cover=cover,
        block_add_closed=block_add,
        block_mul_closed=block_mul,
        closure_union_add_closed=union_add,
        closure_union_mul_closed=union_mul,
    )
    return PartitionReport(simplex=s, blocks=blocks, checks=checks)


# -- identities -----------------------------------------------------------------


def right_identities(s: Simplex, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
    """All members alpha with beta * alpha = beta for every member beta.

    Computed by the definition (a full scan of all pairs), not via the
    interior-idempotent characterization; the two routes are compared in
    the verification suite.
    """
    raw = [e.values for e in s.elements(cap).members]
    found = []
    for alpha in raw:
        if all(tuple(alpha[x] for x in beta) == beta for beta in raw):
            found.append(Endo(s.n, alpha))
    return EndoSet(s, tuple(found))


@dataclass
class LeftIdentityReport:
    """Outcome of the left-identity analysis of a simplex (k >= 2).

    Either a two-sided identity exists (only on the full simplex, where
    the identity map is one), or nonexistence is demonstrated: two
    distinct right identities that any left identity would have to equal,
    or the unique right identity eps together with a member alpha it fails
    to fix (eps * alpha != alpha).
    """

    simplex: Simplex
    exists: bool
    two_sided: Endo | None = None
    colliding: tuple[Endo, Endo] | None = None
    witness: tuple[Endo, Endo, Endo] | None = None

    def to_json(self) -> dict:
        return {
            "n": self.simplex.n,
            "vertices": list(self.simplex.vertices),
            "exists": self.exists,
            "two_sided": format_endo(self.two_sided) if self.two_sided else None,
            "colliding": [format_endo(e) for e in self.colliding]
            if self.colliding
            else None,
            "witness": {
                "right_identity": format_endo(self.witness[0]),
                "alpha": format_endo(self.witness[1]),
                "product": format_endo(self.witness[2]),
            }
            if self.witness
            else None,
        }


def left_identity(s: Simplex, cap: int = DEFAULT_ENUM_CAP) -> LeftIdentityReport:
    """Decide whether s has a left identity and return the evidence.

    Requires k >= 2: the one-member simplex is a trivial semiring whose
    constant is a two-sided identity, which this analysis excludes.
    """
    if s.k < 2:
        raise ValueError("left-identity analysis needs at least two vertices")
    ris = right_identities(s, cap)
    assert len(ris) >= 1, "a simplex always has a right identity"
    if len(ris) >= 2:
        return LeftIdentityReport(
            simplex=s, exists=False, colliding=(ris.members[0], ris.members[1])
        )
    eps = ris.members[0]
    if s.is_full():
        # the identity map: a genuine two-sided identity
        return LeftIdentityReport(simplex=s, exists=True, two_sided=eps)
    a0, a1 = s.vertices[0], s.vertices[1]
    if a0 >= 1:
        alpha = Endo(s.n, (a0,) * a0 + (a1,) * (s.n - a0))
        product = eps * alpha
        assert product != alpha
        return LeftIdentityReport(
            simplex=s, exists=False, witness=(eps, alpha, product)
        )
    # vertices are 0..k-1 with k < n: the standard witness degenerates to a
    # constant; scan for the least member eps fails to fix
    for alpha in s.elements(cap).members:
        product = eps * alpha
        if product != alpha:
            return LeftIdentityReport(
                simplex=s, exists=False, witness=(eps, alpha, product)
            )
    raise AssertionError(
        f"the unique right identity of the proper simplex {s} acts as a left identity"
    )


# -- counting -------------------------------------------------------------------


def catalan(i: int) -> int:
    """The i-th Catalan number, binomial(2i, i) / (i + 1)."""
    if i < 0:
        raise ValueError(f"Catalan numbers need a nonnegative index, got {i}")
    return math.comb(2 * i, i) // (i + 1)


def nilpotent_count(n: int, a: int) -> int:
    """How many endomorphisms of C_n have a power equal to the constant a.

    The count factors through Catalan numbers: C(a) * C(n - a - 1).
    """
    if n < 2:
        raise ValueError(f"nilpotent counting needs chain length >= 2, got {n}")
    if not 0 <= a <= n - 1:
        raise ValueError(f"target value {a} is outside the chain 0..{n - 1}")
    return catalan(a) * catalan(n - a - 1)


def idempotent_count(n: int, fixed: Sequence[int]) -> int:
    """How many idempotents of C_n have exactly the given fixed-point set.

    The set must be nonempty with at most n-1 elements (n >= 3); the count
    is the product of gaps between consecutive fixed points, the empty
    product 1 for a singleton.
    """
    if n < 3:
        raise ValueError(f"idempotent counting needs chain length >= 3, got {n}")
    points = tuple(fixed)
    if not points or any(a >= b for a, b in zip(points, points[1:])):
        raise ValueError(f"fixed points must be nonempty and strictly increasing: {points}")
    if any(not 0 <= p <= n - 1 for p in points):
        raise ValueError(f"fixed points {points} leave the chain 0..{n - 1}")
    if len(points) > n - 1:
        raise ValueError(f"at most {n - 1} fixed points allowed, got {len(points)}")
    result = 1
    for a, b in zip(points, points[1:]):
        result *= b - a
    return result


def right_identity_count(s: Simplex) -> int:
    """Order of the right-identity semiring: product of consecutive vertex gaps."""
    result = 1
    for a, b in zip(s.vertices, s.vertices[1:]):
        result *= b - a
    return result
