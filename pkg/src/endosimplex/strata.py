"""Layers, discrete vertex neighborhoods, and brute-force closure verdicts.

For a vertex value a of a simplex, the members hitting a at exactly s of
the n chain positions form the s-th layer (s = 0..n; layer n is the
vertex constant alone, layer 0 the face omitting the vertex).  The
discrete t-neighborhood of the vertex collects the t top layers together
with the constant - the members "nearest" to the vertex - and the unions
of these neighborhoods over all vertices are the right ideals this
package verifies.

``closure_check`` is the verification engine: it decides, by exhaustive
iteration, whether a candidate subset of a simplex is closed under
addition and multiplication and whether it absorbs ambient multiplication
on either side.  Every false verdict carries the lexicographically least
witness, and witnesses re-evaluate to genuine violations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import Endo, format_endo
from .simplex import DEFAULT_ENUM_CAP, EndoSet, Simplex


def layer(s: Simplex, m: int, count: int, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
    """Members of s taking the value of vertex m at exactly `count` positions."""
    if not 0 <= m <= s.k - 1:
        raise ValueError(f"vertex index {m} outside 0..{s.k - 1}")
    if not 0 <= count <= s.n:
        raise ValueError(f"layer count {count} outside 0..{s.n}")
    a = s.vertices[m]
    return EndoSet(
        s, tuple(e for e in s.elements(cap).members if e.values.count(a) == count)
    )


def neighborhood(s: Simplex, m: int, t: int, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
    """Discrete t-neighborhood of vertex m: the constant plus layers n-t..n-1.

    Equivalently the members hitting the vertex value at n-t or more
    positions; depth t runs from 1 (the constant and the layer just below
    it) to n (the whole simplex).
    """
    if not 0 <= m <= s.k - 1:
        raise ValueError(f"vertex index {m} outside 0..{s.k - 1}")
    if not 1 <= t <= s.n:
        raise ValueError(f"neighborhood depth {t} outside 1..{s.n}")
    a = s.vertices[m]
    least = s.n - t
    return EndoSet(
        s, tuple(e for e in s.elements(cap).members if e.values.count(a) >= least)
    )


def union_neighborhoods(s: Simplex, t: int, cap: int = DEFAULT_ENUM_CAP) -> EndoSet:
    """Union of the discrete t-neighborhoods of all vertices of s."""
    if not 1 <= t <= s.n:
        raise ValueError(f"neighborhood depth {t} outside 1..{s.n}")
    least = s.n - t
    members = tuple(
        e
        for e in s.elements(cap).members
        if any(e.values.count(a) >= least for a in s.vertices)
    )
    return EndoSet(s, members)


# -- closure engine ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ClosureWitness:
    """A pair whose combination escapes the candidate set.

    kind is "add" or "mul" for internal closure failures, "left" for a
    failure of phi * alpha with phi ambient (phi applied first), "right"
    for alpha * phi.  `result` is the escaping combination.
    """

    kind: str
    pair: tuple[Endo, Endo]
    result: Endo

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "pair": [format_endo(self.pair[0]), format_endo(self.pair[1])],
            "result": format_endo(self.result),
        }


@dataclass
class ClosureReport:
    """Verdicts of the brute-force closure/ideal check with witnesses."""

    add_closed: bool
    mul_closed: bool
    left_ideal: bool
    right_ideal: bool
    witnesses: tuple[ClosureWitness, ...] = ()

    @property
    def ideal(self) -> bool:
        return self.left_ideal and self.right_ideal

    def is_subsemiring(self) -> bool:
        return self.add_closed and self.mul_closed

    def witness(self, kind: str) -> ClosureWitness | None:
        for w in self.witnesses:
            if w.kind == kind:
                return w
        return None

    def to_json(self) -> dict:
        return {
            "add_closed": self.add_closed,
            "mul_closed": self.mul_closed,
            "left_ideal": self.left_ideal,
            "right_ideal": self.right_ideal,
            "ideal": self.ideal,
            "witnesses": {w.kind: w.to_json() for w in self.witnesses},
        }


def _add_violation(cand, cset):
    for a in cand:
        for b in cand:
            res = tuple(map(max, a, b))
            if res not in cset:
                return a, b, res
    return None


def _mul_violation(cand, cset):
    for a in cand:
        for b in cand:
            res = tuple(b[x] for x in a)
            if res not in cset:
                return a, b, res
    return None


def _left_violation(amb, cand, cset):
    # phi * alpha with phi ambient: result[i] = alpha[phi[i]]
    for phi in amb:
        for alpha in cand:
            res = tuple(alpha[x] for x in phi)
            if res not in cset:
                return phi, alpha, res
    return None


def _right_violation(cand, amb, cset):
    for alpha in cand:
        for phi in amb:
            res = tuple(phi[x] for x in alpha)
            if res not in cset:
                return alpha, phi, res
    return None


def closure_check(
    candidate: EndoSet, ambient: Simplex, cap: int = DEFAULT_ENUM_CAP
) -> ClosureReport:
    """Exhaustively test a candidate subset of the ambient simplex.

    add/mul closure scan candidate x candidate; the ideal verdicts scan
    against every ambient member on the stated side.  Scans run in
    lexicographic order, so a reported witness is the least one.
    """
    n = ambient.n
    vset = set(ambient.vertices)
    for e in candidate.members:
        if e.n != n or not all(v in vset for v in e.values):
            raise ValueError(f"{e} is not a member of the ambient {ambient}")
    cand = [e.values for e in candidate.members]
    cset = candidate.value_set()
    amb = [e.values for e in ambient.elements(cap).members]

    witnesses = []

    def endo(values):
        return Endo(n, values)

    add_bad = _add_violation(cand, cset)
    if add_bad:
        witnesses.append(ClosureWitness("add", (endo(add_bad[0]), endo(add_bad[1])), endo(add_bad[2])))
    mul_bad = _mul_violation(cand, cset)
    if mul_bad:
        witnesses.append(ClosureWitness("mul", (endo(mul_bad[0]), endo(mul_bad[1])), endo(mul_bad[2])))
    left_bad = _left_violation(amb, cand, cset)
    if left_bad:
        witnesses.append(ClosureWitness("left", (endo(left_bad[0]), endo(left_bad[1])), endo(left_bad[2])))
    right_bad = _right_violation(cand, amb, cset)
    if right_bad:
        witnesses.append(ClosureWitness("right", (endo(right_bad[0]), endo(right_bad[1])), endo(right_bad[2])))

    return ClosureReport(
        add_closed=add_bad is None,
        mul_closed=mul_bad is None,
        left_ideal=left_bad is None,
        right_ideal=right_bad is None,
        witnesses=tuple(witnesses),
    )


# -- neighborhood profiles -----------------------------------------------------


@dataclass
class NeighborhoodProfile:
    """Closure, commutativity, and nilpotency facts about one DN set."""

    depth: int
    members: EndoSet
    add_closed: bool
    mul_closed: bool
    commutative: bool
    all_vertex_nilpotent: bool

    def is_subsemiring(self) -> bool:
        return self.add_closed and self.mul_closed

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "size": len(self.members),
            "add_closed": self.add_closed,
            "mul_closed": self.mul_closed,
            "commutative": self.commutative,
            "all_vertex_nilpotent": self.all_vertex_nilpotent,
        }


@dataclass
class DnReport:
    """dn_properties result: depth-1 profile always, depth-2 when internal."""

    simplex: Simplex
    vertex_index: int
    dn1: NeighborhoodProfile
    dn2: NeighborhoodProfile | None

    def to_json(self) -> dict:
        return {
            "n": self.simplex.n,
            "vertices": list(self.simplex.vertices),
            "vertex_index": self.vertex_index,
            "dn1": self.dn1.to_json(),
            "dn2": self.dn2.to_json() if self.dn2 is not None else None,
        }


def _profile(s: Simplex, m: int, t: int, cap: int) -> NeighborhoodProfile:
    members = neighborhood(s, m, t, cap)
    raw = [e.values for e in members.members]
    rset = members.value_set()
    commutative = all(
        tuple(b[x] for x in a) == tuple(a[x] for x in b) for a in raw for b in raw
    )
    target = s.vertices[m]
    nilpotent = all(
        (nil := e.nilpotency()) is not None and nil[0] == target
        for e in members.members
    )
    return NeighborhoodProfile(
        depth=t,
        members=members,
        add_closed=_add_violation(raw, rset) is None,
        mul_closed=_mul_violation(raw, rset) is None,
        commutative=commutative,
        all_vertex_nilpotent=nilpotent,
    )


def dn_properties(s: Simplex, m: int, cap: int = DEFAULT_ENUM_CAP) -> DnReport:
    """Profile the discrete neighborhoods of vertex m.

    Depth 1 is profiled for every simplex; depth 2 only when the simplex
    is internal, which is when its subsemiring property is asserted.
    """
    dn1 = _profile(s, m, 1, cap)
    dn2 = _profile(s, m, 2, cap) if s.is_internal() and s.n >= 2 else None
    return DnReport(simplex=s, vertex_index=m, dn1=dn1, dn2=dn2)
