"""Suites of machine-checked structural claims with witnessed verdicts.

Every claim sweeps a parameter range (usually all simplices up to a chain
length), decides one structural statement by exhaustive computation, and
reports either a pass or a concrete counterexample.  Claims are grouped
into suites; ``run_suite`` executes one suite and returns a report whose
content (everything except elapsed times) is deterministic for a fixed
seed and bound.

Where a statement has both a formula and a brute-force reading (counting
claims, the right-identity characterization, boundary as a union of
faces), the claim computes both sides independently and compares.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator

from .chain import (
    Endo,
    all_endos,
    constant,
    endo_count,
    format_endo,
    identity,
    parse_endo,
)
from .simplex import DEFAULT_ENUM_CAP, EndoSet, Simplex, all_simplices
from .strata import (
    closure_check,
    dn_properties,
    layer,
    neighborhood,
    union_neighborhoods,
)
from .typemap import (
    BlockLabel,
    coordinate_simplex,
    idempotent_count,
    left_identity,
    lift,
    nilpotent_count,
    partition,
    right_identities,
    right_identity_count,
)

RANDOM_SUBSETS_PER_SIMPLEX = 100
MAX_SWEEP_N = 9


@dataclass
class ClaimResult:
    claim_id: str
    description: str
    params: str
    passed: bool
    counterexample: str | None
    elapsed_s: float

    def to_json(self) -> dict:
        return {
            "id": self.claim_id,
            "description": self.description,
            "params": self.params,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "elapsed_s": round(self.elapsed_s, 3),
        }


@dataclass
class VerificationReport:
    suite: str
    max_n: int | None
    seed: int
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def passed_count(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed_count(self) -> int:
        return len(self.results) - self.passed_count

    def all_passed(self) -> bool:
        return self.failed_count == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "seed": self.seed,
            "claims": [r.to_json() for r in self.results],
            "summary": {
                "total": len(self.results),
                "passed": self.passed_count,
                "failed": self.failed_count,
                "all_passed": self.all_passed(),
            },
        }


@dataclass(frozen=True)
class Claim:
    """One verifiable statement: id, sweep bounds, and a checking function.

    The function receives (n_top, seed, cap) and returns None on success
    or a human-readable counterexample.  n_top is the claim's default
    bound, possibly lowered by the caller's max_n but never raised past
    the claim's hard cap.
    """

    claim_id: str
    description: str
    n_min: int
    n_default: int
    n_hard_cap: int
    fn: Callable[[int, int, int], str | None]
    extra_params: str = ""


def _simplices_upto(n_top: int, n_min: int = 1) -> Iterator[Simplex]:
    for n in range(n_min, n_top + 1):
        yield from all_simplices(n)


def _fmt(e: Endo) -> str:
    return format_endo(e)


# ---------------------------------------------------------------------------
# axioms suite
# ---------------------------------------------------------------------------


def _claim_operation_closure(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(1, n_top + 1):
        endos = all_endos(n)
        for a in endos:
            for b in endos:
                try:
                    a + b
                    a * b
                except ValueError as exc:
                    return f"n={n}: {_fmt(a)}, {_fmt(b)}: {exc}"
    return None


def _claim_semiring_laws(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(1, n_top + 1):
        vals = [e.values for e in all_endos(n)]

        def plus(a, b):
            return tuple(map(max, a, b))

        def times(a, b):
            return tuple(b[x] for x in a)

        for a in vals:
            if plus(a, a) != a:
                return f"n={n}: addition not idempotent at {a}"
            for b in vals:
                if plus(a, b) != plus(b, a):
                    return f"n={n}: addition not commutative at {a}, {b}"
        for a in vals:
            for b in vals:
                ab_plus = plus(a, b)
                ab_times = times(a, b)
                for c in vals:
                    if plus(ab_plus, c) != plus(a, plus(b, c)):
                        return f"n={n}: addition not associative at {a}, {b}, {c}"
                    if times(ab_times, c) != times(a, times(b, c)):
                        return f"n={n}: product not associative at {a}, {b}, {c}"
                    if times(a, plus(b, c)) != plus(times(a, b), times(a, c)):
                        return f"n={n}: left distributivity fails at {a}, {b}, {c}"
                    if times(plus(a, b), c) != plus(times(a, c), times(b, c)):
                        return f"n={n}: right distributivity fails at {a}, {b}, {c}"
    return None


_WORKED_PRODUCTS = (
    ("0_4 2_2 8_4", "0_3 2_2 3_3 8_2", "0_6 8_4"),
    ("0_3 2_2 3_3 8_2", "0_4 2_2 8_4", "0_8 8_2"),
    ("0_4 2_2 8_4", "0_4 2_2 8_4", "0_6 8_4"),
    ("0_3 2_2 3_3 8_2", "0_3 2_2 3_3 8_2", "0_5 2_3 8_2"),
    ("0_5 2_3 8_2", "0_3 2_2 3_3 8_2", "0_8 8_2"),
)


def _claim_composition_convention(n_top: int, seed: int, cap: int) -> str | None:
    for left, right, expected in _WORKED_PRODUCTS:
        a, b = parse_endo(left, 10), parse_endo(right, 10)
        if format_endo(a * b) != expected:
            return f"{left} * {right} = {_fmt(a * b)}, expected {expected}"
    for n in range(1, n_top + 1):
        for a in all_endos(n):
            for b in all_endos(n):
                prod = a * b
                if any(prod(x) != b(a(x)) for x in range(n)):
                    return f"n={n}: ({_fmt(a)} * {_fmt(b)})(x) != b(a(x))"
    return None


def _claim_power_stabilization(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(1, n_top + 1):
        for a in all_endos(n):
            idem, m = a.eventual_idempotent()
            if m > n:
                return f"n={n}: {_fmt(a)} stabilizes only at exponent {m}"
            if a**m != idem or a ** (2 * m) != idem or idem * idem != idem:
                return f"n={n}: power stabilization fails for {_fmt(a)}"
    return None


def _claim_nilpotent_vs_idempotent_power(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(1, n_top + 1):
        for a in all_endos(n):
            nil = a.nilpotency()
            idem, m = a.eventual_idempotent()
            if (nil is not None) != idem.is_constant():
                return f"n={n}: nilpotency/constant-power disagreement for {_fmt(a)}"
            if nil is not None and (idem != constant(n, nil[0]) or m != nil[1]):
                return f"n={n}: nilpotency data mismatch for {_fmt(a)}"
    return None


def _claim_notation_roundtrip(n_top: int, seed: int, cap: int) -> str | None:
    from .chain import NOTATION_STYLES

    for n in range(1, n_top + 1):
        for e in all_endos(n):
            for style in NOTATION_STYLES:
                if parse_endo(format_endo(e, style), n) != e:
                    return f"n={n}: round-trip fails for {e.values} in {style}"
    return None


def _claim_order_formula(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(1, n_top + 1):
        enumerated = len(all_endos(n))
        brute = sum(
            1
            for t in product(range(n), repeat=n)
            if all(t[i] <= t[i + 1] for i in range(n - 1))
        )
        if not enumerated == brute == endo_count(n):
            return f"n={n}: enumerated {enumerated}, brute {brute}, formula {endo_count(n)}"
    return None


# ---------------------------------------------------------------------------
# simplex suite
# ---------------------------------------------------------------------------


def _claim_simplex_subsemiring(n_top: int, seed: int, cap: int) -> str | None:
    from .strata import _add_violation, _mul_violation

    for s in _simplices_upto(n_top):
        es = s.elements(cap)
        raw = [e.values for e in es.members]
        rset = es.value_set()
        if _add_violation(raw, rset) is not None or _mul_violation(raw, rset) is not None:
            return f"{s} is not closed under its own operations"
    return None


def _claim_face_left_ideal(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        for face in s.faces():
            rep = closure_check(face.elements(cap), s, cap)
            if not (rep.add_closed and rep.mul_closed and rep.left_ideal):
                return f"face {face} of {s}: report {rep.to_json()}"
    return None


def _claim_face_not_right_ideal(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        if s.k < 2:
            continue
        for face in s.proper_faces():
            rep = closure_check(face.elements(cap), s, cap)
            if rep.right_ideal:
                return f"proper face {face} of {s} unexpectedly a right ideal"
            w = rep.witness("right")
            alpha, phi = w.pair
            if alpha * phi != w.result or w.result in face.elements(cap):
                return f"right-ideal witness for face {face} of {s} does not re-evaluate"
            # the constant escape promised by the theory: b_s * a_m = a_m
            omitted = next(a for a in s.vertices if a not in face.vertices)
            b = constant(s.n, face.vertices[0])
            if b * constant(s.n, omitted) != constant(s.n, omitted):
                return f"constant escape fails for face {face} of {s}"
    return None


def _claim_interior_boundary(n_top: int, seed: int, cap: int) -> str | None:
    from .strata import _add_violation, _mul_violation

    for s in _simplices_upto(n_top):
        es = s.elements(cap)
        interior = s.interior(cap)
        boundary = s.boundary(cap)
        if set(interior.members) | set(boundary.members) != set(es.members):
            return f"{s}: interior and boundary do not partition the simplex"
        if set(interior.members) & set(boundary.members):
            return f"{s}: interior and boundary overlap"
        union_faces = {e for f in s.proper_faces() for e in f.elements(cap).members}
        if union_faces != set(boundary.members):
            return f"{s}: boundary differs from the union of proper faces"
        raw_i = [e.values for e in interior.members]
        if _add_violation(raw_i, frozenset(raw_i)) is not None:
            return f"{s}: interior not closed under addition"
        raw_b = [e.values for e in boundary.members]
        if _mul_violation(raw_b, frozenset(raw_b)) is not None:
            return f"{s}: boundary not closed under multiplication"
    return None


def _claim_extreme_face_complements(n_top: int, seed: int, cap: int) -> str | None:
    from .strata import _add_violation, _mul_violation

    for n in range(2, n_top + 1):
        full = Simplex.full(n)
        members = set(full.elements(cap).members)
        for face, fixed in ((full.biggest_face(), 0), (full.least_face(), n - 1)):
            complement = members - set(face.elements(cap).members)
            expected = set(full.fixed_subsemiring(fixed, cap).members)
            if complement != expected:
                return f"n={n}: complement of {face} is not the maps fixing {fixed}"
            raw = [e.values for e in sorted(complement)]
            rset = frozenset(raw)
            if _add_violation(raw, rset) or _mul_violation(raw, rset):
                return f"n={n}: complement of {face} is not a subsemiring"
    return None


def _claim_middle_face_complement(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(3, n_top + 1):
        full = Simplex.full(n)
        for mid in range(1, n - 1):
            face = Simplex(n, tuple(v for v in range(n) if v != mid))
            face_members = face.elements(cap).value_set()
            alpha = Endo(n, (0,) * (n - 1) + (mid,))
            if alpha.values in face_members:
                return f"n={n}, mid={mid}: witness sits inside the face"
            square = alpha * alpha
            if square != constant(n, 0):
                return f"n={n}, mid={mid}: witness square is {_fmt(square)}, not the zero constant"
            if square.values not in face_members:
                return f"n={n}, mid={mid}: witness square escaped the face"
    return None


def _claim_simplex_order_formula(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(1, n_top + 1):
        endos = all_endos(n)
        for s in all_simplices(n):
            vset = set(s.vertices)
            brute = sum(1 for e in endos if set(e.values) <= vset)
            if not brute == s.size() == len(s.elements(cap)):
                return (
                    f"{s}: brute {brute}, formula {s.size()}, "
                    f"enumerated {len(s.elements(cap))}"
                )
    return None


# ---------------------------------------------------------------------------
# strata suite
# ---------------------------------------------------------------------------


def _claim_layer_partition(n_top: int, seed: int, cap: int) -> str | None:
    from .strata import _add_violation

    for s in _simplices_upto(n_top):
        members = set(s.elements(cap).members)
        for m in range(s.k):
            seen: set[Endo] = set()
            total = 0
            for count in range(s.n + 1):
                stratum = layer(s, m, count, cap)
                total += len(stratum)
                seen |= set(stratum.members)
                raw = [e.values for e in stratum.members]
                if _add_violation(raw, frozenset(raw)) is not None:
                    return f"{s}, vertex {m}, layer {count}: not add-closed"
            if total != len(members) or seen != members:
                return f"{s}, vertex {m}: layers do not partition the simplex"
    return None


def _claim_dn1_subsemiring(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        for m in range(s.k):
            profile = dn_properties(s, m, cap).dn1
            if not profile.is_subsemiring():
                return f"{s}, vertex {m}: depth-1 neighborhood not a subsemiring"
    return None


def _claim_dn2_subsemiring_internal(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        if not s.is_internal():
            continue
        for m in range(s.k):
            profile = dn_properties(s, m, cap).dn2
            if profile is None or not profile.is_subsemiring():
                return f"internal {s}, vertex {m}: depth-2 neighborhood not a subsemiring"
    return None


def _claim_dn1_commutative_nilpotent(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        if not s.is_internal():
            continue
        for m in range(s.k):
            profile = dn_properties(s, m, cap).dn1
            if not profile.commutative:
                return f"internal {s}, vertex {m}: depth-1 neighborhood not commutative"
            if not profile.all_vertex_nilpotent:
                return f"internal {s}, vertex {m}: depth-1 member not vertex-nilpotent"
    return None


def _claim_union1_right_ideal(n_top: int, seed: int, cap: int) -> str | None:
    # the ideal verdicts are pure absorption flags: a right-absorbing union
    # is automatically mul-closed, but it need not be add-closed
    for s in _simplices_upto(n_top):
        rep = closure_check(union_neighborhoods(s, 1, cap), s, cap)
        if not rep.right_ideal:
            return f"{s}: depth-1 union does not absorb right multiplication"
    return None


def _claim_union2_right_ideal_internal(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        if not s.is_internal():
            continue
        rep = closure_check(union_neighborhoods(s, 2, cap), s, cap)
        if not rep.right_ideal:
            return f"internal {s}: depth-2 union does not absorb right multiplication"
    return None


def _claim_union1_two_sided_internal(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        if not s.is_internal():
            continue
        rep = closure_check(union_neighborhoods(s, 1, cap), s, cap)
        if not rep.ideal:
            return f"internal {s}: depth-1 union does not absorb both-sided multiplication"
    return None


def _claim_union2_two_sided_doubly_internal(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        if not (s.vertices[0] >= 2 and s.vertices[-1] <= s.n - 3):
            continue
        rep = closure_check(union_neighborhoods(s, 2, cap), s, cap)
        if not rep.ideal:
            return f"doubly internal {s}: depth-2 union does not absorb both-sided multiplication"
    return None


def _claim_vertex_fixing_neighborhood(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        a0, ak = s.vertices[0], s.vertices[-1]
        t_low = s.n - a0 - 1
        if t_low >= 1:
            dn = neighborhood(s, 0, t_low, cap)
            fixing = s.fixed_subsemiring(a0, cap)
            if set(dn.members) != set(fixing.members):
                return f"{s}: depth-{t_low} neighborhood of least vertex != maps fixing {a0}"
        else:
            # single-vertex simplex on the top element: both sides are the constant
            if set(s.fixed_subsemiring(a0, cap).members) != {constant(s.n, a0)}:
                return f"{s}: degenerate least-vertex case broken"
        if ak >= 1:
            dn = neighborhood(s, s.k - 1, ak, cap)
            fixing = s.fixed_subsemiring(ak, cap)
            if set(dn.members) != set(fixing.members):
                return f"{s}: depth-{ak} neighborhood of biggest vertex != maps fixing {ak}"
        else:
            if set(s.fixed_subsemiring(ak, cap).members) != {constant(s.n, ak)}:
                return f"{s}: degenerate biggest-vertex case broken"
    return None


def _claim_witness_soundness(n_top: int, seed: int, cap: int) -> str | None:
    def recheck(rep, candidate) -> str | None:
        ops = {
            "add": lambda x, y: x + y,
            "mul": lambda x, y: x * y,
            "left": lambda x, y: x * y,
            "right": lambda x, y: x * y,
        }
        for w in rep.witnesses:
            result = ops[w.kind](w.pair[0], w.pair[1])
            if result != w.result or w.result in candidate:
                return f"{w.kind} witness does not reproduce its violation"
        return None

    for s in _simplices_upto(n_top):
        for face in s.proper_faces():
            es = face.elements(cap)
            bad = recheck(closure_check(es, s, cap), es)
            if bad:
                return f"face {face} of {s}: {bad}"
        # singleton non-idempotent candidates exercise add/mul/left/right witnesses
        for e in s.elements(cap).members:
            if not e.is_idempotent():
                single = EndoSet(s, (e,))
                bad = recheck(closure_check(single, s, cap), single)
                if bad:
                    return f"singleton {{{_fmt(e)}}} in {s}: {bad}"
                break
    return None


# ---------------------------------------------------------------------------
# typemap suite
# ---------------------------------------------------------------------------


def _claim_type_homomorphism(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        index = {a: i for i, a in enumerate(s.vertices)}
        verts = s.vertices
        raw = [e.values for e in s.elements(cap).members]
        types = {v: tuple(index[v[a]] for a in verts) for v in raw}
        for a in raw:
            ta = types[a]
            for b in raw:
                tb = types[b]
                added = tuple(map(max, a, b))
                if tuple(index[added[v]] for v in verts) != tuple(map(max, ta, tb)):
                    return f"{s}: type of sum mismatch at {a}, {b}"
                composed = tuple(b[x] for x in a)
                if tuple(index[composed[v]] for v in verts) != tuple(tb[x] for x in ta):
                    return f"{s}: type of product mismatch at {a}, {b}"
    return None


def _closure_of(base: list[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    """Closure of value tuples under pointwise max and composition."""
    closed = set(base)
    frontier = list(base)
    while frontier:
        fresh: list[tuple[int, ...]] = []
        snapshot = list(closed)
        for a in frontier:
            for b in snapshot:
                for candidate in (
                    tuple(map(max, a, b)),
                    tuple(b[x] for x in a),
                    tuple(a[x] for x in b),
                ):
                    if candidate not in closed:
                        closed.add(candidate)
                        fresh.append(candidate)
        frontier = fresh
    return frozenset(closed)


def _claim_lift_closure(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        coord = coordinate_simplex(s)
        coord_members = coord.elements(cap)
        candidates: list[tuple[str, list[Endo]]] = []
        for face in coord.faces():
            candidates.append((f"face {face}", list(face.elements(cap).members)))
        candidates.append(
            ("depth-1 union", list(union_neighborhoods(coord, 1, cap).members))
        )
        rng = random.Random(f"{seed}:{s.n}:{s.vertices}")
        raw_members = [e.values for e in coord_members.members]
        for i in range(RANDOM_SUBSETS_PER_SIMPLEX):
            base_size = rng.randint(1, max(1, len(raw_members) // 4))
            base = rng.sample(raw_members, min(base_size, len(raw_members)))
            closed = _closure_of(base)
            candidates.append(
                (f"random closed subset {i}", [Endo(coord.n, v) for v in sorted(closed)])
            )
        for name, signatures in candidates:
            source = closure_check(EndoSet(coord, tuple(signatures)), coord, cap)
            lifted = lift(s, signatures, cap)
            target = closure_check(lifted, s, cap)
            # every signature is realized by some member, so each verdict
            # transfers through the type homomorphism in both directions
            for flag in ("add_closed", "mul_closed", "left_ideal", "right_ideal"):
                if getattr(source, flag) != getattr(target, flag):
                    return (
                        f"{s}: candidate {name}: {flag} is "
                        f"{getattr(source, flag)} upstairs but "
                        f"{getattr(target, flag)} for the lift"
                    )
    return None


def _claim_constant_type_lifts(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        k = s.k
        union_sigs = [constant(k, l) for l in range(k)]
        rep = closure_check(lift(s, union_sigs, cap), s, cap)
        if not (rep.add_closed and rep.ideal):
            return f"{s}: union of constant-type blocks is not a two-sided ideal"
        for l in range(k):
            single = closure_check(lift(s, [constant(k, l)], cap), s, cap)
            if not (single.is_subsemiring() and single.left_ideal):
                return f"{s}: constant-type block {l} is not a left ideal"
    return None


def _claim_lift_dn1_union(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        coord = coordinate_simplex(s)
        signatures = list(union_neighborhoods(coord, 1, cap).members)
        rep = closure_check(lift(s, signatures, cap), s, cap)
        if not rep.right_ideal:
            return f"{s}: lift of the coordinate depth-1 union does not absorb right multiplication"
    return None


def _nilpotent_signatures(k: int, target: int) -> list[Endo]:
    return [
        sig
        for sig in all_endos(k)
        if (nil := sig.nilpotency()) is not None and nil[0] == target
    ]


def _claim_partition_integrity(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        report = partition(s, cap)
        if not report.all_pass():
            return f"{s}: partition contracts fail: {report.to_json()['checks']}"
        for label, block in report.blocks.items():
            if label.kind == "N":
                expected = lift(s, _nilpotent_signatures(s.k, label.vertex), cap)
                if set(block.members) != set(expected.members):
                    return f"{s}: block {label.canonical(s)} differs from its lifted set"
        ri_block = report.blocks.get(BlockLabel("RI"))
        ris = right_identities(s, cap)
        if s.k >= 2:
            if ri_block is None or set(ri_block.members) != set(ris.members):
                return f"{s}: right-identity block mismatch"
        if len(ris) != right_identity_count(s):
            return f"{s}: right-identity census {len(ris)} != formula {right_identity_count(s)}"
    return None


def _claim_right_identity_law(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        ris = right_identities(s, cap)
        if len(ris) == 0:
            return f"{s}: no right identity found"
        interior_idempotents = {
            e for e in s.interior(cap).members if e.is_idempotent()
        }
        if set(ris.members) != interior_idempotents:
            return f"{s}: right identities differ from interior idempotents"
        if len(ris) != right_identity_count(s):
            return f"{s}: order {len(ris)} != gap product {right_identity_count(s)}"
    return None


def _claim_no_left_identity(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        if s.k < 2:
            continue
        members = s.elements(cap).members
        raw = [e.values for e in members]
        has_left = any(
            all(tuple(beta[x] for x in alpha) == beta for beta in raw)
            for alpha in raw
        )
        report = left_identity(s, cap)
        if s.is_full():
            if not has_left or not report.exists or report.two_sided != identity(s.n):
                return f"{s}: the full simplex should expose its two-sided identity"
            continue
        if has_left:
            return f"proper {s}: a left identity exists after all"
        if report.exists:
            return f"proper {s}: analysis wrongly reports a left identity"
        if report.colliding is not None:
            e1, e2 = report.colliding
            ris = right_identities(s, cap)
            if e1 == e2 or e1 not in ris or e2 not in ris:
                return f"{s}: colliding right identities do not re-evaluate"
        else:
            eps, alpha, prod = report.witness
            if eps * alpha != prod or prod == alpha or eps not in right_identities(s, cap):
                return f"{s}: left-identity witness does not re-evaluate"
    return None


def _claim_identity_root_free(n_top: int, seed: int, cap: int) -> str | None:
    for k in range(1, n_top + 1):
        ident = identity(k)
        for phi in all_endos(k):
            if phi.eventual_idempotent()[0] == ident and phi != ident:
                return f"k={k}: {_fmt(phi)} is a nontrivial root of the identity"
    return None


# ---------------------------------------------------------------------------
# counts suite
# ---------------------------------------------------------------------------


def _claim_nilpotent_catalan(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(2, n_top + 1):
        census: dict[int, int] = {a: 0 for a in range(n)}
        for e in all_endos(n):
            nil = e.nilpotency()
            if nil is not None:
                census[nil[0]] += 1
        for a in range(n):
            if census[a] != nilpotent_count(n, a):
                return (
                    f"n={n}, a={a}: census {census[a]} != formula {nilpotent_count(n, a)}"
                )
    return None


def _claim_idempotent_census(n_top: int, seed: int, cap: int) -> str | None:
    for n in range(3, n_top + 1):
        census: dict[tuple[int, ...], int] = {}
        for e in all_endos(n):
            if e.is_idempotent():
                census[e.fixed_points()] = census.get(e.fixed_points(), 0) + 1
        for size in range(1, n):
            for fixed in combinations(range(n), size):
                if census.get(fixed, 0) != idempotent_count(n, fixed):
                    return (
                        f"n={n}, fixed={fixed}: census {census.get(fixed, 0)} != "
                        f"formula {idempotent_count(n, fixed)}"
                    )
    return None


def _claim_right_identity_order(n_top: int, seed: int, cap: int) -> str | None:
    for s in _simplices_upto(n_top):
        ris = right_identities(s, cap)
        if len(ris) != right_identity_count(s) or len(ris) == 0:
            return f"{s}: order {len(ris)} != formula {right_identity_count(s)}"
    return None


def _claim_catalan_sequence(n_top: int, seed: int, cap: int) -> str | None:
    from .typemap import catalan

    frozen = (1, 1, 2, 5, 14)
    if tuple(catalan(i) for i in range(5)) != frozen:
        return f"leading Catalan numbers are {[catalan(i) for i in range(5)]}"
    # independent oracle: the convolution recurrence
    recurrence = [1]
    for i in range(15):
        recurrence.append(sum(recurrence[j] * recurrence[i - j] for j in range(i + 1)))
    for i, expected in enumerate(recurrence):
        if catalan(i) != expected:
            return f"catalan({i}) = {catalan(i)} != recurrence value {expected}"
    return None


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


def _claims(*rows) -> tuple[Claim, ...]:
    return tuple(Claim(*row) for row in rows)


SUITES: dict[str, tuple[Claim, ...]] = {
    "axioms": _claims(
        (
            "chain.operation-closure",
            "sums and products of valid endomorphisms are valid",
            1, 5, 6, _claim_operation_closure,
        ),
        (
            "chain.semiring-laws",
            "addition commutative/associative/idempotent, product associative, both distributive laws",
            1, 4, 4, _claim_semiring_laws,
        ),
        (
            "chain.composition-convention",
            "(a * b)(x) = b(a(x)), pinned by the five worked products",
            1, 4, 5, _claim_composition_convention,
        ),
        (
            "chain.power-stabilization",
            "every endomorphism has an idempotent power by exponent n",
            1, 5, 6, _claim_power_stabilization,
        ),
        (
            "chain.nilpotent-vs-idempotent-power",
            "a power is constant exactly when the idempotent power is constant",
            1, 5, 6, _claim_nilpotent_vs_idempotent_power,
        ),
        (
            "chain.notation-roundtrip",
            "parse after format is the identity in both notations",
            1, 5, 7, _claim_notation_roundtrip,
        ),
        (
            "chain.order-formula",
            "the semiring order is binomial(2n-1, n), against brute enumeration",
            1, 7, 7, _claim_order_formula,
        ),
    ),
    "simplex": _claims(
        (
            "simplex.subsemiring",
            "every simplex is closed under addition and multiplication",
            1, 6, 7, _claim_simplex_subsemiring,
        ),
        (
            "simplex.face-left-ideal",
            "every face is add/mul closed and absorbs ambient left multiplication",
            1, 6, 6, _claim_face_left_ideal,
        ),
        (
            "simplex.face-not-right-ideal",
            "no proper face is a right ideal; the witness re-evaluates",
            2, 6, 6, _claim_face_not_right_ideal,
        ),
        (
            "simplex.interior-boundary",
            "interior add-closed, boundary mul-closed and equal to the union of proper faces",
            1, 6, 7, _claim_interior_boundary,
        ),
        (
            "simplex.extreme-face-complements",
            "complements of the extreme facets of the full simplex are the endpoint-fixing subsemirings",
            2, 6, 7, _claim_extreme_face_complements,
        ),
        (
            "simplex.middle-face-complement",
            "middle-facet complements of the full simplex fail closure at the pinned witness",
            3, 7, 8, _claim_middle_face_complement,
        ),
        (
            "simplex.order-formula",
            "simplex size is binomial(n+k-1, n), against image-filtered enumeration",
            1, 7, 7, _claim_simplex_order_formula,
        ),
    ),
    "strata": _claims(
        (
            "strata.layer-partition",
            "layers 0..n partition the simplex per vertex and are add-closed",
            1, 6, 6, _claim_layer_partition,
        ),
        (
            "strata.dn1-subsemiring",
            "every depth-1 neighborhood is a subsemiring",
            1, 6, 7, _claim_dn1_subsemiring,
        ),
        (
            "strata.dn2-subsemiring-internal",
            "every depth-2 neighborhood of an internal simplex is a subsemiring",
            1, 6, 7, _claim_dn2_subsemiring_internal,
        ),
        (
            "strata.dn1-commutative-nilpotent",
            "on internal simplices depth-1 neighborhoods are commutative with vertex-nilpotent members",
            1, 6, 7, _claim_dn1_commutative_nilpotent,
        ),
        (
            "strata.union1-right-ideal",
            "the union of depth-1 neighborhoods is a right ideal of every simplex",
            1, 6, 7, _claim_union1_right_ideal,
        ),
        (
            "strata.union2-right-ideal-internal",
            "the union of depth-2 neighborhoods is a right ideal of every internal simplex",
            1, 6, 7, _claim_union2_right_ideal_internal,
        ),
        (
            "strata.union1-two-sided-internal",
            "on internal simplices the depth-1 union is a two-sided ideal",
            1, 6, 7, _claim_union1_two_sided_internal,
        ),
        (
            "strata.union2-two-sided-doubly-internal",
            "with both endpoints at distance two the depth-2 union is a two-sided ideal",
            5, 7, 7, _claim_union2_two_sided_doubly_internal,
        ),
        (
            "strata.vertex-fixing-neighborhood",
            "extreme-vertex neighborhoods at the prescribed depth are the vertex-fixing subsets",
            1, 6, 7, _claim_vertex_fixing_neighborhood,
        ),
        (
            "strata.witness-soundness",
            "every reported witness re-evaluates to a genuine violation",
            1, 5, 6, _claim_witness_soundness,
        ),
    ),
    "typemap": _claims(
        (
            "typemap.type-homomorphism",
            "taking types preserves sums and products",
            1, 6, 6, _claim_type_homomorphism,
        ),
        (
            "typemap.lift-closure",
            "lifts of closed coordinate sets are closed; lifted ideals stay ideals",
            1, 5, 5, _claim_lift_closure,
        ),
        (
            "typemap.constant-type-lifts",
            "the union of constant-type blocks is a two-sided ideal; each block a left ideal",
            1, 6, 6, _claim_constant_type_lifts,
        ),
        (
            "typemap.lift-dn1-union",
            "the lift of the coordinate depth-1 union is a right ideal",
            1, 6, 6, _claim_lift_dn1_union,
        ),
        (
            "typemap.partition-integrity",
            "partition blocks are disjoint, cover, honor their closure contracts, and match their lifts",
            1, 6, 6, _claim_partition_integrity,
        ),
        (
            "typemap.right-identity-law",
            "right identities are exactly the interior idempotents, counted by the gap product",
            1, 7, 7, _claim_right_identity_law,
        ),
        (
            "typemap.no-left-identity",
            "no proper simplex has a left identity; the full simplex has a two-sided one",
            2, 7, 7, _claim_no_left_identity,
        ),
        (
            "typemap.identity-root-free",
            "the identity has no nontrivial roots in any coordinate semiring",
            1, 6, 7, _claim_identity_root_free,
        ),
    ),
    "counts": _claims(
        (
            "counts.nilpotent-catalan",
            "vertex-nilpotent census matches the Catalan product formula",
            2, 8, 8, _claim_nilpotent_catalan,
        ),
        (
            "counts.idempotent-census",
            "idempotents grouped by exact fixed-point set match the gap product",
            3, 7, 7, _claim_idempotent_census,
        ),
        (
            "counts.right-identity-order",
            "right-identity sets are nonempty with gap-product order",
            1, 7, 7, _claim_right_identity_order,
        ),
        (
            "counts.catalan-sequence",
            "Catalan values match the convolution recurrence",
            0, 0, 0, _claim_catalan_sequence,
        ),
    ),
}

SUITES["all"] = tuple(claim for suite in ("axioms", "simplex", "strata", "typemap", "counts") for claim in SUITES[suite])

SUITE_NAMES = tuple(SUITES)


def run_claim(claim: Claim, max_n: int | None, seed: int, cap: int) -> ClaimResult:
    if max_n is None:
        top = claim.n_default
    else:
        top = min(max_n, claim.n_hard_cap)
    start = time.perf_counter()
    if top < claim.n_min and claim.n_default > 0:
        counterexample = None
        params = f"skipped (max_n={max_n} below minimum {claim.n_min})"
    else:
        counterexample = claim.fn(top, seed, cap)
        params = f"n={claim.n_min}..{top}" if claim.n_default > 0 else "fixed"
        if claim.extra_params:
            params += f", {claim.extra_params}"
    elapsed = time.perf_counter() - start
    return ClaimResult(
        claim_id=claim.claim_id,
        description=claim.description,
        params=params,
        passed=counterexample is None,
        counterexample=counterexample,
        elapsed_s=elapsed,
    )


def run_suite(
    suite: str,
    max_n: int | None = None,
    seed: int = 0,
    cap: int = DEFAULT_ENUM_CAP,
    progress: Callable[[ClaimResult], None] | None = None,
) -> VerificationReport:
    """Execute every claim of a suite and collect the report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if max_n is not None and not 1 <= max_n <= MAX_SWEEP_N:
        raise ValueError(f"max_n must be within 1..{MAX_SWEEP_N}")
    report = VerificationReport(suite=suite, max_n=max_n, seed=seed)
    for claim in SUITES[suite]:
        result = run_claim(claim, max_n, seed, cap)
        report.results.append(result)
        if progress is not None:
            progress(result)
    return report
