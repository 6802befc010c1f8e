"""Acceptance criteria: exact-value and sweep checks at their stated bounds.

Each test prints one PASS/FAIL line with its runtime; budgets are part of
the contract.  Sweeps reuse the claim functions behind `verify` so the
command line and this suite check the same code paths.
"""

import time
from contextlib import contextmanager

from endosimplex import (
    BlockLabel,
    Endo,
    EndoSet,
    Simplex,
    all_endos,
    catalan,
    classify,
    closure_check,
    format_endo,
    parse_endo,
    partition,
    type_of,
)
from endosimplex.verify import (
    _claim_dn1_commutative_nilpotent,
    _claim_dn1_subsemiring,
    _claim_dn2_subsemiring_internal,
    _claim_face_left_ideal,
    _claim_face_not_right_ideal,
    _claim_idempotent_census,
    _claim_interior_boundary,
    _claim_layer_partition,
    _claim_lift_closure,
    _claim_middle_face_complement,
    _claim_nilpotent_catalan,
    _claim_no_left_identity,
    _claim_partition_integrity,
    _claim_right_identity_law,
    _claim_simplex_subsemiring,
    _claim_union1_right_ideal,
    _claim_union1_two_sided_internal,
    _claim_union2_right_ideal_internal,
    _claim_union2_two_sided_doubly_internal,
    _claim_vertex_fixing_neighborhood,
)

CAP = 10**6


@contextmanager
def criterion(name: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL after {time.perf_counter() - start:.2f}s")
        raise
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {name}: PASS in {elapsed:.2f}s (budget {budget_s:g}s)")
    assert elapsed < budget_s, f"{name} exceeded its {budget_s}s budget"


def run_claims(*claims, n_top, seed=0):
    for claim in claims:
        counterexample = claim(n_top, seed, CAP)
        assert counterexample is None, f"{claim.__name__}: {counterexample}"


def test_criterion_1_worked_example():
    with criterion("1 worked-example", 1.0):
        s = Simplex(10, (0, 2, 3, 5, 8))
        alpha = parse_endo("0_4 2_2 8_4", 10)
        beta = parse_endo("0_3 2_2 3_3 8_2", 10)

        assert format_endo(alpha**2) == "0_6 8_4"
        assert format_endo(beta**2) == "0_5 2_3 8_2"
        assert format_endo(beta**3) == "0_8 8_2"
        assert format_endo(alpha * beta) == "0_6 8_4"
        assert format_endo(beta * alpha) == "0_8 8_2"

        assert type_of(s, alpha).values == (0, 0, 0, 1, 4)
        assert type_of(s, beta).values == (0, 0, 1, 2, 4)

        iota = Endo(5, (0, 0, 0, 0, 4))
        expected_label = BlockLabel("IC", signature=iota)
        assert classify(s, alpha) == expected_label
        assert classify(s, beta) == expected_label

        root_semiring = {
            phi for phi in all_endos(5) if phi.eventual_idempotent()[0] == iota
        }
        assert len(root_semiring) == 5 == catalan(3)
        for a in root_semiring:
            for b in root_semiring:
                assert a + b in root_semiring
                assert a * b in root_semiring


def test_criterion_2_catalan_nilpotent_counts():
    with criterion("2 catalan-nilpotent-counts", 30.0):
        run_claims(_claim_nilpotent_catalan, n_top=8)


def test_criterion_3_idempotent_census():
    with criterion("3 idempotent-census", 30.0):
        run_claims(_claim_idempotent_census, n_top=7)


def test_criterion_4_right_and_left_identities():
    with criterion("4 right-and-left-identities", 60.0):
        run_claims(_claim_right_identity_law, _claim_no_left_identity, n_top=7)


def test_criterion_5_structure_sweep():
    with criterion("5 structure-sweep", 300.0):
        run_claims(
            _claim_simplex_subsemiring,
            _claim_face_left_ideal,
            _claim_face_not_right_ideal,
            _claim_interior_boundary,
            _claim_layer_partition,
            _claim_dn1_subsemiring,
            _claim_union1_right_ideal,
            _claim_dn2_subsemiring_internal,
            _claim_union2_right_ideal_internal,
            _claim_union1_two_sided_internal,
            _claim_dn1_commutative_nilpotent,
            _claim_vertex_fixing_neighborhood,
            n_top=6,
        )
        run_claims(_claim_union2_two_sided_doubly_internal, n_top=7)


def test_criterion_6_lifting():
    with criterion("6 lifting", 120.0):
        run_claims(_claim_lift_closure, n_top=5, seed=0)


def test_criterion_7_partition_integrity():
    with criterion("7 partition-integrity", 120.0):
        run_claims(_claim_partition_integrity, n_top=6)

        # the closure-block contract is the joint one: two roots of
        # (2,2,2,5,5,5) in the full 6-chain simplex sum to the idempotent
        # itself, so the closure block alone cannot be required add-closed
        s = Simplex.full(6)
        report = partition(s)
        assert report.all_pass()
        iota = Endo(6, (2, 2, 2, 5, 5, 5))
        block = report.blocks[BlockLabel("IC", signature=iota)]
        a = next(e for e in block if type_of(s, e).values == (1, 2, 2, 5, 5, 5))
        b = next(e for e in block if type_of(s, e).values == (2, 2, 2, 4, 5, 5))
        assert type_of(s, a + b) == iota
        assert (a + b) not in block


def test_criterion_8_middle_face_counterexample():
    with criterion("8 middle-face-counterexample", 5.0):
        run_claims(_claim_middle_face_complement, n_top=7)

        # cross-check the engine verdict on the small cases: the complement
        # itself fails mul-closure
        for n in (3, 4):
            full = Simplex.full(n)
            for mid in range(1, n - 1):
                face = Simplex(n, tuple(v for v in range(n) if v != mid))
                face_members = set(face.elements().members)
                complement = [
                    e for e in full.elements().members if e not in face_members
                ]
                rep = closure_check(EndoSet(full, tuple(complement)), full)
                assert not rep.mul_closed
                w = rep.witness("mul")
                assert w.pair[0] * w.pair[1] == w.result
                assert w.result in face_members
