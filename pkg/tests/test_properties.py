"""Randomized structural properties at chain lengths beyond the sweeps."""

from hypothesis import given, settings
from hypothesis import strategies as st

from endosimplex import (
    RUN_LENGTH,
    TUPLE,
    Endo,
    Simplex,
    format_endo,
    parse_endo,
    type_of,
)


@st.composite
def endos(draw, max_n=24, n=None):
    length = n if n is not None else draw(st.integers(min_value=1, max_value=max_n))
    values = sorted(
        draw(
            st.lists(
                st.integers(min_value=0, max_value=length - 1),
                min_size=length,
                max_size=length,
            )
        )
    )
    return Endo(length, tuple(values))


@st.composite
def endo_triples(draw, max_n=16):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return tuple(draw(endos(n=n)) for _ in range(3))


@st.composite
def simplex_with_members(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    vertices = tuple(sorted(draw(st.permutations(range(n)))[:k]))
    s = Simplex(n, vertices)
    members = tuple(
        Endo(
            n,
            tuple(
                sorted(
                    draw(
                        st.lists(
                            st.sampled_from(vertices), min_size=n, max_size=n
                        )
                    )
                )
            ),
        )
        for _ in range(2)
    )
    return s, members


@given(endos())
def test_notation_roundtrip(e):
    assert parse_endo(format_endo(e, RUN_LENGTH), e.n) == e
    assert parse_endo(format_endo(e, TUPLE), e.n) == e


@given(endo_triples())
def test_semiring_laws(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a + a == a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(endo_triples())
def test_composition_reads_left_to_right(triple):
    a, b, _ = triple
    prod = a * b
    assert all(prod(x) == b(a(x)) for x in range(a.n))


@settings(max_examples=60)
@given(endos(max_n=32))
def test_idempotent_power_within_chain_length(e):
    idem, m = e.eventual_idempotent()
    assert 1 <= m <= e.n
    assert idem * idem == idem
    assert e**m == idem


@settings(max_examples=60)
@given(endos(max_n=32))
def test_nilpotency_agrees_with_idempotent_power(e):
    nil = e.nilpotency()
    idem, m = e.eventual_idempotent()
    assert (nil is not None) == idem.is_constant()
    if nil is not None:
        assert nil == (idem.values[0], m)


@given(simplex_with_members())
def test_type_is_a_homomorphism(data):
    s, (a, b) = data
    assert type_of(s, a + b) == type_of(s, a) + type_of(s, b)
    assert type_of(s, a * b) == type_of(s, a) * type_of(s, b)
