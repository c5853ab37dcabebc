from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import elements, even_units
from oracles import oracle_mul, sort_with_sign, to_tuples
from superheap.errors import (
    GeneratorMismatch,
    IndexRangeError,
    NonUnitError,
    ParityError,
    ParseError,
    SuperheapError,
)
from superheap.grassmann import (
    GrassmannElement,
    Parity,
    add,
    apply_hom,
    body_soul,
    compose_homs,
    format_element,
    identity_hom,
    invert_even,
    make_element,
    make_hom,
    mul,
    parity_of,
    parse_element,
    random_element,
    scale,
)

F = Fraction


def el(text, m):
    return parse_element(text, m)


# ---------------------------------------------------------------- make_element


def test_make_element_sorts_with_sign():
    assert make_element(2, [([2, 1], 1)]) == GrassmannElement(2, {0b11: -1})


def test_make_element_repeated_index_is_zero():
    assert make_element(2, [([1, 1], 5)]).is_zero()


def test_make_element_combines_like_terms():
    # oracle: sum of signed sorted terms
    expected = {}
    for idx, c in [([1, 2], 1), ([2, 1], 1)]:
        mono, sign = sort_with_sign(idx)
        expected[mono] = expected.get(mono, 0) + sign * c
    assert expected == {(1, 2): 0}
    assert make_element(3, [([1, 2], 1), ([2, 1], 1)]).is_zero()


@pytest.mark.parametrize("m, terms", [(2, [([3], 1)]), (2, [([0], 1)]), (33, [])])
def test_make_element_rejects(m, terms):
    with pytest.raises((IndexRangeError, SuperheapError)):
        make_element(m, terms)


# ---------------------------------------------------------------- add / scale


def test_add_examples(e):
    x1 = e(2, 1)
    assert add(x1, -x1).is_zero()
    assert add(el("1 + e1^e2", 2), el("1", 2)) == el("2 + e1^e2", 2)
    s = add(e(2, 1), e(2, 2))
    assert len(s.terms) == 2


def test_add_mismatch():
    with pytest.raises(GeneratorMismatch):
        add(GrassmannElement(1), GrassmannElement(2))


def test_scale_examples(e):
    assert scale(0, e(1, 1)).is_zero()
    assert scale(-1, el("2 + e1^e2", 2)) == el("-2 - e1^e2", 2)
    assert scale(F(1, 2), el("3*e2", 2)) == el("3/2*e2", 2)


# ---------------------------------------------------------------- mul


def test_anticommutation(e):
    x1, x2 = e(2, 1), e(2, 2)
    assert mul(x1, x2) == el("e1^e2", 2)
    assert mul(x2, x1) == el("-e1^e2", 2)


def test_odd_square_vanishes():
    a = el("e1 + e2^e3^e4", 4)
    assert mul(a, a).is_zero()


def test_mul_unit_product():
    a, b = el("2 + e1^e2", 2), el("1/2 - 1/4*e1^e2", 2)
    assert oracle_mul(a, b) == {(): F(1)}
    assert mul(a, b) == GrassmannElement.constant(2, 1)


def test_mul_mismatch():
    with pytest.raises(GeneratorMismatch):
        mul(GrassmannElement(1), GrassmannElement(2))


@given(st.integers(0, 4).flatmap(lambda m: st.tuples(elements(m=m), elements(m=m))))
def test_mul_matches_oracle(pair):
    a, b = pair
    assert to_tuples(a * b) == oracle_mul(a, b)


@given(st.integers(0, 5).flatmap(lambda m: st.tuples(elements(m=m), elements(m=m), elements(m=m))))
def test_associativity(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)


@given(
    st.integers(0, 5).flatmap(
        lambda m: st.tuples(
            st.integers(0, 1).flatmap(lambda p: st.tuples(st.just(p), elements(m=m, parity=p))),
            st.integers(0, 1).flatmap(lambda p: st.tuples(st.just(p), elements(m=m, parity=p))),
        )
    )
)
def test_supercommutativity(t):
    (pa, a), (pb, b) = t
    assert a * b == scale((-1) ** (pa * pb), b * a)


@given(st.integers(0, 5).flatmap(lambda m: elements(m=m, parity=1)))
def test_odd_nilpotent(a):
    assert (a * a).is_zero()


@given(st.integers(0, 5).flatmap(lambda m: elements(m=m)))
def test_soul_nilpotent(a):
    _, s = body_soul(a)
    assert (s ** (a.m + 1)).is_zero()


# ---------------------------------------------------------------- parity / body


@pytest.mark.parametrize(
    "text, m, parity",
    [
        ("e1^e2", 2, Parity.EVEN),
        ("e1 + e2^e3^e4", 4, Parity.ODD),
        ("1 + e1", 1, Parity.MIXED),
        ("0", 3, Parity.EVEN),
    ],
)
def test_parity_of(text, m, parity):
    assert parity_of(el(text, m)) is parity


def test_body_soul():
    assert body_soul(el("2 + e1^e2", 2)) == (2, el("e1^e2", 2))
    assert body_soul(el("e1", 1)) == (0, el("e1", 1))
    assert body_soul(el("7", 0)) == (7, GrassmannElement(0))


# ---------------------------------------------------------------- invert_even


def test_invert_even_examples():
    one = GrassmannElement.constant(2, 1)
    assert invert_even(one) == one
    inv = invert_even(el("2 + e1^e2", 2))
    assert inv == el("1/2 - 1/4*e1^e2", 2)
    assert oracle_mul(el("2 + e1^e2", 2), inv) == {(): F(1)}


def test_invert_even_errors():
    with pytest.raises(NonUnitError):
        invert_even(el("e1^e2", 2))
    with pytest.raises(ParityError):
        invert_even(el("1 + e1", 2))


def test_invert_even_deep_soul():
    # soul^2 != 0 needs m >= 4
    a = el("3 + e1^e2 + e3^e4 - 2*e1^e2^e3^e4", 4)
    inv = invert_even(a)
    assert a * inv == GrassmannElement.constant(4, 1)


@given(st.integers(0, 6).flatmap(even_units))
def test_inversion_two_sided(a):
    inv = invert_even(a)
    one = GrassmannElement.constant(a.m, 1)
    assert a * inv == one
    assert inv * a == one


# ---------------------------------------------------------------- homomorphisms


def test_make_hom_examples():
    h = make_hom(1, 2, [el("e1", 2)])
    assert h.images == (el("e1", 2),)
    make_hom(2, 3, [el("e1", 3), el("e2 + e1^e2^e3", 3)])
    with pytest.raises(ParityError):
        make_hom(1, 2, [el("1 + e1", 2)])
    with pytest.raises(SuperheapError):
        make_hom(2, 2, [el("e1", 2)])
    with pytest.raises(GeneratorMismatch):
        make_hom(1, 2, [el("e1", 3)])


def test_apply_hom_examples():
    h = make_hom(2, 2, [el("e1", 2), el("e2", 2)])
    assert apply_hom(h, el("5", 2)) == el("5", 2)
    assert apply_hom(h, el("e1^e2", 2)) == el("e1^e2", 2)
    g = make_hom(2, 2, [el("e1 + e2", 2), el("e1", 2)])
    # (e1 + e2) e1 = e2 e1 = -e1 e2
    assert apply_hom(g, el("e1^e2", 2)) == el("-e1^e2", 2)


def test_apply_hom_mismatch():
    h = identity_hom(2)
    with pytest.raises(GeneratorMismatch):
        apply_hom(h, GrassmannElement(3))


@st.composite
def homs(draw, m):
    t = draw(st.integers(0, 5))
    imgs = [draw(elements(m=t, parity=1)) for _ in range(m)]
    return make_hom(m, t, imgs)


@given(
    st.integers(0, 4).flatmap(
        lambda m: st.tuples(homs(m), elements(m=m), elements(m=m))
    )
)
def test_hom_is_multiplicative_and_unital(t):
    h, a, b = t
    assert apply_hom(h, a * b) == apply_hom(h, a) * apply_hom(h, b)
    assert apply_hom(h, a + b) == apply_hom(h, a) + apply_hom(h, b)
    one = GrassmannElement.constant(h.source_generators, 1)
    assert apply_hom(h, one) == GrassmannElement.constant(h.target_generators, 1)


@given(
    st.integers(0, 4).flatmap(
        lambda m: st.tuples(homs(m), st.integers(0, 1).flatmap(lambda p: elements(m=m, parity=p)))
    )
)
def test_hom_preserves_parity(t):
    h, a = t
    img = apply_hom(h, a)
    if not img.is_zero():
        assert parity_of(img) is parity_of(a)


@given(st.integers(0, 3).flatmap(lambda m: st.tuples(homs(m), elements(m=m))))
def test_compose_homs(t):
    g, a = t
    h = make_hom(g.target_generators, g.target_generators + 1, [
        GrassmannElement.generator(g.target_generators + 1, i + 1)
        - GrassmannElement.generator(g.target_generators + 1, g.target_generators + 1)
        for i in range(g.target_generators)
    ])
    assert apply_hom(compose_homs(h, g), a) == apply_hom(h, apply_hom(g, a))


# ---------------------------------------------------------------- codec


def test_parse_format_examples():
    assert parse_element("1/2 - 1/4*e1^e2", 2) == invert_even(el("2 + e1^e2", 2))
    assert format_element(GrassmannElement(3)) == "0"
    assert parse_element("e2^e1", 2) == make_element(2, [([1, 2], -1)])
    assert format_element(el("e1^e2 + 3 - e2 + 1/2*e1", 2)) == "3 + 1/2*e1 - e2 + e1^e2"
    assert format_element(el("-e1", 1)) == "-e1"
    assert format_element(el(" 2 *e1 ^ e2", 2)) == "2*e1^e2"


def test_format_orders_by_degree_then_lex():
    a = el("e2^e3 + e1^e4 + e3 + e1^e2^e3 + e1", 4)
    assert format_element(a) == "e1 + e3 + e1^e4 + e2^e3 + e1^e2^e3"


@pytest.mark.parametrize(
    "text, exc, pos",
    [
        ("1 +", ParseError, 3),
        ("1 ** e1", ParseError, 3),
        ("x1", ParseError, 0),
        ("1/0", ParseError, 2),
        ("e", ParseError, 1),
        ("e1 e2", ParseError, 3),
    ],
)
def test_parse_errors_carry_position(text, exc, pos):
    with pytest.raises(exc) as info:
        parse_element(text, 2)
    assert info.value.pos == pos


def test_parse_index_out_of_range():
    with pytest.raises(IndexRangeError):
        parse_element("e3", 2)


@given(st.integers(0, 6).flatmap(lambda m: elements(m=m, max_terms=8)))
def test_codec_roundtrip(a):
    assert parse_element(format_element(a), a.m) == a


# ---------------------------------------------------------------- random_element


def test_random_element_odd_support():
    a = random_element(2, Parity.ODD, 2, [1, -1], 7)
    assert set(a.terms) <= {0b01, 0b10}
    assert parity_of(a) is Parity.ODD or a.is_zero()


def test_random_element_constant_when_no_generators():
    a = random_element(0, Parity.EVEN, 1, [1, 2], 3)
    assert set(a.terms) <= {0}
    assert not a.is_zero()


@given(st.integers(0, 2**32), st.integers(0, 8), st.sampled_from([Parity.EVEN, Parity.ODD]))
def test_random_element_deterministic(seed, m, parity):
    a = random_element(m, parity, 4, [1, -1, F(1, 2)], seed)
    assert a == random_element(m, parity, 4, [1, -1, F(1, 2)], seed)
    assert a.is_zero() or parity_of(a) is parity


def test_random_element_rejects_mixed():
    with pytest.raises(ParityError):
        random_element(2, Parity.MIXED, 1, [1], 0)


def test_elements_are_hashable_and_immutable():
    a = el("1 + e1^e2", 2)
    assert hash(a) == hash(el("e1^e2 + 1", 2))
    with pytest.raises(TypeError):
        a.terms[0] = 5
