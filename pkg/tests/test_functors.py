from fractions import Fraction

import pytest

from superheap.errors import GeneratorMismatch, SuperheapError, UnknownNameError
from superheap.functors import (
    dilation_map,
    groupify,
    groupify_at,
    heapify,
    resolve,
    translation_scaling_endo,
    translation_shift_map,
)
from superheap.harness import SampleConfig, check_group_axioms, check_heap_axioms
from superheap.points import R01, R11, parse_point
from superheap.structures import (
    MULT_GROUP,
    MULT_HEAP,
    R01_HEAP,
    R01_SEMIHEAP,
    TRANS_GROUP,
    TRANS_HEAP,
    GroupStructure,
    PointedTernaryStructure,
    mult_heap_closed_form,
    mult_inv,
    trans_heap_closed_form,
    trans_mul,
)


def P(text, m):
    return parse_point(text, R11, m)


def test_heapify_trans_matches_closed_form():
    H = heapify(TRANS_GROUP)
    args = P("(1; e1)", 2), P("(-1 + e1^e2; e2)", 2), P("(2; e1 - e2)", 2)
    assert H.bracket(*args) == trans_heap_closed_form(*args)
    assert H.basepoint(2) == TRANS_GROUP.identity(2)
    assert H.claims_heap and H.name == "heapify:trans-group"


def test_heapify_mult_matches_closed_form():
    H = heapify(MULT_GROUP)
    args = P("(2; e1)", 2), P("(-1 + e1^e2; e2)", 2), P("(1/2; e1 - e2)", 2)
    assert H.bracket(*args) == mult_heap_closed_form(*args)


def test_heapify_xxy():
    H = heapify(TRANS_GROUP)
    x, y = P("(3; e1 + e2)", 2), P("(1; e2)", 2)
    assert H.bracket(x, x, y) == y


def test_groupify_examples():
    G = groupify(heapify(TRANS_GROUP))
    p, q = P("(1; e1)", 2), P("(2; e2)", 2)
    assert G.mul(p, q) == trans_mul(p, q)
    A = groupify(R01_HEAP)
    a, b = parse_point("(e1)", R01, 2), parse_point("(e2)", R01, 2)
    assert A.mul(a, b) == parse_point("(e1 + e2)", R01, 2)
    M = groupify(heapify(MULT_GROUP))
    r = P("(2 - e1^e2; e1)", 2)
    assert M.inv(r) == mult_inv(r)


def test_groupify_requires_pointed_heap():
    with pytest.raises(SuperheapError):
        groupify(R01_SEMIHEAP)
    unpointed = PointedTernaryStructure(R01_SEMIHEAP, R01_HEAP.basepoint)
    with pytest.raises(SuperheapError):
        groupify(unpointed)


def test_groupify_at_arbitrary_point_is_a_group_for_that_probe():
    base = P("(1 + e1^e2; e1)", 2)
    G = groupify_at(TRANS_HEAP, base)
    assert check_group_axioms(G, SampleConfig(m=2, trials=60)).passed
    with pytest.raises(GeneratorMismatch):
        G.identity(3)


def test_scaling_endo_examples():
    p, q = P("(1; e1)", 2), P("(1; e2)", 2)
    assert translation_scaling_endo(1)(p) == p
    f = translation_scaling_endo(2)
    assert f(trans_mul(p, q)) == P("(8 + 4*e1^e2; 2*e1 + 2*e2)", 2)
    assert f(trans_mul(p, q)) == trans_mul(f(p), f(q))
    assert translation_scaling_endo(0)(p) == TRANS_GROUP.identity(2)


def test_shift_map_examples():
    p = P("(2 + e1^e2; e1)", 2)
    assert translation_shift_map(0)(p) == p
    f = translation_shift_map(5)
    args = P("(1; e1)", 2), P("(0; e2)", 2), P("(3; e1 + e2)", 2)
    assert f(trans_heap_closed_form(*args)) == trans_heap_closed_form(*map(f, args))
    assert f(TRANS_GROUP.identity(2)) == P("(5; 0)", 2)


def test_dilation_is_heap_not_group_hom():
    f = dilation_map(2)
    args = P("(1; e1)", 2), P("(3; e2)", 2), P("(-1; e1 + e2)", 2)
    assert f(mult_heap_closed_form(*args)) == mult_heap_closed_form(*map(f, args))
    assert f(MULT_GROUP.identity(2)) != MULT_GROUP.identity(2)


@pytest.mark.parametrize(
    "name, kind",
    [
        ("trans-group", GroupStructure),
        ("heapify:mult-group", PointedTernaryStructure),
        ("groupify:trans-heap", GroupStructure),
        ("heapify:groupify:r01-heap", PointedTernaryStructure),
    ],
)
def test_resolve(name, kind):
    assert isinstance(resolve(name), kind)


@pytest.mark.parametrize("name", ["foo", "heapify:trans-heap", "groupify:r01-semiheap", "groupify:trans-group"])
def test_resolve_rejects(name):
    with pytest.raises(UnknownNameError):
        resolve(name)


def test_derived_heaps_satisfy_heap_axioms():
    cfg = SampleConfig(m=3, trials=80)
    for name in ("heapify:trans-group", "heapify:mult-group", "heapify:groupify:mult-heap"):
        assert check_heap_axioms(resolve(name), cfg).passed, name
