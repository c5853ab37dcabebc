"""Concrete Lie supergroups and Lie super(semi)heaps as operations on T-points.

* ``r01-semiheap`` / ``r01-heap``: R^{0|1} with ``t1 + t2 + t3`` / ``t1 - t2 + t3``.
* ``trans-group``: R^{1|1}, ``(x1 + x2 + t1 t2, t1 + t2)``.
* ``mult-group``: R_*^{1|1}, ``(x1 x2 + t1 t2, x1 t2 + t1 x2)``.
* ``trans-heap`` / ``mult-heap``: the closed-form heap brackets of the two groups.

The translation group's identity is ``(0, 0)``; ``(1, 0)`` is not neutral for
an additive law.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import GeneratorMismatch, NonUnitError, PointError
from .grassmann import GrassmannElement, invert_even
from .points import R01, R11, SuperDomain, SuperPoint, constant_point


@dataclass(frozen=True)
class GroupStructure:
    name: str
    domain: SuperDomain
    mul: Callable[[SuperPoint, SuperPoint], SuperPoint]
    inv: Callable[[SuperPoint], SuperPoint]
    identity: Callable[[int], SuperPoint]
    # even components must be invertible (nonzero body)
    needs_units: bool = False

    @property
    def kind(self) -> str:
        return "group"


@dataclass(frozen=True)
class TernaryStructure:
    name: str
    domain: SuperDomain
    bracket: Callable[[SuperPoint, SuperPoint, SuperPoint], SuperPoint]
    claims_heap: bool = False
    needs_units: bool = False

    @property
    def kind(self) -> str:
        return "heap" if self.claims_heap else "semiheap"


@dataclass(frozen=True)
class PointedTernaryStructure:
    ternary: TernaryStructure
    basepoint: Callable[[int], SuperPoint] = field(repr=False)

    @property
    def name(self) -> str:
        return self.ternary.name

    @property
    def domain(self) -> SuperDomain:
        return self.ternary.domain

    @property
    def bracket(self):
        return self.ternary.bracket

    @property
    def claims_heap(self) -> bool:
        return self.ternary.claims_heap

    @property
    def needs_units(self) -> bool:
        return self.ternary.needs_units

    @property
    def kind(self) -> str:
        return "pointed " + self.ternary.kind


def _check(domain: SuperDomain, *points: SuperPoint) -> None:
    m = points[0].m
    for p in points:
        if p.domain != domain:
            raise PointError(f"expected a point of {domain}, got one of {p.domain}")
        if p.m != m:
            raise GeneratorMismatch(f"points over {m} and {p.m} generators")


def _unit_check(*xs: GrassmannElement) -> None:
    for x in xs:
        if not x.body:
            raise NonUnitError(f"even component {x} has zero body")


def _pt(x: GrassmannElement, t: GrassmannElement) -> SuperPoint:
    return SuperPoint(R11, (x,), (t,), x.m)


# ---------------------------------------------------------------- R^{0|1}

PLUS_PLUS_PLUS = "plus-plus-plus"
PLUS_MINUS_PLUS = "plus-minus-plus"


def r01_ternary(variant: str, a: SuperPoint, b: SuperPoint, c: SuperPoint) -> SuperPoint:
    _check(R01, a, b, c)
    (t1,), (t2,), (t3,) = a.odds, b.odds, c.odds
    if variant == PLUS_PLUS_PLUS:
        t = t1 + t2 + t3
    elif variant == PLUS_MINUS_PLUS:
        t = t1 - t2 + t3
    else:
        raise ValueError(f"unknown R^{{0|1}} variant {variant!r}")
    return SuperPoint(R01, (), (t,), a.m)


# ---------------------------------------------------------------- translations


def trans_mul(p1: SuperPoint, p2: SuperPoint) -> SuperPoint:
    _check(R11, p1, p2)
    (x1,), (t1,) = p1.evens, p1.odds
    (x2,), (t2,) = p2.evens, p2.odds
    return _pt(x1 + x2 + t1 * t2, t1 + t2)


def trans_inv(p: SuperPoint) -> SuperPoint:
    _check(R11, p)
    return _pt(-p.evens[0], -p.odds[0])


def trans_identity(m: int) -> SuperPoint:
    return constant_point(R11, [0], m)


def trans_heap_closed_form(p1: SuperPoint, p2: SuperPoint, p3: SuperPoint) -> SuperPoint:
    _check(R11, p1, p2, p3)
    (x1,), (t1,) = p1.evens, p1.odds
    (x2,), (t2,) = p2.evens, p2.odds
    (x3,), (t3,) = p3.evens, p3.odds
    even = x1 - x2 + x3 - t1 * t2 + t1 * t3 - t2 * t3
    return _pt(even, t1 - t2 + t3)


# ---------------------------------------------------------------- dilations


def mult_mul(p1: SuperPoint, p2: SuperPoint) -> SuperPoint:
    _check(R11, p1, p2)
    (x1,), (t1,) = p1.evens, p1.odds
    (x2,), (t2,) = p2.evens, p2.odds
    _unit_check(x1, x2)
    return _pt(x1 * x2 + t1 * t2, x1 * t2 + t1 * x2)


def mult_inv(p: SuperPoint) -> SuperPoint:
    _check(R11, p)
    (x,), (t,) = p.evens, p.odds
    xi = invert_even(x)
    return _pt(xi, -(xi * xi) * t)


def mult_identity(m: int) -> SuperPoint:
    return constant_point(R11, [1], m)


def mult_heap_closed_form(p1: SuperPoint, p2: SuperPoint, p3: SuperPoint) -> SuperPoint:
    _check(R11, p1, p2, p3)
    (x1,), (t1,) = p1.evens, p1.odds
    (x2,), (t2,) = p2.evens, p2.odds
    (x3,), (t3,) = p3.evens, p3.odds
    inv = invert_even(x2)
    inv2 = inv * inv
    even = x1 * x3 * inv - t1 * t2 * x3 * inv2 - x1 * t2 * t3 * inv2 + t1 * t3 * inv
    odd = x1 * t3 * inv - t1 * t2 * t3 * inv2 - x1 * t2 * x3 * inv2 + t1 * x3 * inv
    return _pt(even, odd)


# ---------------------------------------------------------------- bundles


def _zero01(m: int) -> SuperPoint:
    return constant_point(R01, [], m)


R01_SEMIHEAP = TernaryStructure(
    "r01-semiheap",
    R01,
    lambda a, b, c: r01_ternary(PLUS_PLUS_PLUS, a, b, c),
    claims_heap=False,
)

R01_HEAP = PointedTernaryStructure(
    TernaryStructure(
        "r01-heap",
        R01,
        lambda a, b, c: r01_ternary(PLUS_MINUS_PLUS, a, b, c),
        claims_heap=True,
    ),
    _zero01,
)

TRANS_GROUP = GroupStructure("trans-group", R11, trans_mul, trans_inv, trans_identity)

MULT_GROUP = GroupStructure(
    "mult-group", R11, mult_mul, mult_inv, mult_identity, needs_units=True
)

TRANS_HEAP = PointedTernaryStructure(
    TernaryStructure("trans-heap", R11, trans_heap_closed_form, claims_heap=True),
    trans_identity,
)

MULT_HEAP = PointedTernaryStructure(
    TernaryStructure(
        "mult-heap", R11, mult_heap_closed_form, claims_heap=True, needs_units=True
    ),
    mult_identity,
)

BUILTINS = {
    s.name: s
    for s in (R01_SEMIHEAP, R01_HEAP, TRANS_GROUP, TRANS_HEAP, MULT_GROUP, MULT_HEAP)
}


def broken_trans_bracket() -> TernaryStructure:
    """``[x, y, z] = x y z`` in the translation group: not para-associative."""
    return TernaryStructure(
        "trans-xyz",
        R11,
        lambda a, b, c: trans_mul(a, trans_mul(b, c)),
    )


def point_is_admissible(structure, p: SuperPoint) -> bool:
    """Whether ``p`` lies in the structure's domain (units where required)."""
    if p.domain != structure.domain:
        return False
    if structure.needs_units:
        return all(Fraction(x.body) != 0 for x in p.evens)
    return True
