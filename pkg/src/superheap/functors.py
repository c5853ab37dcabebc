"""Heapification, groupification, morphism fixtures and the structure registry."""

from __future__ import annotations

from fractions import Fraction

from .errors import GeneratorMismatch, SuperheapError, UnknownNameError
from .points import R01, R11, PointMap, SuperPoint, identity_map
from .structures import (
    BUILTINS,
    GroupStructure,
    PointedTernaryStructure,
    TernaryStructure,
)


def heapify(G: GroupStructure) -> PointedTernaryStructure:
    """``[x, y, z] = x y^-1 z``, pointed at the group identity."""

    def bracket(x, y, z):
        return G.mul(x, G.mul(G.inv(y), z))

    return PointedTernaryStructure(
        TernaryStructure(
            f"heapify:{G.name}",
            G.domain,
            bracket,
            claims_heap=True,
            needs_units=G.needs_units,
        ),
        G.identity,
    )


def groupify(H: PointedTernaryStructure) -> GroupStructure:
    """``x y = [x, e, y]``, ``x^-1 = [e, x, e]`` with ``e`` the basepoint."""
    if not isinstance(H, PointedTernaryStructure):
        raise SuperheapError(f"groupify needs a pointed heap; {H.name} has no basepoint")
    if not H.claims_heap:
        raise SuperheapError(f"groupify needs a heap; {H.name} is only a semiheap")
    bracket, e = H.bracket, H.basepoint

    def mul(x, y):
        return bracket(x, e(x.m), y)

    def inv(x):
        ex = e(x.m)
        return bracket(ex, x, ex)

    return GroupStructure(
        f"groupify:{H.name}", H.domain, mul, inv, e, needs_units=H.needs_units
    )


def groupify_at(H, point: SuperPoint) -> GroupStructure:
    """Group on the single set ``S(T)`` obtained from an arbitrary T-point.

    Only defined for the probe size of ``point``; this does not give a functor
    and is kept out of the law suites.
    """
    ternary = H.ternary if isinstance(H, PointedTernaryStructure) else H

    def identity(m):
        if m != point.m:
            raise GeneratorMismatch(f"basepoint lives over {point.m} generators, not {m}")
        return point

    pointed = PointedTernaryStructure(ternary, identity)
    G = groupify(pointed)
    return GroupStructure(
        f"groupify@{point}:{ternary.name}",
        G.domain,
        G.mul,
        G.inv,
        identity,
        needs_units=G.needs_units,
    )


# ---------------------------------------------------------------- fixtures


def translation_scaling_endo(b) -> PointMap:
    """``(x, t) -> (b^2 x, b t)``: a group endomorphism of the translation group."""
    b = Fraction(b)
    return PointMap(
        f"scale({b})",
        lambda p: SuperPoint(R11, (p.evens[0] * (b * b),), (p.odds[0] * b,), p.m),
    )


def translation_shift_map(c) -> PointMap:
    """``(x, t) -> (x + c, t)``: a heap endomorphism that moves the identity."""
    c = Fraction(c)
    return PointMap(
        f"shift({c})",
        lambda p: SuperPoint(R11, (p.evens[0] + c,), p.odds, p.m),
    )


def odd_flip_map() -> PointMap:
    """``(x, t) -> (x, -t)``; an automorphism of both R^{1|1} groups."""
    return PointMap(
        "odd-flip",
        lambda p: SuperPoint(R11, p.evens, (-p.odds[0],), p.m),
    )


def dilation_map(c) -> PointMap:
    """Left multiplication by the constant point ``(c, 0)`` in the multiplicative group.

    A heap endomorphism for any nonzero ``c``; a group endomorphism only for ``c = 1``.
    """
    c = Fraction(c)
    return PointMap(
        f"dilate({c})",
        lambda p: SuperPoint(R11, (p.evens[0] * c,), (p.odds[0] * c,), p.m),
    )


def odd_scaling_map(b) -> PointMap:
    """``t -> b t`` on R^{0|1}."""
    b = Fraction(b)
    return PointMap(f"scale({b})", lambda p: SuperPoint(R01, (), (p.odds[0] * b,), p.m))


def even_square_map() -> PointMap:
    """``(x, t) -> (x^2, t)``; respects neither structure on R^{1|1}."""
    return PointMap("square", lambda p: SuperPoint(R11, (p.evens[0] * p.evens[0],), p.odds, p.m))


# Per built-in (by underlying manifold) endomorphism fixtures.
# group_homs: group endomorphisms (hence basepoint-preserving heap endomorphisms).
# heap_only: heap endomorphisms that do not fix the identity.
_TRANS_FIXTURES = {
    "group_homs": lambda: [
        identity_map(),
        translation_scaling_endo(2),
        translation_scaling_endo(Fraction(-1, 2)),
        translation_scaling_endo(0),
    ],
    "heap_only": lambda: [translation_shift_map(5), translation_shift_map(Fraction(-3, 2))],
}
_MULT_FIXTURES = {
    "group_homs": lambda: [identity_map(), odd_flip_map()],
    "heap_only": lambda: [dilation_map(2), dilation_map(Fraction(-1, 3))],
}
_R01_FIXTURES = {
    "group_homs": lambda: [identity_map(), odd_scaling_map(3), odd_scaling_map(Fraction(-1, 2))],
    "heap_only": lambda: [],
}


def _fixture_family(name: str) -> dict:
    base = name.split(":")[-1]
    if base.startswith("trans"):
        return _TRANS_FIXTURES
    if base.startswith("mult"):
        return _MULT_FIXTURES
    if base.startswith("r01"):
        return _R01_FIXTURES
    raise UnknownNameError(f"no morphism fixtures for {name!r}")


def group_hom_fixtures(name: str) -> list[PointMap]:
    """Endomorphisms of the group (or groupified heap) behind ``name``."""
    return _fixture_family(name)["group_homs"]()


def heap_hom_fixtures(name: str, pointed: bool = False) -> list[PointMap]:
    """Heap endomorphisms; ``pointed=True`` keeps only basepoint-preserving ones."""
    fam = _fixture_family(name)
    maps = fam["group_homs"]()
    if not pointed:
        maps += fam["heap_only"]()
    return maps


# ---------------------------------------------------------------- registry

STRUCTURE_NAMES = tuple(BUILTINS)


def resolve(name: str):
    """Look up a structure; ``heapify:<group>`` and ``groupify:<heap>`` nest freely."""
    if name in BUILTINS:
        return BUILTINS[name]
    head, sep, rest = name.partition(":")
    if sep and head == "heapify":
        inner = resolve(rest)
        if not isinstance(inner, GroupStructure):
            raise UnknownNameError(f"heapify needs a group, {rest!r} is not one")
        return heapify(inner)
    if sep and head == "groupify":
        inner = resolve(rest)
        if not isinstance(inner, PointedTernaryStructure) or not inner.claims_heap:
            raise UnknownNameError(f"groupify needs a pointed heap, {rest!r} is not one")
        return groupify(inner)
    raise UnknownNameError(f"unknown structure {name!r}")
