"""T-points of the model supermanifolds R^{p|q} for purely odd probes.

A T-point is a tuple of ``p`` even and ``q`` odd Grassmann elements over a
shared generator count ``m``.  Reparametrizations act componentwise through
an :class:`~superheap.grassmann.AlgebraHom`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import GeneratorMismatch, ParseError, PointError
from .grassmann import (
    AlgebraHom,
    GrassmannElement,
    Parity,
    apply_hom,
    format_element,
    max_generator_index,
    parity_of,
    parse_element,
)


@dataclass(frozen=True)
class SuperDomain:
    even_dim: int
    odd_dim: int

    def __post_init__(self):
        if self.even_dim < 0 or self.odd_dim < 0:
            raise ValueError("dimensions must be non-negative")

    def __str__(self):
        return f"R^{{{self.even_dim}|{self.odd_dim}}}"


R01 = SuperDomain(0, 1)
R11 = SuperDomain(1, 1)


@dataclass(frozen=True)
class SuperPoint:
    domain: SuperDomain
    evens: tuple[GrassmannElement, ...]
    odds: tuple[GrassmannElement, ...]
    m: int

    @property
    def components(self) -> tuple[GrassmannElement, ...]:
        return self.evens + self.odds

    def __str__(self):
        return format_point(self)


def make_point(
    domain: SuperDomain,
    evens: Sequence[GrassmannElement],
    odds: Sequence[GrassmannElement],
    m: int | None = None,
) -> SuperPoint:
    """Validate counts, parities and generator counts, and build the point.

    ``m`` is only needed for points with no components.
    """
    evens = tuple(evens)
    odds = tuple(odds)
    if len(evens) != domain.even_dim or len(odds) != domain.odd_dim:
        raise PointError(
            f"{domain} point needs {domain.even_dim} even and {domain.odd_dim} odd "
            f"components, got {len(evens)} and {len(odds)}"
        )
    ms = {c.m for c in evens + odds}
    if m is not None:
        ms.add(m)
    if len(ms) > 1:
        raise PointError(f"components over different generator counts {sorted(ms)}")
    if not ms:
        raise PointError("generator count needed for a point with no components")
    for i, c in enumerate(evens):
        if parity_of(c) is not Parity.EVEN:
            raise PointError(
                f"even slot {i} holds an element of {parity_of(c).value} parity: {format_element(c)}"
            )
    for i, c in enumerate(odds):
        if not c.is_zero() and parity_of(c) is not Parity.ODD:
            raise PointError(
                f"odd slot {i} holds an element of {parity_of(c).value} parity: {format_element(c)}"
            )
    return SuperPoint(domain, evens, odds, ms.pop())


def constant_point(domain: SuperDomain, values: Sequence, m: int) -> SuperPoint:
    """The T-point obtained from a point of the body: constants in even slots, zero in odd."""
    values = list(values)
    if len(values) != domain.even_dim:
        raise PointError(f"{domain} needs {domain.even_dim} values, got {len(values)}")
    evens = tuple(GrassmannElement.constant(m, Fraction(v)) for v in values)
    odds = tuple(GrassmannElement(m) for _ in range(domain.odd_dim))
    return SuperPoint(domain, evens, odds, m)


def map_point(h: AlgebraHom, p: SuperPoint) -> SuperPoint:
    if p.m != h.source_generators:
        raise GeneratorMismatch(
            f"point over {p.m} generators, hom expects {h.source_generators}"
        )
    return SuperPoint(
        p.domain,
        tuple(apply_hom(h, c) for c in p.evens),
        tuple(apply_hom(h, c) for c in p.odds),
        h.target_generators,
    )


def format_point(p: SuperPoint) -> str:
    return "(" + "; ".join(format_element(c) for c in p.components) + ")"


def parse_point(text: str, domain: SuperDomain, m: int | None = None) -> SuperPoint:
    """Parse ``"(comp; comp; ...)"``, even slots first.

    When ``m`` is None it is inferred as the largest generator index present.
    """
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("a point must be written as '(comp; comp; ...)'", 0)
    if m is None:
        m = max_generator_index(s)
    inner = s[1:-1]
    parts = [] if not inner.strip() else inner.split(";")
    if len(parts) != domain.even_dim + domain.odd_dim:
        raise PointError(
            f"{domain} point needs {domain.even_dim + domain.odd_dim} components, "
            f"got {len(parts)}"
        )
    comps = [parse_element(part, m) for part in parts]
    return make_point(domain, comps[: domain.even_dim], comps[domain.even_dim :], m)


@dataclass(frozen=True)
class PointMap:
    """A named map of T-points, applied uniformly for every probe."""

    name: str
    action: Callable[[SuperPoint], SuperPoint]

    def __call__(self, p: SuperPoint) -> SuperPoint:
        return self.action(p)


def identity_map(name: str = "identity") -> PointMap:
    return PointMap(name, lambda p: p)
