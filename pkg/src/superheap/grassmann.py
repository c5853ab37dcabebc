"""Exact arithmetic in the Grassmann algebra on ``m`` odd generators over Q.

Elements are immutable.  A monomial ``e_{i1} ^ ... ^ e_{ik}`` with
``i1 < ... < ik`` is stored as the bitmask with bits ``i1 - 1, ..., ik - 1``
set, so ``m`` is capped at 32 (one machine word).

>>> a = parse_element("2 + e1^e2", 2)
>>> format_element(invert_even(a))
'1/2 - 1/4*e1^e2'
"""

from __future__ import annotations

import enum
import random
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from . import kernel
from .errors import (
    GeneratorMismatch,
    IndexRangeError,
    NonUnitError,
    ParityError,
    ParseError,
    SuperheapError,
)

MAX_GENERATORS = 32


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_indices(mask: int) -> tuple[int, ...]:
    """Generator indices (1-based, ascending) of a monomial bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise SuperheapError(f"generator count must be a non-negative integer, got {m!r}")
    if m > MAX_GENERATORS:
        raise SuperheapError(f"at most {MAX_GENERATORS} generators supported, got {m}")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (Rational, float, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class GrassmannElement:
    """An element of the Grassmann algebra on ``m`` generators.

    Supports ``+``, ``-``, ``*`` with other elements over the same ``m`` and
    with rationals (treated as multiples of the unit).
    """

    __slots__ = ("_m", "_terms", "_hash")

    def __init__(self, m: int, terms: Mapping[int, object] | None = None):
        _check_m(m)
        clean: dict[int, Fraction] = {}
        limit = 1 << m
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise IndexRangeError(
                    f"monomial {mask_indices(mask) if mask >= 0 else mask} "
                    f"uses a generator outside 1..{m}"
                )
            c = _as_fraction(c)
            if c:
                clean[mask] = c
        self._m = m
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, m: int, terms: dict) -> GrassmannElement:
        # trusted path: terms already normalized
        obj = cls.__new__(cls)
        obj._m = m
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, m: int, value=0) -> GrassmannElement:
        return cls(m, {0: value})

    @classmethod
    def generator(cls, m: int, index: int) -> GrassmannElement:
        if not 1 <= index <= m:
            raise IndexRangeError(f"generator e{index} outside 1..{m}")
        return cls._raw(m, {1 << (index - 1): Fraction(1)})

    @property
    def m(self) -> int:
        return self._m

    @property
    def num_generators(self) -> int:
        return self._m

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def parity(self) -> Parity:
        return parity_of(self)

    @property
    def body(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    @property
    def soul(self) -> GrassmannElement:
        return body_soul(self)[1]

    def _coerce(self, other) -> GrassmannElement | None:
        if isinstance(other, GrassmannElement):
            if other._m != self._m:
                raise GeneratorMismatch(
                    f"operands over {self._m} and {other._m} generators"
                )
            return other
        if isinstance(other, Rational):
            return GrassmannElement.constant(self._m, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GrassmannElement._raw(self._m, kernel.add_terms(self._terms, o._terms))

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement._raw(self._m, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if type(other) is GrassmannElement:
            if other._m != self._m:
                raise GeneratorMismatch(f"operands over {self._m} and {other._m} generators")
            return GrassmannElement._raw(self._m, kernel.mul_terms(self._terms, other._terms))
        if isinstance(other, Rational):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = GrassmannElement.constant(self._m, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self._m == other._m and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._m, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"GrassmannElement({self._m}, {format_element(self)!r})"


Element = GrassmannElement


def make_element(m: int, raw_terms: Iterable[tuple[Sequence[int], object]]) -> GrassmannElement:
    """Build an element from ``(index_list, coefficient)`` pairs.

    Index lists may be in any order; each is sorted with the permutation sign
    folded into its coefficient, and a repeated index kills the term.
    """
    _check_m(m)
    terms: dict[int, Fraction] = {}
    for indices, coeff in raw_terms:
        indices = list(indices)
        for i in indices:
            if not isinstance(i, int) or not 1 <= i <= m:
                raise IndexRangeError(f"generator index {i!r} outside 1..{m}")
        if len(set(indices)) != len(indices):
            continue
        sign = _permutation_sign(indices)
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        c = _as_fraction(coeff) * sign
        terms[mask] = terms.get(mask, Fraction(0)) + c
    return GrassmannElement(m, terms)


def _permutation_sign(seq: Sequence[int]) -> int:
    # inversion count parity
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _same_m(a: GrassmannElement, b: GrassmannElement) -> None:
    if a.m != b.m:
        raise GeneratorMismatch(f"operands over {a.m} and {b.m} generators")


def add(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    _same_m(a, b)
    return a + b


def scale(c, a: GrassmannElement) -> GrassmannElement:
    c = _as_fraction(c)
    if not c:
        return GrassmannElement._raw(a.m, {})
    return GrassmannElement._raw(a.m, {k: c * v for k, v in a._terms.items()})


def mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    _same_m(a, b)
    return a * b


def parity_of(a: GrassmannElement) -> Parity:
    """Even/Odd if every monomial has even/odd degree; zero counts as Even."""
    has_even = has_odd = False
    for mask in a._terms:
        if _popcount(mask) & 1:
            has_odd = True
        else:
            has_even = True
    if has_odd and has_even:
        return Parity.MIXED
    return Parity.ODD if has_odd else Parity.EVEN


def is_odd_or_zero(a: GrassmannElement) -> bool:
    return a.is_zero() or parity_of(a) is Parity.ODD


def body_soul(a: GrassmannElement) -> tuple[Fraction, GrassmannElement]:
    body = a._terms.get(0, Fraction(0))
    soul = {k: v for k, v in a._terms.items() if k}
    return body, GrassmannElement._raw(a.m, soul)


def invert_even(a: GrassmannElement) -> GrassmannElement:
    """Inverse of an even element with nonzero body.

    With ``a = b + s`` the inverse is ``b^-1 * sum_k (-s/b)^k``; an even soul
    has every monomial of degree >= 2, so terms with ``k > m // 2`` vanish.
    """
    if parity_of(a) is not Parity.EVEN:
        raise ParityError(f"invert_even needs an even element, got {parity_of(a).value}")
    b, s = body_soul(a)
    if not b:
        raise NonUnitError(f"{format_element(a)} has zero body and is not invertible")
    step = scale(-1 / b, s)
    total = GrassmannElement.constant(a.m, 1)
    power = total
    for _ in range(a.m // 2):
        power = power * step
        if power.is_zero():
            break
        total = total + power
    return scale(1 / b, total)


# ---------------------------------------------------------------- homomorphisms


class AlgebraHom:
    """Unital parity-preserving algebra map sending generator ``i`` to ``images[i-1]``."""

    __slots__ = ("source_generators", "target_generators", "images")

    def __init__(self, source_generators: int, target_generators: int, images):
        self.source_generators = source_generators
        self.target_generators = target_generators
        self.images = tuple(images)

    def __call__(self, a: GrassmannElement) -> GrassmannElement:
        return apply_hom(self, a)

    def __eq__(self, other):
        if not isinstance(other, AlgebraHom):
            return NotImplemented
        return (
            self.source_generators == other.source_generators
            and self.target_generators == other.target_generators
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.source_generators, self.target_generators, self.images))

    def __repr__(self):
        imgs = ", ".join(f"e{i + 1} -> {format_element(x)}" for i, x in enumerate(self.images))
        return f"AlgebraHom({self.source_generators} -> {self.target_generators}: {imgs})"


def make_hom(m: int, m_target: int, images: Sequence[GrassmannElement]) -> AlgebraHom:
    """Validate generator images and build the homomorphism.

    Zero is accepted as an odd image: the map to the body is a legitimate
    reparametrization.
    """
    _check_m(m)
    _check_m(m_target)
    images = list(images)
    if len(images) != m:
        raise SuperheapError(f"expected {m} generator images, got {len(images)}")
    for i, img in enumerate(images, 1):
        if not isinstance(img, GrassmannElement):
            raise TypeError(f"image of e{i} is not a GrassmannElement")
        if img.m != m_target:
            raise GeneratorMismatch(
                f"image of e{i} lives over {img.m} generators, expected {m_target}"
            )
        if not is_odd_or_zero(img):
            raise ParityError(
                f"image of e{i} is {parity_of(img).value}, must be odd: {format_element(img)}"
            )
    return AlgebraHom(m, m_target, images)


def apply_hom(h: AlgebraHom, a: GrassmannElement) -> GrassmannElement:
    if a.m != h.source_generators:
        raise GeneratorMismatch(
            f"element over {a.m} generators, hom expects {h.source_generators}"
        )
    result: dict[int, Fraction] = {}
    unit = {0: Fraction(1)}
    for mask, c in a._terms.items():
        prod = unit
        for i in mask_indices(mask):
            prod = kernel.mul_terms(prod, h.images[i - 1]._terms)
            if not prod:
                break
        if prod:
            result = kernel.add_terms(result, {k: c * v for k, v in prod.items()})
    return GrassmannElement._raw(h.target_generators, result)


def compose_homs(outer: AlgebraHom, inner: AlgebraHom) -> AlgebraHom:
    """``outer o inner``: apply ``inner`` first."""
    if inner.target_generators != outer.source_generators:
        raise GeneratorMismatch("homomorphisms do not compose")
    return AlgebraHom(
        inner.source_generators,
        outer.target_generators,
        [apply_hom(outer, img) for img in inner.images],
    )


def identity_hom(m: int) -> AlgebraHom:
    return AlgebraHom(m, m, [GrassmannElement.generator(m, i) for i in range(1, m + 1)])


# ---------------------------------------------------------------- text codec


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _sort_key(mask: int):
    idx = mask_indices(mask)
    return (len(idx), idx)


def format_element(a: GrassmannElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for n, mask in enumerate(sorted(a._terms, key=_sort_key)):
        c = a._terms[mask]
        neg = c < 0
        mag = -c if neg else c
        if mask:
            mono = "^".join(f"e{i}" for i in mask_indices(mask))
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if n == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])


def _parse_mono(sc: _Scanner, m: int) -> list[int]:
    indices = []
    while True:
        start = sc.pos
        if not sc.take("e"):
            raise ParseError("expected a generator like 'e1'", sc.pos)
        if sc.pos >= len(sc.text) or not sc.text[sc.pos].isdigit():
            raise ParseError("expected a generator index after 'e'", sc.pos)
        k = sc.integer()
        if not 1 <= k <= m:
            raise IndexRangeError(f"generator e{k} outside 1..{m} (at position {start})")
        indices.append(k)
        if not sc.take("^"):
            return indices


def parse_element(text: str, m: int) -> GrassmannElement:
    """Parse ``term (('+'|'-') term)*`` with an optional leading minus."""
    _check_m(m)
    sc = _Scanner(text)
    raw: list[tuple[list[int], Fraction]] = []
    sign = -1 if sc.take("-") else 1
    while True:
        ch = sc.peek()
        if ch.isdigit():
            num = sc.integer()
            coeff = Fraction(num)
            if sc.take("/"):
                at = sc.pos
                den = sc.integer()
                if den == 0:
                    raise ParseError("zero denominator", at)
                coeff = Fraction(num, den)
            mono: list[int] = []
            if sc.take("*"):
                mono = _parse_mono(sc, m)
        elif ch == "e":
            coeff = Fraction(1)
            mono = _parse_mono(sc, m)
        elif ch == "":
            raise ParseError("unexpected end of input", sc.pos)
        else:
            raise ParseError(f"unexpected character {ch!r}", sc.pos)
        raw.append((mono, sign * coeff))
        if sc.take("+"):
            sign = 1
        elif sc.take("-"):
            sign = -1
        elif sc.peek() == "":
            break
        else:
            raise ParseError(f"unexpected character {sc.peek()!r}", sc.pos)
    return make_element(m, raw)


def max_generator_index(text: str) -> int:
    """Largest ``eK`` index mentioned in ``text`` (0 if none); used to infer ``m``."""
    best = 0
    i = 0
    while i < len(text):
        if text[i] == "e":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j > i + 1:
                best = max(best, int(text[i + 1 : j]))
            i = j
        else:
            i += 1
    return best


# ---------------------------------------------------------------- sampling


def _random_mask(m: int, degree: int, rng: random.Random) -> int:
    mask = 0
    for i in rng.sample(range(m), degree):
        mask |= 1 << i
    return mask


def random_element(
    m: int,
    parity: Parity,
    max_terms: int,
    coeff_pool: Sequence,
    rng_seed: int | random.Random,
    *,
    min_degree: int = 0,
) -> GrassmannElement:
    """Random homogeneous element; deterministic for a given seed.

    ``rng_seed`` may also be a ``random.Random`` to draw from a shared stream.
    Returns zero when ``m`` admits no monomial of the requested parity.
    """
    _check_m(m)
    if parity is Parity.MIXED:
        raise ParityError("random_element samples homogeneous elements only")
    if max_terms < 1:
        raise SuperheapError("max_terms must be >= 1")
    if not coeff_pool:
        raise SuperheapError("coeff_pool is empty")
    rng = rng_seed if isinstance(rng_seed, random.Random) else random.Random(rng_seed)
    first = 1 if parity is Parity.ODD else 0
    while first < min_degree:
        first += 2
    degrees = list(range(first, m + 1, 2))
    if not degrees:
        return GrassmannElement(m)
    pool = [_as_fraction(c) for c in coeff_pool]
    terms: dict[int, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        mask = _random_mask(m, rng.choice(degrees), rng)
        terms[mask] = terms.get(mask, Fraction(0)) + rng.choice(pool)
    return GrassmannElement(m, terms)
