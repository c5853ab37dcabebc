import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from superheap.grassmann import GrassmannElement  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None, derandomize=True)
settings.load_profile("default")

small_fractions = st.sampled_from(
    [Fraction(v) for v in (1, -1, 2, -2, 3)] + [Fraction(1, 2), Fraction(-1, 3), Fraction(5, 4)]
)


@st.composite
def elements(draw, m=None, parity=None, max_terms=5):
    """Random elements over ``m`` generators; ``parity`` in {None, 0, 1}."""
    if m is None:
        m = draw(st.integers(0, 5))
    masks = st.integers(0, (1 << m) - 1)
    if parity is not None:
        masks = masks.filter(lambda k: bin(k).count("1") % 2 == parity)
        if parity == 1 and m == 0:
            return GrassmannElement(0)
    terms = draw(st.dictionaries(masks, small_fractions, max_size=max_terms))
    return GrassmannElement(m, terms)


@st.composite
def even_units(draw, m):
    soul = draw(elements(m=m, parity=0))
    soul = GrassmannElement(m, {k: v for k, v in soul.terms.items() if k})
    body = draw(small_fractions)
    return soul + body


@pytest.fixture
def e():
    """``e(m, i)`` -> generator i over m generators."""
    return GrassmannElement.generator
