"""Lie supergroups and Lie superheaps on Grassmann-valued T-points, with exact law checks."""

from .errors import (
    GeneratorMismatch,
    IndexRangeError,
    NonUnitError,
    ParityError,
    ParseError,
    PointError,
    SuperheapError,
    UnknownNameError,
)
from .grassmann import (
    AlgebraHom,
    GrassmannElement,
    Parity,
    add,
    apply_hom,
    body_soul,
    compose_homs,
    format_element,
    invert_even,
    make_element,
    make_hom,
    mul,
    parity_of,
    parse_element,
    random_element,
    scale,
)
from .kernel import BACKEND
from .points import (
    R01,
    R11,
    PointMap,
    SuperDomain,
    SuperPoint,
    constant_point,
    format_point,
    make_point,
    map_point,
    parse_point,
)
from .structures import GroupStructure, PointedTernaryStructure, TernaryStructure
from .functors import groupify, heapify, resolve
from .harness import LawReport, SampleConfig, run_suite

__version__ = "0.1.0"
