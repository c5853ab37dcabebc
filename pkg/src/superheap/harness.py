"""Seeded, exact law checks on sampled T-points.

Every check draws its points from a ``random.Random`` seeded by the config
seed together with the law, structure, fixture and probe size, so a report is
reproducible from its own fields.  The first trials of each check walk a
small grid of corner points (zero, constants, single generators) before
switching to random samples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NonUnitError, SuperheapError, UnknownNameError
from .functors import (
    group_hom_fixtures,
    groupify,
    heap_hom_fixtures,
    heapify,
    resolve,
)
from .grassmann import (
    AlgebraHom,
    GrassmannElement,
    Parity,
    make_element,
    make_hom,
    random_element,
)
from .points import PointMap, SuperPoint, format_point, map_point
from .structures import (
    GroupStructure,
    PointedTernaryStructure,
    TernaryStructure,
    mult_heap_closed_form,
    trans_heap_closed_form,
)

LAWS = (
    "para-assoc",
    "heap-axioms",
    "group-axioms",
    "ternary-hom",
    "group-hom",
    "naturality",
    "roundtrip",
    "closed-form",
)


@dataclass(frozen=True)
class SampleConfig:
    m: int = 4
    trials: int = 200
    rng_seed: int = 42
    coeff_pool: tuple = (0, 1, -1, 2, -2, Fraction(1, 2))
    max_terms: int = 3
    unit_body_pool: tuple = (1, -1, 2, Fraction(-1, 2), 3)

    def __post_init__(self):
        if self.trials < 1:
            raise SuperheapError("trials must be >= 1")
        if not 0 <= self.m <= 32:
            raise SuperheapError("m must lie in 0..32")
        if not self.coeff_pool:
            raise SuperheapError("coeff_pool is empty")
        if not self.unit_body_pool or any(Fraction(b) == 0 for b in self.unit_body_pool):
            raise SuperheapError("unit_body_pool must be nonempty and free of zeros")


@dataclass(frozen=True)
class Counterexample:
    equation: str
    inputs: tuple[str, ...]
    lhs: str
    rhs: str


@dataclass(frozen=True)
class LawReport:
    law_name: str
    structure_name: str
    config: SampleConfig
    passed: bool
    trials_run: int
    skipped: int = 0
    counterexample: Counterexample | None = None
    subject: str = ""

    @property
    def suite(self) -> str:
        label = f"{self.law_name}:{self.structure_name}"
        return f"{label}[{self.subject}]" if self.subject else label

    def to_dict(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {
                "inputs": list(self.counterexample.inputs),
                "lhs": self.counterexample.lhs,
                "rhs": self.counterexample.rhs,
            }
        return {
            "suite": self.suite,
            "structure": self.structure_name,
            "m": self.config.m,
            "trials": self.trials_run,
            "skipped": self.skipped,
            "seed": self.config.rng_seed,
            "passed": self.passed,
            "counterexample": ce,
        }


# ---------------------------------------------------------------- sampling


def rng_for(cfg: SampleConfig, *labels) -> random.Random:
    key = "|".join([str(cfg.rng_seed), str(cfg.m), *map(str, labels)])
    return random.Random(key)


def sample_point(structure, m: int, cfg: SampleConfig, rng: random.Random) -> SuperPoint:
    domain = structure.domain
    evens = []
    for _ in range(domain.even_dim):
        if structure.needs_units:
            body = Fraction(rng.choice(cfg.unit_body_pool))
            soul = random_element(m, Parity.EVEN, cfg.max_terms, cfg.coeff_pool, rng, min_degree=2)
            evens.append(soul + body)
        else:
            evens.append(random_element(m, Parity.EVEN, cfg.max_terms, cfg.coeff_pool, rng))
    odds = [
        random_element(m, Parity.ODD, cfg.max_terms, cfg.coeff_pool, rng)
        for _ in range(domain.odd_dim)
    ]
    return SuperPoint(domain, tuple(evens), tuple(odds), m)


def corner_points(structure, m: int) -> list[SuperPoint]:
    domain = structure.domain
    even_vals = [1, 2] if structure.needs_units else [0, 1]
    odd_vals = [GrassmannElement(m)]
    if m >= 1:
        odd_vals.append(GrassmannElement.generator(m, 1))
    out = []
    for ev in itertools.product(even_vals, repeat=domain.even_dim):
        for od in itertools.product(odd_vals, repeat=domain.odd_dim):
            evens = tuple(GrassmannElement.constant(m, v) for v in ev)
            out.append(SuperPoint(domain, evens, tuple(od), m))
    return out


def _tuples(structure, arity: int, cfg: SampleConfig, rng: random.Random):
    """Yield ``cfg.trials`` tuples of points: corner grid first, then random."""
    m = cfg.m
    corners = list(itertools.product(corner_points(structure, m), repeat=arity))
    corners = corners[: max(1, cfg.trials // 4)]
    for i in range(cfg.trials):
        if i < len(corners):
            yield corners[i]
        else:
            yield tuple(sample_point(structure, m, cfg, rng) for _ in range(arity))


def _fmt(p) -> str:
    return format_point(p) if isinstance(p, SuperPoint) else str(p)


# A trial check returns None on success or (equation, lhs, rhs) on failure.
TrialCheck = Callable[..., "tuple[str, object, object] | None"]


def run_trials(
    law: str,
    structure,
    cfg: SampleConfig,
    arity: int,
    check: TrialCheck,
    subject: str = "",
    sample_from=None,
) -> LawReport:
    """Drive ``check`` over sampled tuples; evaluation errors count as skips."""
    source = sample_from if sample_from is not None else structure
    rng = rng_for(cfg, law, structure.name, subject)
    run = skipped = 0
    for pts in _tuples(source, arity, cfg, rng):
        try:
            bad = check(*pts)
        except (NonUnitError, SuperheapError):
            skipped += 1
            continue
        run += 1
        if bad is not None:
            eq, lhs, rhs = bad
            ce = Counterexample(eq, tuple(_fmt(p) for p in pts), _fmt(lhs), _fmt(rhs))
            return LawReport(law, structure.name, cfg, False, run, skipped, ce, subject)
    return LawReport(law, structure.name, cfg, True, run, skipped, None, subject)


def _fail_once(law, structure, cfg, subject, eq, lhs, rhs, inputs=()) -> LawReport:
    ce = Counterexample(eq, tuple(inputs), _fmt(lhs), _fmt(rhs))
    return LawReport(law, structure.name, cfg, False, 0, 0, ce, subject)


# ---------------------------------------------------------------- law checks


def check_para_associativity(H, cfg: SampleConfig) -> LawReport:
    br = H.bracket

    def check(x1, x2, x3, x4, x5):
        left = br(br(x1, x2, x3), x4, x5)
        middle = br(x1, br(x4, x3, x2), x5)
        if left != middle:
            return "[[x1,x2,x3],x4,x5] = [x1,[x4,x3,x2],x5]", left, middle
        right = br(x1, x2, br(x3, x4, x5))
        if middle != right:
            return "[x1,[x4,x3,x2],x5] = [x1,x2,[x3,x4,x5]]", middle, right
        return None

    return run_trials("para-assoc", H, cfg, 5, check)


def check_heap_axioms(H, cfg: SampleConfig) -> LawReport:
    br = H.bracket

    def check(x, y):
        lhs = br(x, x, y)
        if lhs != y:
            return "[x,x,y] = y", lhs, y
        lhs = br(y, x, x)
        if lhs != y:
            return "[y,x,x] = y", lhs, y
        return None

    return run_trials("heap-axioms", H, cfg, 2, check)


def check_group_axioms(G: GroupStructure, cfg: SampleConfig) -> LawReport:
    e = G.identity(cfg.m)

    def check(x, y, z):
        lhs, rhs = G.mul(G.mul(x, y), z), G.mul(x, G.mul(y, z))
        if lhs != rhs:
            return "(xy)z = x(yz)", lhs, rhs
        for eq, val in (("ex = x", G.mul(e, x)), ("xe = x", G.mul(x, e))):
            if val != x:
                return eq, val, x
        xi = G.inv(x)
        for eq, val in (("x x^-1 = e", G.mul(x, xi)), ("x^-1 x = e", G.mul(xi, x))):
            if val != e:
                return eq, val, e
        return None

    return run_trials("group-axioms", G, cfg, 3, check)


def check_ternary_hom(H, H2, f: PointMap, cfg: SampleConfig, *, structure_name=None) -> LawReport:
    """``f([x,y,z]) = [f x, f y, f z]`` on triples sampled from ``H``."""

    def check(x, y, z):
        lhs = f(H.bracket(x, y, z))
        rhs = H2.bracket(f(x), f(y), f(z))
        if lhs != rhs:
            return "f([x,y,z]) = [fx,fy,fz]", lhs, rhs
        return None

    target = H if structure_name is None else _renamed(H, structure_name)
    return run_trials("ternary-hom", target, cfg, 3, check, subject=f.name)


def check_group_hom(G: GroupStructure, G2: GroupStructure, f: PointMap, cfg: SampleConfig, *, structure_name=None) -> LawReport:
    """``f(e) = e'``, ``f(xy) = f(x)f(y)`` and ``f(y^-1) = f(y)^-1``."""
    target = G if structure_name is None else _renamed(G, structure_name)
    fe, e2 = f(G.identity(cfg.m)), G2.identity(cfg.m)
    if fe != e2:
        return _fail_once("group-hom", target, cfg, f.name, "f(e) = e'", fe, e2)

    def check(x, y):
        lhs, rhs = f(G.mul(x, y)), G2.mul(f(x), f(y))
        if lhs != rhs:
            return "f(xy) = f(x)f(y)", lhs, rhs
        lhs, rhs = f(G.inv(y)), G2.inv(f(y))
        if lhs != rhs:
            return "f(y^-1) = f(y)^-1", lhs, rhs
        return None

    return run_trials("group-hom", target, cfg, 2, check, subject=f.name, sample_from=G)


def _renamed(structure, name):
    if isinstance(structure, PointedTernaryStructure):
        return PointedTernaryStructure(replace(structure.ternary, name=name), structure.basepoint)
    return replace(structure, name=name)


def hom_label(h: AlgebraHom) -> str:
    imgs = ",".join(str(x) for x in h.images)
    return f"{h.source_generators}->{h.target_generators}:[{imgs}]"


def check_naturality(S, h: AlgebraHom, cfg: SampleConfig, *, label: str | None = None) -> LawReport:
    """Reparametrization by ``h`` commutes with every operation and fixes basepoints.

    Points are sampled over ``h.source_generators``, overriding ``cfg.m``.
    """
    if isinstance(S, str):
        S = resolve(S)
    cfg = replace(cfg, m=h.source_generators)
    subject = label or hom_label(h)

    def mp(p):
        return map_point(h, p)

    if isinstance(S, GroupStructure):
        e, e2 = mp(S.identity(cfg.m)), S.identity(h.target_generators)
        if e != e2:
            return _fail_once("naturality", S, cfg, subject, "h(e_T) = e_T'", e, e2)

        def check(x, y):
            lhs, rhs = mp(S.mul(x, y)), S.mul(mp(x), mp(y))
            if lhs != rhs:
                return "h(xy) = h(x)h(y)", lhs, rhs
            lhs, rhs = mp(S.inv(x)), S.inv(mp(x))
            if lhs != rhs:
                return "h(x^-1) = h(x)^-1", lhs, rhs
            return None

        return run_trials("naturality", S, cfg, 2, check, subject=subject)

    if isinstance(S, PointedTernaryStructure):
        e, e2 = mp(S.basepoint(cfg.m)), S.basepoint(h.target_generators)
        if e != e2:
            return _fail_once("naturality", S, cfg, subject, "h(e_T) = e_T'", e, e2)

    def check3(x, y, z):
        lhs, rhs = mp(S.bracket(x, y, z)), S.bracket(mp(x), mp(y), mp(z))
        if lhs != rhs:
            return "h([x,y,z]) = [hx,hy,hz]", lhs, rhs
        return None

    return run_trials("naturality", S, cfg, 3, check3, subject=subject)


_CLOSED_FORMS = {
    "trans-heap": ("trans-group", trans_heap_closed_form),
    "mult-heap": ("mult-group", mult_heap_closed_form),
}


def check_closed_form(name: str, cfg: SampleConfig) -> LawReport:
    """Closed-form heap bracket against the generic ``x y^-1 z`` of its group."""
    key = {"trans-group": "trans-heap", "mult-group": "mult-heap"}.get(name, name)
    if key not in _CLOSED_FORMS:
        raise UnknownNameError(f"no closed-form heap law for {name!r}")
    group_name, closed = _CLOSED_FORMS[key]
    generic = heapify(resolve(group_name))
    H = resolve(key)

    def check(x, y, z):
        lhs, rhs = closed(x, y, z), generic.bracket(x, y, z)
        if lhs != rhs:
            return "closed form = x y^-1 z", lhs, rhs
        return None

    return run_trials("closed-form", H, cfg, 3, check)


def check_roundtrip(name: str, cfg: SampleConfig) -> LawReport:
    """``groupify(heapify(G)) = G`` or ``heapify(groupify(H)) = H`` on samples."""
    S = resolve(name)
    closed = _CLOSED_FORMS.get(name) or next(
        ((k, v[1]) for k, v in _CLOSED_FORMS.items() if v[0] == name), None
    )

    if isinstance(S, GroupStructure):
        back = groupify(heapify(S))
        if back.identity(cfg.m) != S.identity(cfg.m):
            return _fail_once("roundtrip", S, cfg, "", "e' = e", back.identity(cfg.m), S.identity(cfg.m))
        heap_br = heapify(S).bracket

        def check(x, y, z):
            lhs, rhs = back.mul(x, y), S.mul(x, y)
            if lhs != rhs:
                return "GH(G).mul = G.mul", lhs, rhs
            lhs, rhs = back.inv(x), S.inv(x)
            if lhs != rhs:
                return "GH(G).inv = G.inv", lhs, rhs
            if closed is not None:
                lhs, rhs = heap_br(x, y, z), closed[1](x, y, z)
                if lhs != rhs:
                    return "H(G).bracket = closed form", lhs, rhs
            return None

        return run_trials("roundtrip", S, cfg, 3, check)

    if not isinstance(S, PointedTernaryStructure) or not S.claims_heap:
        raise UnknownNameError(f"roundtrip needs a group or a pointed heap, not {name!r}")
    back = heapify(groupify(S))
    if back.basepoint(cfg.m) != S.basepoint(cfg.m):
        return _fail_once("roundtrip", S, cfg, "", "e' = e", back.basepoint(cfg.m), S.basepoint(cfg.m))

    def check3(x, y, z):
        lhs, rhs = back.bracket(x, y, z), S.bracket(x, y, z)
        if lhs != rhs:
            return "HG(H).bracket = H.bracket", lhs, rhs
        return None

    return run_trials("roundtrip", S, cfg, 3, check3)


# ---------------------------------------------------------------- homs for naturality


def _gen(m, i):
    return GrassmannElement.generator(m, i)


def standard_homs(m: int) -> list[tuple[str, AlgebraHom]]:
    """Reparametrizations out of the probe with ``m`` odd generators."""
    homs = [
        ("include", make_hom(m, m + 1, [_gen(m + 1, i) for i in range(1, m + 1)])),
        ("reverse", make_hom(m, m, [-_gen(m, m + 1 - i) for i in range(1, m + 1)])),
    ]
    t = m + 2
    if t <= 32:
        homs.append(
            (
                "composite",
                make_hom(
                    m,
                    t,
                    [
                        make_element(t, [([i], 1), ([m + 1], 2), ([i, m + 1, m + 2], 1)])
                        for i in range(1, m + 1)
                    ],
                ),
            )
        )
    homs.append(("collapse", make_hom(m, 1, [_gen(1, 1) * i for i in range(1, m + 1)])))
    homs.append(("to-body", make_hom(m, 0, [GrassmannElement(0)] * m)))
    return homs


def random_hom(m: int, m_target: int, cfg: SampleConfig, rng: random.Random) -> AlgebraHom:
    return make_hom(
        m,
        m_target,
        [random_element(m_target, Parity.ODD, cfg.max_terms, cfg.coeff_pool, rng) for _ in range(m)],
    )


# ---------------------------------------------------------------- suites


def _require(kind_ok: bool, law: str, name: str, need: str):
    if not kind_ok:
        raise UnknownNameError(f"{law} needs {need}; {name!r} is not one")


def _is_ternary(S) -> bool:
    return isinstance(S, (TernaryStructure, PointedTernaryStructure))


def _law_reports(law: str, name: str, cfg: SampleConfig) -> list[LawReport]:
    """All reports for one ``law:structure`` pair at the probe size ``cfg.m``."""
    S = resolve(name)
    if law == "para-assoc":
        _require(_is_ternary(S), law, name, "a ternary structure")
        return [check_para_associativity(S, cfg)]
    if law == "heap-axioms":
        _require(_is_ternary(S), law, name, "a ternary structure")
        return [check_heap_axioms(S, cfg)]
    if law == "group-axioms":
        _require(isinstance(S, GroupStructure), law, name, "a group")
        return [check_group_axioms(S, cfg)]
    if law == "ternary-hom":
        if isinstance(S, GroupStructure):
            # fullness of groupification: group homs respect x y^-1 z
            H = heapify(S)
            return [
                check_ternary_hom(H, H, f, cfg, structure_name=name)
                for f in group_hom_fixtures(name)
            ]
        return [check_ternary_hom(S, S, f, cfg) for f in heap_hom_fixtures(name)]
    if law == "group-hom":
        if isinstance(S, GroupStructure):
            return [check_group_hom(S, S, f, cfg) for f in group_hom_fixtures(name)]
        _require(
            isinstance(S, PointedTernaryStructure) and S.claims_heap,
            law, name, "a group or pointed heap",
        )
        # fullness of heapification: pointed heap endos are group homs
        G = groupify(S)
        return [
            check_group_hom(G, G, f, cfg, structure_name=name)
            for f in heap_hom_fixtures(name, pointed=True)
        ]
    if law == "naturality":
        rng = rng_for(cfg, "naturality-homs", name)
        homs = standard_homs(cfg.m)
        homs.append(("random", random_hom(cfg.m, cfg.m + 1, cfg, rng)))
        return [check_naturality(S, h, cfg, label=label) for label, h in homs]
    if law == "roundtrip":
        return [check_roundtrip(name, cfg)]
    if law == "closed-form":
        return [check_closed_form(name, cfg)]
    raise UnknownNameError(f"unknown law {law!r}")


_ALL = {
    "para-assoc": [
        "r01-semiheap", "r01-heap", "trans-heap", "mult-heap",
        "heapify:trans-group", "heapify:mult-group",
    ],
    "heap-axioms": ["r01-heap", "trans-heap", "mult-heap", "heapify:trans-group", "heapify:mult-group"],
    "group-axioms": [
        "trans-group", "mult-group", "groupify:r01-heap", "groupify:trans-heap", "groupify:mult-heap",
    ],
    "ternary-hom": ["r01-semiheap", "r01-heap", "trans-heap", "mult-heap", "trans-group", "mult-group"],
    "group-hom": ["trans-group", "mult-group", "groupify:r01-heap", "r01-heap", "trans-heap", "mult-heap"],
    "naturality": ["r01-semiheap", "r01-heap", "trans-group", "trans-heap", "mult-group", "mult-heap"],
    "roundtrip": ["trans-group", "mult-group", "r01-heap", "trans-heap", "mult-heap"],
    "closed-form": ["trans-heap", "mult-heap"],
}


def all_selection() -> list[str]:
    """Every ``law:structure`` pair expected to hold."""
    return [f"{law}:{name}" for law in LAWS for name in _ALL[law]]


def parse_selection(selection) -> list[tuple[str, str]]:
    if isinstance(selection, str):
        selection = [s for s in selection.split(",")]
    selection = [s.strip() for s in selection if s and s.strip()]
    if not selection:
        raise UnknownNameError("empty suite selection")
    if selection == ["all"]:
        selection = all_selection()
    out = []
    for item in selection:
        law, sep, name = item.partition(":")
        if not sep or law not in LAWS:
            raise UnknownNameError(f"unknown law in {item!r}; laws are {', '.join(LAWS)}")
        resolve(name)
        out.append((law, name))
    return out


def run_suite(selection: Sequence[str] | str, cfg: SampleConfig) -> list[LawReport]:
    """Run the selected laws for every probe size ``0..cfg.m``.

    Reports come back in selection order, then probe size, then fixture.
    """
    pairs = parse_selection(selection)
    reports = []
    for law, name in pairs:
        for m in range(cfg.m + 1):
            reports.extend(_law_reports(law, name, replace(cfg, m=m)))
    return reports
