"""Subsets along a finite function: direct, inverse and universal image.

Subsets are frozensets. The three image maps assemble into the adjoint
triple ``∃f ⊣ f⁻¹ ⊣ ∀f`` between the powerset lattices of domain and
codomain.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product

from .adjunction import is_adjoint_pair
from .catalog import powerset
from .errors import NotASubset, PreconditionViolated, Verdict
from .interior import MorphismAction
from .order import MonotoneMap


@dataclass(frozen=True)
class FinFunction:
    """A total function between finite sets, kept with its element orders."""

    dom: tuple
    cod: tuple
    map: Mapping = field(hash=False)

    def __init__(self, dom: Sequence[Hashable], cod: Sequence[Hashable], mapping: Mapping):
        dom, cod = tuple(dom), tuple(cod)
        if len(set(dom)) != len(dom) or len(set(cod)) != len(cod):
            raise ValueError("duplicate points")
        missing = [x for x in dom if x not in mapping]
        if missing:
            raise ValueError(f"function undefined at {missing[0]!r}")
        stray = [x for x in dom if mapping[x] not in cod]
        if stray:
            raise ValueError(f"value of {stray[0]!r} lies outside the codomain")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "map", {x: mapping[x] for x in dom})

    def __call__(self, x):
        return self.map[x]

    @classmethod
    def identity(cls, points: Sequence[Hashable]) -> "FinFunction":
        return cls(points, points, {p: p for p in points})

    def then(self, other: "FinFunction") -> "FinFunction":
        """``other ∘ self``."""
        if other.dom != self.cod:
            raise ValueError("functions are not composable")
        return FinFunction(self.dom, other.cod, {x: other(self(x)) for x in self.dom})

    @property
    def injective(self) -> bool:
        return len(set(self.map.values())) == len(self.dom)

    @property
    def surjective(self) -> bool:
        return set(self.map.values()) == set(self.cod)


def _subset(points: tuple, xs: Iterable, side: str) -> frozenset:
    s = frozenset(xs)
    if not s <= set(points):
        raise NotASubset(side, *sorted(s - set(points), key=repr))
    return s


def inverse_image(f: FinFunction, N: Iterable) -> frozenset:
    N = _subset(f.cod, N, "codomain")
    return frozenset(x for x in f.dom if f(x) in N)


def direct_image(f: FinFunction, M: Iterable) -> frozenset:
    M = _subset(f.dom, M, "domain")
    return frozenset(f(x) for x in M)


def universal_image(f: FinFunction, M: Iterable) -> frozenset:
    """Points of the codomain whose whole fibre lies inside ``M``."""
    M = _subset(f.dom, M, "domain")
    return frozenset(y for y in f.cod if all(x in M for x in f.dom if f(x) == y))


@dataclass(frozen=True)
class AdjointTriple:
    """``existential ⊣ inverse ⊣ universal`` on powerset lattices."""

    existential: MonotoneMap
    inverse: MonotoneMap
    universal: MonotoneMap


def triple_of(f: FinFunction) -> AdjointTriple:
    """Package the three image maps and verify both adjunctions."""
    PX, PY = powerset(f.dom), powerset(f.cod)
    ex = MonotoneMap.from_mapping(PX, PY, lambda m: direct_image(f, m))
    inv = MonotoneMap.from_mapping(PY, PX, lambda n: inverse_image(f, n))
    univ = MonotoneMap.from_mapping(PX, PY, lambda m: universal_image(f, m))
    for left, right in ((ex, inv), (inv, univ)):
        verdict = is_adjoint_pair(left, right)
        if not verdict:
            raise PreconditionViolated(*verdict.witness, message="image maps are not adjoint")
    return AdjointTriple(ex, inv, univ)


def check_mono_epi_laws(f: FinFunction) -> Verdict:
    """Injectivity/surjectivity consequences for subset images.

    With monos = injections and epis = surjections:

    1. injective ⇒ ``f⁻¹(∅) = ∅``;
    2. surjective ⇔ ``f(X) = Y``;
    3. injective ⇒ ``f⁻¹(f(M)) = M`` for all M;
    4. surjective ⇒ ``f(f⁻¹(N)) = N`` for all N.

    ``details`` records which hypotheses hold, whether ``f(∅) = ∅`` (true for
    every function), and for non-injective ``f`` a subset where law 3 fails.
    """
    PX, PY = powerset(f.dom), powerset(f.cod)
    details = {"injective": f.injective, "surjective": f.surjective,
               "image_of_empty_is_empty": direct_image(f, ()) == frozenset()}
    retract_failures = [M for M in PX.elements if inverse_image(f, direct_image(f, M)) != M]
    if not f.injective and retract_failures:
        details["law3_counterexample"] = retract_failures[0]

    if f.injective:
        if inverse_image(f, ()) != frozenset():
            return Verdict.failed("law1", frozenset(), **details)
        if retract_failures:
            return Verdict.failed("law3", retract_failures[0], **details)
    if f.surjective != (direct_image(f, f.dom) == frozenset(f.cod)):
        return Verdict.failed("law2", frozenset(f.dom), **details)
    if f.surjective:
        for N in PY.elements:
            if direct_image(f, inverse_image(f, N)) != N:
                return Verdict.failed("law4", N, **details)
    return Verdict.passed(**details)


def all_functions(dom: Sequence[Hashable], cod: Sequence[Hashable]):
    """Every function ``dom -> cod`` in lexicographic order of value tuples."""
    for values in product(cod, repeat=len(dom)):
        yield FinFunction(dom, cod, dict(zip(dom, values)))


def action_of(f: FinFunction) -> MorphismAction:
    """The subset action of ``f`` as used by the interior-operator machinery."""
    return MorphismAction.from_triple(triple_of(f))
