"""Finite categories, sieves, interior operators on sieve lattices and
Grothendieck topologies.

A sieve on an object ``c`` is a set of morphisms into ``c`` closed under
precomposition. Sieves on ``c`` ordered by inclusion form a complete
lattice (intersection and union of right ideals are right ideals), built
here through :mod:`ikit.order` so all generic machinery applies.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from .adjunction import synthesize_left_adjoint, synthesize_right_adjoint
from .errors import (
    Associativity,
    CategoryError,
    CompositionClosure,
    IdentityLaw,
    ObjectMismatch,
    Verdict,
)
from .interior import (
    InteriorOp,
    MorphismAction,
    check_interior,
    discrete_op,
    open_elements,
    trivial_op,
)
from .order import CompleteLattice, MonotoneMap, lattice


class FinCategory:
    """A validated small category with an explicit composition table.

    ``comp[(g, f)]`` is ``g ∘ f`` and is defined exactly when ``cod f == dom g``.
    """

    def __init__(self, objects, morphisms, identity, comp):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identity = dict(identity)
        self.comp = dict(comp)
        self._order = {m: k for k, m in enumerate(self.morphisms)}
        self._lattices: dict[Hashable, CompleteLattice] = {}

    def dom(self, f):
        return self.morphisms[f][0]

    def cod(self, f):
        return self.morphisms[f][1]

    def compose(self, g, f):
        return self.comp[(g, f)]

    def into(self, c) -> list:
        """Morphisms with codomain ``c`` in canonical order."""
        return [f for f, (_, y) in self.morphisms.items() if y == c]

    def sort(self, fs: Iterable) -> list:
        return sorted(fs, key=self._order.__getitem__)

    def __repr__(self) -> str:
        return f"FinCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


def validate_category(raw: Mapping) -> FinCategory:
    """Build a category from ``objects``, ``morphisms`` (``[name, dom, cod]``
    triples), ``identities`` (object -> morphism) and ``composition``
    (``[g, f, g∘f]`` triples).

    Checks, in order: every composable pair has a composite, identity laws,
    composites have the right ends, associativity.
    """
    objects = tuple(raw["objects"])
    morphisms = {}
    for name, d, c in raw["morphisms"]:
        if name in morphisms:
            raise CategoryError(name, message=f"duplicate morphism {name!r}")
        if d not in objects or c not in objects:
            raise CategoryError(name, message=f"morphism {name!r} has an unknown end")
        morphisms[name] = (d, c)
    identity = dict(raw["identities"])
    for x in objects:
        i = identity.get(x)
        if i not in morphisms or morphisms[i] != (x, x):
            raise CategoryError(x, message=f"bad identity for object {x!r}")
    comp = {}
    for g, f, gf in raw["composition"]:
        if (g, f) in comp:
            raise CategoryError(g, f, message="composite declared twice")
        if any(m not in morphisms for m in (g, f, gf)):
            raise CategoryError(g, f, gf, message="composition mentions an unknown morphism")
        comp[(g, f)] = gf
    # composites with an identity may be left implicit
    for f, (d, c) in morphisms.items():
        comp.setdefault((identity[c], f), f)
        comp.setdefault((f, identity[d]), f)

    names = list(morphisms)
    for g in names:
        for f in names:
            composable = morphisms[f][1] == morphisms[g][0]
            if composable != ((g, f) in comp):
                raise CompositionClosure(g, f)
    for f, (d, c) in morphisms.items():
        if comp[(identity[c], f)] != f or comp[(f, identity[d])] != f:
            raise IdentityLaw(f)
    for (g, f), gf in comp.items():
        if morphisms[gf] != (morphisms[f][0], morphisms[g][1]):
            raise CompositionClosure(g, f)
    for f in names:
        for g in names:
            if (g, f) not in comp:
                continue
            for h in names:
                if (h, g) in comp and comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)]:
                    raise Associativity(f, g, h)
    return FinCategory(objects, morphisms, identity, comp)


def category_to_raw(C: FinCategory) -> dict:
    """Inverse of :func:`validate_category`, listing only non-identity composites."""
    ids = set(C.identity.values())
    return {
        "objects": list(C.objects),
        "morphisms": [[f, d, c] for f, (d, c) in C.morphisms.items()],
        "identities": dict(C.identity),
        "composition": [[g, f, gf] for (g, f), gf in C.comp.items()
                        if g not in ids and f not in ids],
    }


def arrow_category() -> FinCategory:
    """The category ``2``: objects a, b and one non-identity arrow u: a -> b."""
    return validate_category({
        "objects": ["a", "b"],
        "morphisms": [["id_a", "a", "a"], ["id_b", "b", "b"], ["u", "a", "b"]],
        "identities": {"a": "id_a", "b": "id_b"},
        "composition": [],
    })


def chain_category(objects: Sequence[str] = ("a", "b", "c")) -> FinCategory:
    """A finite chain as a poset category; the arrow ``x -> y`` is named ``xy``."""
    objects = list(objects)
    morphisms = [[f"id_{x}", x, x] for x in objects]
    morphisms += [[x + y, x, y] for i, x in enumerate(objects) for y in objects[i + 1:]]
    comp = [[y + z, x + y, x + z]
            for i, x in enumerate(objects)
            for j, y in enumerate(objects[i + 1:], i + 1)
            for z in objects[j + 1:]]
    return validate_category({
        "objects": objects,
        "morphisms": morphisms,
        "identities": {x: f"id_{x}" for x in objects},
        "composition": comp,
    })


@dataclass(frozen=True)
class Sieve:
    at: Hashable
    arrows: frozenset

    def label(self) -> str:
        return "{" + ",".join(sorted(map(str, self.arrows))) + "}"

    def __repr__(self) -> str:
        return f"Sieve({self.at!r}, {self.label()})"


def is_right_ideal(C: FinCategory, c, arrows: Iterable) -> bool:
    arrows = set(arrows)
    if any(C.cod(f) != c for f in arrows):
        return False
    return all(C.compose(f, g) in arrows
               for f in arrows for g in C.morphisms if C.cod(g) == C.dom(f))


def make_sieve(C: FinCategory, c, arrows: Iterable) -> Sieve:
    arrows = frozenset(arrows)
    if c not in C.objects or not is_right_ideal(C, c, arrows):
        raise ValueError(f"{sorted(arrows)} is not a sieve on {c!r}")
    return Sieve(c, arrows)


def all_sieves(C: FinCategory, c) -> list[Sieve]:
    """Every sieve on ``c``: smallest first, lexicographic in morphism order."""
    if c not in C.objects:
        raise ObjectMismatch(c)
    into = C.into(c)
    return [Sieve(c, frozenset(s)) for r in range(len(into) + 1)
            for s in combinations(into, r) if is_right_ideal(C, c, s)]


def maximal_sieve(C: FinCategory, c) -> Sieve:
    if c not in C.objects:
        raise ObjectMismatch(c)
    return Sieve(c, frozenset(C.into(c)))


def sieve_lattice(C: FinCategory, c) -> CompleteLattice:
    if c not in C._lattices:
        C._lattices[c] = lattice(all_sieves(C, c), lambda s, t: s.arrows <= t.arrows)
    return C._lattices[c]


def pullback_sieve(C: FinCategory, h, S: Sieve) -> Sieve:
    """``h*(S) = {g | cod g = dom h, h ∘ g ∈ S}``."""
    if S.at != C.cod(h):
        raise ObjectMismatch(h, S.at)
    d = C.dom(h)
    return Sieve(d, frozenset(g for g in C.into(d) if C.compose(h, g) in S.arrows))


def pullback_map(C: FinCategory, h) -> MonotoneMap:
    return MonotoneMap.from_mapping(sieve_lattice(C, C.cod(h)), sieve_lattice(C, C.dom(h)),
                                    lambda S: pullback_sieve(C, h, S))


def pullback_action(C: FinCategory, h) -> MorphismAction:
    """``h*`` with both adjoints, synthesized from its meet/join preservation."""
    inv = pullback_map(C, h)
    return MorphismAction(synthesize_left_adjoint(inv), inv, synthesize_right_adjoint(inv))


@dataclass
class SieveInteriorFamily:
    """One self-map of each sieve lattice, keyed by object."""

    category: FinCategory
    ops: dict

    @classmethod
    def from_tables(cls, C: FinCategory, tables: Mapping) -> "SieveInteriorFamily":
        ops = {}
        for c in C.objects:
            lat = sieve_lattice(C, c)
            ops[c] = InteriorOp.from_mapping(lat, tables[c])
        return cls(C, ops)


def discrete_family(C: FinCategory) -> SieveInteriorFamily:
    return SieveInteriorFamily(C, {c: discrete_op(sieve_lattice(C, c)) for c in C.objects})


def trivial_family(C: FinCategory) -> SieveInteriorFamily:
    return SieveInteriorFamily(C, {c: trivial_op(sieve_lattice(C, c)) for c in C.objects})


def check_sieve_interior(family: SieveInteriorFamily) -> Verdict:
    """Contraction, monotonicity and ``i(t_c) = t_c`` at each object in turn."""
    for c in family.category.objects:
        verdict = check_interior(family.ops[c])
        if not verdict:
            return Verdict.failed(verdict.law, c, *verdict.witness)
    return Verdict.passed()


@dataclass
class GrothTopology:
    """A candidate assignment of covering sieves to each object."""

    category: FinCategory
    covers: dict

    def __post_init__(self):
        self.covers = {c: frozenset(self.covers.get(c, ())) for c in self.category.objects}

    def sorted_covers(self, c) -> list[Sieve]:
        return [s for s in all_sieves(self.category, c) if s in self.covers[c]]


def open_sieve_topology(family: SieveInteriorFamily) -> GrothTopology:
    """``J(c)`` = the sieves on ``c`` fixed by the operator at ``c``."""
    return GrothTopology(family.category,
                         {c: open_elements(op) for c, op in family.ops.items()})


def check_grothendieck(J: GrothTopology, e_morphisms: Iterable | None = None) -> Verdict:
    """Maximality, stability under pullback, transitivity; first failure wins.

    When ``e_morphisms`` is given, ``details["premise"]`` reports whether
    every covering sieve contains one of them, and ``premise_failures``
    lists the ``(object, sieve)`` pairs that do not.
    """
    C = J.category
    details = {}
    if e_morphisms is not None:
        es = set(e_morphisms)
        misses = [(c, S) for c in C.objects for S in J.sorted_covers(c) if not S.arrows & es]
        details = {"premise": not misses, "premise_failures": misses}
    for c in C.objects:
        if maximal_sieve(C, c) not in J.covers[c]:
            return Verdict.failed("maximality", c, **details)
    for h in C.morphisms:
        for S in J.sorted_covers(C.cod(h)):
            pulled = pullback_sieve(C, h, S)
            if pulled not in J.covers[C.dom(h)]:
                return Verdict.failed("stability", h, S, **details)
    for c in C.objects:
        for S in J.sorted_covers(c):
            for R in all_sieves(C, c):
                if R in J.covers[c]:
                    continue
                if all(pullback_sieve(C, h, R) in J.covers[C.dom(h)] for h in C.sort(S.arrows)):
                    return Verdict.failed("transitivity", c, S, R, **details)
    return Verdict.passed(**details)


def check_pullback_functoriality(C: FinCategory) -> Verdict:
    """``id*(S) = S`` and ``(h ∘ k)*(S) = k*(h*(S))``; every pullback is a sieve."""
    for c in C.objects:
        for S in all_sieves(C, c):
            if pullback_sieve(C, C.identity[c], S) != S:
                return Verdict.failed("identity", c, S)
    for (h, k), hk in C.comp.items():
        for S in all_sieves(C, C.cod(h)):
            pulled = pullback_sieve(C, h, S)
            if not is_right_ideal(C, pulled.at, pulled.arrows):
                return Verdict.failed("right_ideal", h, S)
            if pullback_sieve(C, hk, S) != pullback_sieve(C, k, pulled):
                return Verdict.failed("composition", h, k, S)
    return Verdict.passed()
