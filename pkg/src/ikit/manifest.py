"""JSON manifests: parsing into library objects and canonical serialization.

A manifest is one JSON object ``{"kind": ..., "body": ..., "checks": [...]}``.
Every body is parsed into library objects and dumped back from them, so
``dumps(parse(text))`` reproduces a canonical file byte for byte.
"""

from __future__ import annotations

import json
from collections.abc import Hashable, Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from . import catalog, fuzzy, sieves
from .catalog import label
from .errors import CategoryError, IkitError
from .interior import InteriorOp
from .kuratowski import Topology
from .order import CompleteLattice, FinPoset, MonotoneMap, as_complete_lattice, validate_poset
from .sets import FinFunction

KINDS = (
    "poset", "lattice", "monotone-map", "function", "interior", "category",
    "sieve-interior", "gl-monoid", "fuzzy-interior", "topology-candidate",
)


class ParseError(Exception):
    def __init__(self, where: str, expected: str):
        self.where = where
        self.expected = expected
        super().__init__(f"{where}: expected {expected}")


def _need(obj: Mapping, key: str, where: str, kind: type | tuple = object):
    if not isinstance(obj, Mapping) or key not in obj:
        raise ParseError(where, f"key {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ParseError(f"{where}.{key}", names)
    return value


def _pairs(raw, where: str, arity: int = 2) -> list[tuple]:
    if not isinstance(raw, list) or not all(isinstance(p, list) and len(p) == arity for p in raw):
        raise ParseError(where, f"list of {arity}-element lists")
    return [tuple(p) for p in raw]


# lattices -----------------------------------------------------------------

_BUILTIN_LATTICES = {
    "chain": lambda raw, w: catalog.chain(_need(raw, "size", w, int),
                                          [str(k) for k in range(raw["size"])]),
    "powerset": lambda raw, w: catalog.powerset(list(_need(raw, "points", w, list))),
    "M3": lambda raw, w: catalog.diamond(),
    "N5": lambda raw, w: catalog.pentagon(),
    "bowtie": lambda raw, w: catalog.bowtie(),
}


class LatticeSpec:
    """A poset as written in a manifest: a builtin or explicit elements/leq.

    Validation is deferred so that ``validate_poset`` and
    ``as_complete_lattice`` can run as reported checks.
    """

    def __init__(self, elements, leq=None, builtin: dict | None = None, poset=None):
        self.elements = tuple(elements)
        self.leq_pairs = leq
        self.builtin = builtin
        self._poset = poset
        self._lattice = poset if isinstance(poset, CompleteLattice) else None
        self.names = {label(x): x for x in self.elements}

    @property
    def poset(self) -> FinPoset:
        if self._poset is None:
            self._poset = validate_poset(self.elements, self.leq_pairs)
        return self._poset

    @property
    def lattice(self) -> CompleteLattice:
        if self._lattice is None:
            self._lattice = as_complete_lattice(self.poset)
        return self._lattice

    def element(self, name: str, where: str) -> Hashable:
        if name not in self.names:
            raise ParseError(where, f"an element of the lattice, got {name!r}")
        return self.names[name]


def parse_lattice(raw, where: str, *, complete: bool = True) -> LatticeSpec:
    """Explicit ``{"elements", "leq"}`` or ``{"builtin": name, ...}``.

    With ``complete`` the lattice is built immediately and order errors
    propagate to the caller.
    """
    if isinstance(raw, Mapping) and "builtin" in raw:
        name = raw["builtin"]
        if name not in _BUILTIN_LATTICES:
            raise ParseError(f"{where}.builtin", "one of " + ", ".join(_BUILTIN_LATTICES))
        poset = _BUILTIN_LATTICES[name](raw, where)
        spec = LatticeSpec(poset.elements, builtin=dict(raw), poset=poset)
    else:
        elements = _need(raw, "elements", where, list)
        if not elements or not all(isinstance(e, str) for e in elements):
            raise ParseError(f"{where}.elements", "non-empty list of strings")
        if len(set(elements)) != len(elements):
            raise ParseError(f"{where}.elements", "distinct names")
        leq = _pairs(_need(raw, "leq", where, list), f"{where}.leq")
        unknown = [x for pair in leq for x in pair if x not in set(elements)]
        if unknown:
            raise ParseError(f"{where}.leq", f"known elements, got {unknown[0]!r}")
        spec = LatticeSpec(elements, leq)
    if complete:
        try:
            spec.lattice  # noqa: B018
        except IkitError as exc:
            raise ParseError(where, f"a complete lattice ({type(exc).__name__} {[label(w) for w in exc.witness]})") from None
    return spec


def dump_lattice(spec: LatticeSpec) -> dict:
    if spec.builtin is not None:
        return dict(spec.builtin)
    return {"elements": list(spec.elements), "leq": [list(p) for p in spec.leq_pairs]}


def _table(spec_from: LatticeSpec, spec_to: LatticeSpec, raw, where: str) -> dict:
    table = {}
    for x, y in _pairs(raw, where):
        table[spec_from.element(x, where)] = spec_to.element(y, where)
    missing = [label(x) for x in spec_from.elements if x not in table]
    if missing:
        raise ParseError(where, f"an entry for {missing[0]!r}")
    return table


def _dump_table(dom, fn) -> list:
    return [[label(x), label(fn(x))] for x in dom.elements]


# kind-specific bodies ---------------------------------------------------------

@dataclass
class Manifest:
    kind: str
    body: Any
    checks: list[str]


@dataclass
class MapBody:
    dom: LatticeSpec
    cod: LatticeSpec
    table: MonotoneMap
    adjoint: MonotoneMap | None


@dataclass
class InteriorBody:
    lattice: LatticeSpec
    op: InteriorOp


@dataclass
class SieveInteriorBody:
    category: sieves.FinCategory
    family: sieves.SieveInteriorFamily
    builtin: str | None


@dataclass
class MonoidBody:
    monoid: fuzzy.GLMonoid
    builtin: dict | None
    lattice: LatticeSpec | None


@dataclass
class FuzzyBody:
    monoid: MonoidBody
    space: fuzzy.FuzzySpace
    op: fuzzy.FuzzyInterior
    i7: str


@dataclass
class CoverBody:
    category: sieves.FinCategory
    topology: sieves.GrothTopology
    e_morphisms: list | None


@dataclass
class CategoryBody:
    """Category tables kept as written; validated on first use."""

    raw: dict

    @cached_property
    def category(self) -> sieves.FinCategory:
        return sieves.validate_category(self.raw)


def _category_raw(raw, where: str) -> dict:
    out = {}
    for key, kind in (("objects", list), ("morphisms", list), ("identities", dict),
                      ("composition", list)):
        out[key] = _need(raw, key, where, kind)
    _pairs(raw["morphisms"], f"{where}.morphisms", 3)
    _pairs(raw["composition"], f"{where}.composition", 3)
    return out


def parse_category(raw, where: str) -> sieves.FinCategory:
    """Nested categories must be valid; a violated law is an input error."""
    try:
        return sieves.validate_category(_category_raw(raw, where))
    except CategoryError as exc:
        raise ParseError(where, f"a valid category ({exc})") from None


def _parse_sieve(C: sieves.FinCategory, c, raw, where: str) -> sieves.Sieve:
    if not isinstance(raw, list) or any(f not in C.morphisms for f in raw):
        raise ParseError(where, f"list of morphisms into {c!r}")
    arrows = frozenset(raw)
    if not sieves.is_right_ideal(C, c, arrows):
        raise ParseError(where, f"a sieve on {c!r}, got {sorted(arrows)}")
    return sieves.Sieve(c, arrows)


def dump_sieve(C: sieves.FinCategory, s: sieves.Sieve) -> list:
    return C.sort(s.arrows)


def parse_monoid(raw, where: str) -> MonoidBody:
    if isinstance(raw, Mapping) and "builtin" in raw:
        name = raw["builtin"]
        size = _need(raw, "size", where, int)
        makers = {"min": fuzzy.min_monoid, "lukasiewicz": fuzzy.lukasiewicz_monoid}
        if name not in makers:
            raise ParseError(f"{where}.builtin", "min or lukasiewicz")
        return MonoidBody(makers[name](size), dict(raw), None)
    spec = parse_lattice(_need(raw, "lattice", where), f"{where}.lattice")
    L = spec.lattice
    rows = _pairs(_need(raw, "tensor", where, list), f"{where}.tensor", 3)
    table = {}
    for a, b, c in rows:
        table[(spec.element(a, where), spec.element(b, where))] = spec.element(c, where)
    for a in L.elements:
        for b in L.elements:
            if (a, b) not in table:
                raise ParseError(f"{where}.tensor", f"an entry for {[label(a), label(b)]}")
    return MonoidBody(fuzzy.GLMonoid.from_function(L, lambda a, b: table[(a, b)]), None, spec)


def dump_monoid(m: MonoidBody) -> dict:
    if m.builtin is not None:
        return dict(m.builtin)
    L = m.monoid.carrier
    return {"lattice": dump_lattice(m.lattice),
            "tensor": [[label(a), label(b), label(m.monoid(a, b))] for a in L for b in L]}


def _fuzzy_value(space: fuzzy.FuzzySpace, raw, where: str) -> tuple:
    L = space.monoid.carrier
    names = {label(x): x for x in L.elements}
    if not isinstance(raw, list) or len(raw) != len(space.ground) or any(v not in names for v in raw):
        raise ParseError(where, f"list of {len(space.ground)} carrier values")
    return tuple(names[v] for v in raw)


def parse_body(kind: str, raw, cap: int | None = None):
    where = "body"
    if kind in ("poset", "lattice"):
        return parse_lattice(raw, where, complete=False)
    if kind == "monotone-map":
        dom = parse_lattice(_need(raw, "dom", where), "body.dom")
        cod = parse_lattice(_need(raw, "cod", where), "body.cod")
        t = _table(dom, cod, _need(raw, "table", where, list), "body.table")
        phi = MonotoneMap.from_mapping(dom.lattice, cod.lattice, t)
        psi = None
        if "adjoint" in raw:
            a = _table(cod, dom, _need(raw, "adjoint", where, list), "body.adjoint")
            psi = MonotoneMap.from_mapping(cod.lattice, dom.lattice, a)
        return MapBody(dom, cod, phi, psi)
    if kind == "function":
        dom = _need(raw, "dom", where, list)
        cod = _need(raw, "cod", where, list)
        mapping = dict(_pairs(_need(raw, "map", where, list), "body.map"))
        try:
            return FinFunction(dom, cod, mapping)
        except ValueError as exc:
            raise ParseError("body.map", str(exc)) from None
    if kind == "interior":
        spec = parse_lattice(_need(raw, "lattice", where), "body.lattice")
        t = _table(spec, spec, _need(raw, "table", where, list), "body.table")
        return InteriorBody(spec, InteriorOp.from_mapping(spec.lattice, t))
    if kind == "category":
        return CategoryBody(_category_raw(raw, where))
    if kind == "sieve-interior":
        C = parse_category(_need(raw, "category", where), "body.category")
        if "family" in raw:
            makers = {"discrete": sieves.discrete_family, "trivial": sieves.trivial_family}
            if raw["family"] not in makers:
                raise ParseError("body.family", "discrete or trivial")
            return SieveInteriorBody(C, makers[raw["family"]](C), raw["family"])
        tables = _need(raw, "tables", where, dict)
        parsed = {}
        for c in C.objects:
            w = f"body.tables.{c}"
            if c not in tables:
                raise ParseError("body.tables", f"a table for object {c!r}")
            rows = _pairs(tables[c], w)
            parsed[c] = {_parse_sieve(C, c, s, w): _parse_sieve(C, c, t, w) for s, t in rows}
            missing = [s for s in sieves.all_sieves(C, c) if s not in parsed[c]]
            if missing:
                raise ParseError(w, f"an entry for sieve {dump_sieve(C, missing[0])}")
        return SieveInteriorBody(C, sieves.SieveInteriorFamily.from_tables(C, parsed), None)
    if kind == "gl-monoid":
        return parse_monoid(raw, where)
    if kind == "fuzzy-interior":
        mono = parse_monoid(_need(raw, "monoid", where), "body.monoid")
        ground = _need(raw, "ground", where, list)
        space = fuzzy.FuzzySpace(mono.monoid, ground, cap)
        i7 = raw.get("i7", "constant")
        if i7 not in fuzzy.I7_READINGS:
            raise ParseError("body.i7", " or ".join(fuzzy.I7_READINGS))
        rows = _pairs(_need(raw, "table", where, list), "body.table", 3)
        L = mono.monoid.carrier
        names = {label(x): x for x in L.elements}
        entries = {}
        for f, a, g in rows:
            if a not in names:
                raise ParseError("body.table", f"a carrier value, got {a!r}")
            entries[(_fuzzy_value(space, f, "body.table"), names[a])] = \
                _fuzzy_value(space, g, "body.table")
        for f in space.fuzzy_sets():
            for a in L.elements:
                if (f, a) not in entries:
                    raise ParseError("body.table", f"an entry for {[[label(v) for v in f], label(a)]}")
        op = fuzzy.FuzzyInterior.from_function(space, lambda f, a: entries[(f, a)])
        return FuzzyBody(mono, space, op, i7)
    if kind == "topology-candidate":
        if "category" in raw:
            C = parse_category(raw["category"], "body.category")
            covers_raw = _need(raw, "covers", where, dict)
            covers = {}
            for c in C.objects:
                w = f"body.covers.{c}"
                rows = covers_raw.get(c, [])
                if not isinstance(rows, list):
                    raise ParseError(w, "list of sieves")
                covers[c] = [_parse_sieve(C, c, s, w) for s in rows]
            es = raw.get("e_morphisms")
            if es is not None and (not isinstance(es, list) or any(e not in C.morphisms for e in es)):
                raise ParseError("body.e_morphisms", "list of morphisms")
            return CoverBody(C, sieves.GrothTopology(C, covers), es)
        ground = _need(raw, "ground", where, list)
        opens = _need(raw, "opens", where, list)
        if not all(isinstance(u, list) for u in opens):
            raise ParseError("body.opens", "list of point lists")
        return Topology(ground, opens)
    raise ParseError("kind", "one of " + ", ".join(KINDS))


def dump_body(kind: str, body) -> Any:
    if kind in ("poset", "lattice"):
        return dump_lattice(body)
    if kind == "monotone-map":
        out = {"dom": dump_lattice(body.dom), "cod": dump_lattice(body.cod),
               "table": _dump_table(body.table.dom, body.table)}
        if body.adjoint is not None:
            out["adjoint"] = _dump_table(body.adjoint.dom, body.adjoint)
        return out
    if kind == "function":
        return {"dom": list(body.dom), "cod": list(body.cod),
                "map": [[x, body(x)] for x in body.dom]}
    if kind == "interior":
        return {"lattice": dump_lattice(body.lattice),
                "table": _dump_table(body.op.carrier, body.op)}
    if kind == "category":
        return dict(body.raw)
    if kind == "sieve-interior":
        C = body.category
        out = {"category": sieves.category_to_raw(C)}
        if body.builtin is not None:
            out["family"] = body.builtin
            return out
        out["tables"] = {c: [[dump_sieve(C, s), dump_sieve(C, op(s))] for s in op.carrier.elements]
                         for c, op in body.family.ops.items()}
        return out
    if kind == "gl-monoid":
        return dump_monoid(body)
    if kind == "fuzzy-interior":
        S, L = body.space, body.space.monoid.carrier
        out = {"monoid": dump_monoid(body.monoid), "ground": list(S.ground)}
        if body.i7 != "constant":
            out["i7"] = body.i7
        out["table"] = [[[label(v) for v in f], label(a), [label(v) for v in body.op(f, a)]]
                        for f in S.fuzzy_sets() for a in L.elements]
        return out
    if kind == "topology-candidate":
        if isinstance(body, CoverBody):
            C = body.category
            out = {"category": sieves.category_to_raw(C),
                   "covers": {c: [dump_sieve(C, s) for s in body.topology.sorted_covers(c)]
                              for c in C.objects}}
            if body.e_morphisms is not None:
                out["e_morphisms"] = list(body.e_morphisms)
            return out
        pos = {p: k for k, p in enumerate(body.ground)}
        return {"ground": list(body.ground),
                "opens": [sorted(u, key=pos.__getitem__) for u in body.sorted_opens()]}
    raise ValueError(kind)


def loads(text: str, cap: int | None = None) -> Manifest:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}", "valid JSON") from None
    kind = _need(raw, "kind", "manifest", str)
    if kind not in KINDS:
        raise ParseError("manifest.kind", "one of " + ", ".join(KINDS))
    checks = _need(raw, "checks", "manifest", list)
    if not all(isinstance(c, str) for c in checks):
        raise ParseError("manifest.checks", "list of check names")
    return Manifest(kind, parse_body(kind, _need(raw, "body", "manifest"), cap), list(checks))


def to_json(m: Manifest) -> dict:
    return {"kind": m.kind, "body": dump_body(m.kind, m.body), "checks": list(m.checks)}


def dumps(obj) -> str:
    """Canonical text: two-space indent, scalar-only lists kept on one line."""
    if isinstance(obj, Manifest):
        obj = to_json(obj)
    return _format(obj, 0) + "\n"


def _format(obj, depth: int, row: bool = False) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, Mapping):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {_format(v, depth + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if _nesting(obj) <= (2 if row else 1):
            return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))
        rows = [inner + _format(v, depth + 1, row=True) for v in obj]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def _nesting(v) -> int:
    """Depth of list nesting; mappings count as unbounded."""
    if isinstance(v, Mapping):
        return 99
    if isinstance(v, (list, tuple)):
        return 1 + max((_nesting(w) for w in v), default=0)
    return 0
