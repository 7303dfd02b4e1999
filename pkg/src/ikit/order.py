"""Finite posets, complete lattices and monotone maps.

Elements are opaque hashable identifiers. Their input order is kept as the
canonical order: it fixes iteration and the choice of witnesses, nothing
else. Internally everything is indexed by position in that order, and the
order relation, meet and join are stored as dense numpy tables.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping, Sequence
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import (
    AntisymmetryViolation,
    CapExceeded,
    DomainMismatch,
    NotALattice,
    ReflexivityViolation,
    TransitivityViolation,
    Verdict,
)

#: Largest carrier for which operations iterate over all subsets.
DEFAULT_SUBSET_CAP = 12


class FinPoset:
    """A validated finite partial order. Build through :func:`validate_poset`."""

    def __init__(self, elements: Sequence[Hashable], leq_matrix: np.ndarray):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.leq_matrix = leq_matrix
        self.leq_matrix.setflags(write=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} elements)"

    def leq(self, x: Hashable, y: Hashable) -> bool:
        return bool(self.leq_matrix[self.index[x], self.index[y]])

    def indices(self, xs: Iterable[Hashable]) -> list[int]:
        return [self.index[x] for x in xs]

    def same_as(self, other: "FinPoset") -> bool:
        return self is other or (
            self.elements == other.elements
            and np.array_equal(self.leq_matrix, other.leq_matrix)
        )

    @cached_property
    def linear_extension(self) -> list[int]:
        """Indices sorted so that every element comes after everything below it."""
        below = self.leq_matrix.sum(axis=0)
        return sorted(range(len(self)), key=lambda i: (below[i], i))


def validate_poset(
    elements: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool] | Iterable[tuple[Hashable, Hashable]],
) -> FinPoset:
    """Check the partial-order laws and return the poset.

    ``leq`` is either a predicate or the full relation as a collection of
    pairs. The first violation in canonical order is raised with its witness.
    """
    elements = tuple(elements)
    if not elements:
        raise ValueError("a poset needs at least one element")
    if len(set(elements)) != len(elements):
        raise ValueError("duplicate elements")
    n = len(elements)
    if callable(leq):
        rel = np.array([[bool(leq(x, y)) for y in elements] for x in elements], dtype=bool)
        rel = rel.reshape(n, n)
    else:
        index = {x: i for i, x in enumerate(elements)}
        rel = np.zeros((n, n), dtype=bool)
        for x, y in leq:
            if x not in index or y not in index:
                raise ValueError(f"relation mentions unknown element in {(x, y)!r}")
            rel[index[x], index[y]] = True

    diag = np.flatnonzero(~np.diagonal(rel))
    if diag.size:
        raise ReflexivityViolation(elements[diag[0]])
    two_cycles = np.argwhere(rel & rel.T & ~np.eye(n, dtype=bool))
    if two_cycles.size:
        i, j = two_cycles[0]
        raise AntisymmetryViolation(elements[i], elements[j])
    broken = rel[:, :, None] & rel[None, :, :] & ~rel[:, None, :]
    triples = np.argwhere(broken)
    if triples.size:
        i, j, k = triples[0]
        raise TransitivityViolation(elements[i], elements[j], elements[k])
    return FinPoset(elements, rel)


class CompleteLattice(FinPoset):
    """A finite poset together with precomputed meet and join tables."""

    def __init__(self, poset: FinPoset, meet_table: np.ndarray, join_table: np.ndarray,
                 top: int, bottom: int):
        super().__init__(poset.elements, poset.leq_matrix)
        self.meet_table = meet_table
        self.join_table = join_table
        self.top_index = top
        self.bottom_index = bottom
        meet_table.setflags(write=False)
        join_table.setflags(write=False)

    @property
    def top(self) -> Hashable:
        return self.elements[self.top_index]

    @property
    def bottom(self) -> Hashable:
        return self.elements[self.bottom_index]

    def meet(self, x: Hashable, y: Hashable) -> Hashable:
        return self.elements[self.meet_table[self.index[x], self.index[y]]]

    def join(self, x: Hashable, y: Hashable) -> Hashable:
        return self.elements[self.join_table[self.index[x], self.index[y]]]

    def meet_idx(self, idx: Iterable[int]) -> int:
        acc = self.top_index
        for i in idx:
            acc = self.meet_table[acc, i]
        return int(acc)

    def join_idx(self, idx: Iterable[int]) -> int:
        acc = self.bottom_index
        for i in idx:
            acc = self.join_table[acc, i]
        return int(acc)

    def meet_all(self, xs: Iterable[Hashable]) -> Hashable:
        return self.elements[self.meet_idx(self.index[x] for x in xs)]

    def join_all(self, xs: Iterable[Hashable]) -> Hashable:
        return self.elements[self.join_idx(self.index[x] for x in xs)]

    def check_subset_cap(self, cap: int | None) -> None:
        cap = DEFAULT_SUBSET_CAP if cap is None else cap
        if len(self) > cap:
            raise CapExceeded("subset iteration", len(self), cap)

    def subset_meets(self, cap: int | None = None) -> np.ndarray:
        """Meet of every subset, indexed by bitmask over element positions."""
        return self._subset_fold(self.meet_table, self.top_index, cap, "_subset_meets")

    def subset_joins(self, cap: int | None = None) -> np.ndarray:
        return self._subset_fold(self.join_table, self.bottom_index, cap, "_subset_joins")

    def _subset_fold(self, table, unit, cap, attr):
        cached = self.__dict__.get(attr)
        if cached is not None:
            return cached
        self.check_subset_cap(cap)
        out = fold_subsets(table, unit, np.arange(len(self)))
        out.setflags(write=False)
        self.__dict__[attr] = out
        return out


def fold_subsets(table: np.ndarray, unit: int, values: np.ndarray) -> np.ndarray:
    """``out[mask]`` folds ``table`` over ``values[i]`` for the bits ``i`` of ``mask``."""
    out = np.empty(1 << len(values), dtype=np.intp)
    out[0] = unit
    for k, v in enumerate(values):
        half = 1 << k
        out[half:2 * half] = table[out[:half], v]
    return out


def mask_members(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def first_mask(masks: Iterable[int]) -> int | None:
    """Smallest subset first, ties broken lexicographically in element order."""
    best = None
    for m in masks:
        key = (bin(m).count("1"), mask_members(m))
        if best is None or key < best[0]:
            best = (key, m)
    return None if best is None else best[1]


def _greatest(rel: np.ndarray, candidates: np.ndarray) -> int | None:
    """Index of the greatest element of ``candidates`` (a boolean mask), if any."""
    idx = np.flatnonzero(candidates)
    for z in idx:
        if rel[idx, z].all():
            return int(z)
    return None


def as_complete_lattice(p: FinPoset) -> CompleteLattice:
    """Compute meet/join tables or raise :class:`NotALattice` with the subset.

    Meets are greatest lower bounds; a join is obtained as the meet of the
    set of upper bounds. Pairs are examined in canonical order, which covers
    every subset of a finite non-empty poset.
    """
    rel = p.leq_matrix
    n = len(p)
    top = _greatest(rel, np.ones(n, dtype=bool))
    lowest = np.flatnonzero(rel.all(axis=1))
    bottom = int(lowest[0]) if lowest.size else None

    def glb(mask: np.ndarray) -> int | None:
        lower = rel[:, mask].all(axis=1)
        return _greatest(rel, lower)

    meet = np.empty((n, n), dtype=np.intp)
    join = np.empty((n, n), dtype=np.intp)
    for i in range(n):
        for j in range(i, n):
            pair = np.zeros(n, dtype=bool)
            pair[[i, j]] = True
            m = glb(pair)
            if m is None:
                raise NotALattice(*(p.elements[k] for k in sorted({i, j})))
            upper = rel[pair, :].all(axis=0)
            u = glb(upper) if upper.any() else None
            if u is None or not upper[u]:
                raise NotALattice(*(p.elements[k] for k in sorted({i, j})))
            meet[i, j] = meet[j, i] = m
            join[i, j] = join[j, i] = u
    if top is None or bottom is None:
        raise NotALattice()
    return CompleteLattice(p, meet, join, top, bottom)


def lattice(elements: Sequence[Hashable], leq) -> CompleteLattice:
    """Shorthand for ``as_complete_lattice(validate_poset(elements, leq))``."""
    return as_complete_lattice(validate_poset(elements, leq))


class MonotoneMap:
    """A total map between two lattices, stored as an index table.

    Monotonicity is not enforced at construction; :func:`check_monotone`
    decides it.
    """

    def __init__(self, dom: CompleteLattice, cod: CompleteLattice, table):
        table = np.asarray(table, dtype=np.intp)
        if table.shape != (len(dom),):
            raise ValueError(f"table must have one entry per domain element, got {table.shape}")
        if table.size and (table.min() < 0 or table.max() >= len(cod)):
            raise ValueError("table entry outside the codomain")
        self.dom = dom
        self.cod = cod
        self.table = table
        self.table.setflags(write=False)

    @classmethod
    def from_mapping(cls, dom: CompleteLattice, cod: CompleteLattice,
                     mapping: Mapping | Callable) -> "MonotoneMap":
        get = mapping if callable(mapping) else mapping.__getitem__
        return cls(dom, cod, [cod.index[get(x)] for x in dom.elements])

    @classmethod
    def identity(cls, lat: CompleteLattice) -> "MonotoneMap":
        return cls(lat, lat, np.arange(len(lat)))

    @classmethod
    def constant(cls, dom: CompleteLattice, cod: CompleteLattice, value: Hashable) -> "MonotoneMap":
        return cls(dom, cod, np.full(len(dom), cod.index[value]))

    def __call__(self, x: Hashable) -> Hashable:
        return self.cod.elements[self.table[self.dom.index[x]]]

    def as_dict(self) -> dict:
        return {x: self.cod.elements[t] for x, t in zip(self.dom.elements, self.table)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return (self.dom.same_as(other.dom) and self.cod.same_as(other.cod)
                and np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"MonotoneMap({self.as_dict()!r})"

    def then(self, other: "MonotoneMap") -> "MonotoneMap":
        """``other ∘ self``."""
        if not self.cod.same_as(other.dom):
            raise DomainMismatch("composition", self, other)
        return MonotoneMap(self.dom, other.cod, other.table[self.table])


def compose(*maps: MonotoneMap) -> MonotoneMap:
    """``compose(g, f)`` is ``g ∘ f``, applied right to left."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = out.then(m)
    return out


def check_monotone(m: MonotoneMap) -> Verdict:
    """Passes, or fails with the first pair ``x <= y`` whose images are not ordered."""
    image_leq = m.cod.leq_matrix[np.ix_(m.table, m.table)]
    bad = np.argwhere(m.dom.leq_matrix & ~image_leq)
    if bad.size:
        i, j = bad[0]
        return Verdict.failed("monotone", m.dom.elements[i], m.dom.elements[j])
    return Verdict.passed()


def monotone_maps(dom: CompleteLattice, cod: CompleteLattice) -> Iterator[np.ndarray]:
    """Yield every monotone index table ``dom -> cod`` (tables are reused copies)."""
    order = dom.linear_extension
    below = [[j for j in order[:pos] if dom.leq_matrix[j, i]] for pos, i in enumerate(order)]
    cod_leq = cod.leq_matrix
    table = np.zeros(len(dom), dtype=np.intp)
    m = len(cod)

    def extend(pos: int) -> Iterator[np.ndarray]:
        if pos == len(order):
            yield table.copy()
            return
        i = order[pos]
        allowed = np.ones(m, dtype=bool)
        for j in below[pos]:
            allowed &= cod_leq[table[j]]
        for v in np.flatnonzero(allowed):
            table[i] = v
            yield from extend(pos + 1)

    yield from extend(0)


def subsets(elements: Sequence[Hashable]) -> Iterator[tuple[Hashable, ...]]:
    """All subsets, smallest first, lexicographic within a size."""
    for r in range(len(elements) + 1):
        yield from combinations(elements, r)
