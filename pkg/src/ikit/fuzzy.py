"""GL-monoids, L-fuzzy interior operators and the fuzzy topology they induce.

Everything is finite: a fuzzy set on ``X`` is a tuple of carrier elements,
one per point, and ``L^X`` is enumerated in lexicographic order. All law
checks run as vectorized comparisons over the full index space.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterator, Sequence
from fractions import Fraction
from itertools import product

import numpy as np

from .catalog import chain
from .errors import CapExceeded, NotAFuzzyInterior, Verdict
from .order import CompleteLattice, first_mask, fold_subsets, mask_members

#: Default bound on ``|L|^|X|``.
DEFAULT_FUZZY_CAP = 81
I7_READINGS = ("constant", "fixed")


class GLMonoid:
    """A complete lattice with a tensor table; the unit is the top element."""

    def __init__(self, carrier: CompleteLattice, tensor):
        self.carrier = carrier
        self.tensor = np.asarray(tensor, dtype=np.intp)
        n = len(carrier)
        if self.tensor.shape != (n, n):
            raise ValueError("tensor table must be |L| x |L|")
        self.tensor.setflags(write=False)

    @classmethod
    def from_function(cls, carrier: CompleteLattice,
                      op: Callable[[Hashable, Hashable], Hashable]) -> "GLMonoid":
        idx = carrier.index
        return cls(carrier, [[idx[op(a, b)] for b in carrier] for a in carrier])

    def __call__(self, a: Hashable, b: Hashable) -> Hashable:
        idx = self.carrier.index
        return self.carrier.elements[self.tensor[idx[a], idx[b]]]

    @property
    def top(self) -> int:
        return self.carrier.top_index

    @property
    def bottom(self) -> int:
        return self.carrier.bottom_index


def _fraction_chain(n: int) -> CompleteLattice:
    return chain(n, [str(Fraction(k, n - 1)) if n > 1 else "1" for k in range(n)])


def min_monoid(n: int = 3) -> GLMonoid:
    """The ``n``-element chain with ``⊗ = min`` (a Heyting algebra)."""
    L = _fraction_chain(n)
    return GLMonoid(L, L.meet_table)


def lukasiewicz_monoid(n: int = 3) -> GLMonoid:
    """The ``n``-element chain ``{0, 1/(n-1), ..., 1}`` with ``max(0, a + b - 1)``."""
    L = _fraction_chain(n)
    k = np.arange(n)
    return GLMonoid(L, np.maximum(0, k[:, None] + k[None, :] - (n - 1)))


def check_gl_monoid(m: GLMonoid, cap: int | None = None) -> Verdict:
    """Associativity, commutativity, unit, isotony, distributivity over every
    join (empty join included), divisibility. First failure wins.
    """
    L, t = m.carrier, m.tensor
    n = len(L)
    els = L.elements
    leq = L.leq_matrix
    r = np.arange(n)
    assoc = t[t[:, :, None], r[None, None, :]] != t[r[:, None, None], t[None, :, :]]
    bad = np.argwhere(assoc)
    if bad.size:
        return Verdict.failed("associativity", *(els[i] for i in bad[0]))
    bad = np.argwhere(t != t.T)
    if bad.size:
        return Verdict.failed("commutativity", *(els[i] for i in bad[0]))
    bad = np.flatnonzero(t[m.top] != r)
    if bad.size:
        return Verdict.failed("unit", els[bad[0]], els[t[m.top, bad[0]]])
    # a <= b  =>  a ⊗ c <= b ⊗ c
    iso = leq[:, :, None] & ~leq[t[:, None, :], t[None, :, :]]
    bad = np.argwhere(iso)
    if bad.size:
        return Verdict.failed("isotone", *(els[i] for i in bad[0]))
    joins = L.subset_joins(cap)
    for a in range(n):
        lhs = t[a, joins]
        rhs = fold_subsets(L.join_table, L.bottom_index, t[a])
        diff = np.flatnonzero(lhs != rhs)
        if diff.size:
            mask = first_mask(int(d) for d in diff)
            return Verdict.failed("join_distributivity", els[a],
                                  tuple(els[i] for i in mask_members(mask)))
    for a in range(n):
        for b in range(n):
            if leq[a, b] and not (t[b] == a).any():
                return Verdict.failed("divisibility", els[a], els[b])
    return Verdict.passed()


class FuzzySpace:
    """``L^X`` for a fixed monoid and finite ground set, with pointwise tables."""

    def __init__(self, monoid: GLMonoid, ground: Sequence[Hashable], cap: int | None = None):
        self.monoid = monoid
        self.ground = tuple(ground)
        L = monoid.carrier
        size = len(L) ** len(self.ground)
        cap = DEFAULT_FUZZY_CAP if cap is None else cap
        if size > cap:
            raise CapExceeded("|L|^|X|", size, cap)
        self.codes = np.array(list(product(range(len(L)), repeat=len(self.ground))),
                              dtype=np.intp).reshape(size, len(self.ground))
        radix = len(L) ** np.arange(len(self.ground))[::-1]
        self._radix = radix
        self.leq = L.leq_matrix[self.codes[:, None, :], self.codes[None, :, :]].all(axis=2)
        self.tensor = self._encode(monoid.tensor[self.codes[:, None, :], self.codes[None, :, :]])
        self.join = self._encode(L.join_table[self.codes[:, None, :], self.codes[None, :, :]])
        self.top = int(self._encode(np.full(len(self.ground), L.top_index)))
        self.bottom = int(self._encode(np.full(len(self.ground), L.bottom_index)))

    def _encode(self, codes: np.ndarray) -> np.ndarray:
        return (codes * self._radix).sum(axis=-1)

    def __len__(self) -> int:
        return len(self.codes)

    def fuzzy_set(self, k: int) -> tuple:
        els = self.monoid.carrier.elements
        return tuple(els[c] for c in self.codes[k])

    def index_of(self, f: Sequence[Hashable]) -> int:
        idx = self.monoid.carrier.index
        return int(self._encode(np.array([idx[v] for v in f])))

    def fuzzy_sets(self) -> list[tuple]:
        return [self.fuzzy_set(k) for k in range(len(self))]


class FuzzyInterior:
    """A map ``L^X × L -> L^X`` stored as ``table[f, alpha]`` of fuzzy-set indices."""

    def __init__(self, space: FuzzySpace, table):
        self.space = space
        self.table = np.asarray(table, dtype=np.intp)
        if self.table.shape != (len(space), len(space.monoid.carrier)):
            raise ValueError("table must be |L^X| x |L|")
        self.table.setflags(write=False)

    @classmethod
    def from_function(cls, space: FuzzySpace,
                      op: Callable[[tuple, Hashable], Sequence[Hashable]]) -> "FuzzyInterior":
        L = space.monoid.carrier
        return cls(space, [[space.index_of(op(space.fuzzy_set(f), a)) for a in L]
                           for f in range(len(space))])

    def __call__(self, f: Sequence[Hashable], alpha: Hashable) -> tuple:
        s = self.space
        return s.fuzzy_set(self.table[s.index_of(f), s.monoid.carrier.index[alpha]])


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if not hits.size else tuple(int(v) for v in hits[0])


def check_fuzzy_interior(I: FuzzyInterior, i7: str = "constant",
                         cap: int | None = None) -> Verdict:
    """Axioms (I1)-(I7), each over every tuple it quantifies over.

    ``(I5)`` is read as ``I(f, a) <= I(I(f, a), a)``. ``(I7)`` takes a
    reading: ``"constant"`` means if ``I(f, a)`` takes one value ``g`` for
    every ``a`` in a non-empty ``K`` then ``I(f, join K) = g``;
    ``"fixed"`` means if ``I(f, a) = f`` for every ``a`` in ``K`` then
    ``I(f, join K) = f``.
    """
    if i7 not in I7_READINGS:
        raise ValueError(f"unknown (I7) reading {i7!r}")
    S, T = I.space, I.table
    L = S.monoid.carrier
    nL = len(L)
    name = S.fuzzy_set
    el = L.elements
    alphas = np.arange(nL)
    sets = np.arange(len(S))

    bad = np.flatnonzero(T[S.top] != S.top)
    if bad.size:
        return Verdict.failed("I1", el[bad[0]])
    # g <= f and a <= b  =>  I(g, b) <= I(f, a)
    premise = S.leq[:, :, None, None] & L.leq_matrix[None, None, :, :]
    concl = S.leq[T[:, None, None, :], T[None, :, :, None]]
    hit = _first(premise & ~concl)
    if hit:
        g, f, a, b = hit
        return Verdict.failed("I2", name(g), name(f), el[a], el[b])
    lhs = S.tensor[T[:, None, :, None], T[None, :, None, :]]
    rhs = T[S.tensor[:, :, None, None], S.monoid.tensor[None, None, :, :]]
    hit = _first(~S.leq[lhs, rhs])
    if hit:
        f, g, a, b = hit
        return Verdict.failed("I3", name(f), name(g), el[a], el[b])
    hit = _first(~S.leq[T, sets[:, None]])
    if hit:
        f, a = hit
        return Verdict.failed("I4", name(f), el[a])
    hit = _first(~S.leq[T, T[T, alphas[None, :]]])
    if hit:
        f, a = hit
        return Verdict.failed("I5", name(f), el[a])
    bad = np.flatnonzero(T[:, S.monoid.bottom] != sets)
    if bad.size:
        return Verdict.failed("I6", name(bad[0]))
    L.check_subset_cap(cap)
    joins = L.subset_joins(cap)
    for mask in sorted(range(1, 1 << nL), key=lambda m: (bin(m).count("1"), mask_members(m))):
        K = list(mask_members(mask))
        vals = T[:, K]
        if i7 == "constant":
            applies = (vals == vals[:, :1]).all(axis=1)
            target = vals[:, 0]
        else:
            applies = (vals == sets[:, None]).all(axis=1)
            target = sets
        bad = np.flatnonzero(applies & (T[:, joins[mask]] != target))
        if bad.size:
            return Verdict.failed("I7", name(bad[0]), tuple(el[k] for k in K))
    return Verdict.passed()


def enumerate_fuzzy_interiors(space: FuzzySpace, i7: str = "constant") -> Iterator[FuzzyInterior]:
    """Every L-fuzzy interior operator on ``space``.

    Backtracking fixes ``I(f, ⊥) = f`` and ``I(1_X, a) = 1_X`` and keeps
    each value below ``f`` and consistent with (I2) against everything
    already assigned; completed tables are then checked in full.
    """
    L = space.monoid.carrier
    nL, N = len(L), len(space)
    Lleq, Sleq = L.leq_matrix, space.leq
    table = np.full((N, nL), -1, dtype=np.intp)
    table[:, space.monoid.bottom] = np.arange(N)
    table[space.top, :] = space.top
    todo = [(f, a) for a in reversed(L.linear_extension) for f in range(N)
            if table[f, a] < 0]

    def extend(pos: int) -> Iterator[FuzzyInterior]:
        if pos == len(todo):
            op = FuzzyInterior(space, table.copy())
            if check_fuzzy_interior(op, i7):
                yield op
            return
        f, a = todo[pos]
        allowed = Sleq[:, f].copy()
        assigned = table >= 0
        # lower bounds: I(g, b) with g <= f, a <= b
        lo = assigned & Sleq[:, f][:, None] & Lleq[a][None, :]
        for v in np.unique(table[lo]):
            allowed &= Sleq[v]
        # upper bounds: I(h, c) with f <= h, c <= a
        hi = assigned & Sleq[f][:, None] & Lleq[:, a][None, :]
        for v in np.unique(table[hi]):
            allowed &= Sleq[:, v]
        for v in np.flatnonzero(allowed):
            table[f, a] = v
            yield from extend(pos + 1)
        table[f, a] = -1

    yield from extend(0)


class FuzzyTopology:
    """A grading ``L^X -> L`` stored as one carrier index per fuzzy set."""

    def __init__(self, space: FuzzySpace, grade):
        self.space = space
        self.grade = np.asarray(grade, dtype=np.intp)
        if self.grade.shape != (len(space),):
            raise ValueError("grade must cover every fuzzy set")

    def __call__(self, f: Sequence[Hashable]) -> Hashable:
        return self.space.monoid.carrier.elements[self.grade[self.space.index_of(f)]]


def fuzzy_topology_from_interior(I: FuzzyInterior, i7: str = "constant") -> FuzzyTopology:
    """``T(f) = join {a | f <= I(f, a)}``."""
    verdict = check_fuzzy_interior(I, i7)
    if not verdict:
        raise NotAFuzzyInterior(verdict.law, *verdict.witness)
    S = I.space
    L = S.monoid.carrier
    ok = S.leq[np.arange(len(S))[:, None], I.table]
    return FuzzyTopology(S, [L.join_idx(np.flatnonzero(row)) for row in ok])


def check_fuzzy_topology(t: FuzzyTopology, cap: int | None = None) -> Verdict:
    """``T(1_X) = ⊤``; ``T(f ⊗ g) >= T(f) ⊗ T(g)``; ``T(join F) >= meet T(F)``.

    The last law is checked for the empty family and all pairs, which by
    induction covers every finite family; when ``L^X`` is within the subset
    cap every subfamily is also checked directly.
    """
    S, G = t.space, t.grade
    L = S.monoid.carrier
    el = L.elements
    if G[S.top] != L.top_index:
        return Verdict.failed("top", el[G[S.top]])
    lhs = G[S.tensor]
    rhs = S.monoid.tensor[G[:, None], G[None, :]]
    hit = _first(~L.leq_matrix[rhs, lhs])
    if hit:
        f, g = hit
        return Verdict.failed("tensor", S.fuzzy_set(f), S.fuzzy_set(g))
    if G[S.bottom] != L.top_index:
        return Verdict.failed("union", ())
    hit = _first(~L.leq_matrix[L.meet_table[G[:, None], G[None, :]], G[S.join]])
    if hit:
        f, g = hit
        return Verdict.failed("union", (S.fuzzy_set(f), S.fuzzy_set(g)))
    limit = 12 if cap is None else cap
    if len(S) <= limit:
        unions = fold_subsets(S.join, S.bottom, np.arange(len(S)))
        meets = fold_subsets(L.meet_table, L.top_index, G)
        bad = np.flatnonzero(~L.leq_matrix[meets, G[unions]])
        if bad.size:
            mask = first_mask(int(b) for b in bad)
            return Verdict.failed("union", tuple(S.fuzzy_set(k) for k in mask_members(mask)))
    return Verdict.passed()
