"""Kuratowski interior operators on powersets and the topologies they induce.

Subsets of an ``n``-point ground set are handled as bitmasks in the hot
loops; public results use frozensets and the powerset lattices of
:func:`ikit.catalog.powerset`.
"""

from __future__ import annotations

import string
from collections.abc import Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass

from .catalog import powerset, powerset_points
from .errors import CapExceeded, NotATopology, NotKuratowski, NotPowersetCarrier, Verdict
from .interior import InteriorOp

DEFAULT_TOPOLOGY_CAP = 4


def default_points(n: int) -> tuple[str, ...]:
    return tuple(string.ascii_lowercase[:n])


def _points_of(i: InteriorOp) -> tuple:
    points = powerset_points(i.carrier)
    if points is None:
        raise NotPowersetCarrier(i.carrier)
    return points


def check_kuratowski(i: InteriorOp) -> Verdict:
    """Axioms in order: ``i(X) = X``, ``i(A) ⊆ A``, ``i(i(A)) = i(A)``,
    ``i(A ∩ B) = i(A) ∩ i(B)`` (binary intersections).
    """
    _points_of(i)
    L, t = i.carrier, i.table
    els = L.elements
    if t[L.top_index] != L.top_index:
        return Verdict.failed("top", L.top)
    for a in range(len(L)):
        if t[a] & ~a:
            return Verdict.failed("contraction", els[a])
    for a in range(len(L)):
        if t[t[a]] != t[a]:
            return Verdict.failed("idempotence", els[a])
    for a in range(len(L)):
        for b in range(a + 1, len(L)):
            if t[a & b] != t[a] & t[b]:
                return Verdict.failed("intersection", els[a], els[b])
    return Verdict.passed()


@dataclass(frozen=True)
class Topology:
    """A family of open subsets of a finite ground set."""

    ground: tuple
    opens: frozenset

    def __init__(self, ground: Sequence[Hashable], opens: Iterable[Iterable[Hashable]]):
        object.__setattr__(self, "ground", tuple(ground))
        object.__setattr__(self, "opens", frozenset(frozenset(u) for u in opens))

    def masks(self) -> list[int]:
        pos = {p: k for k, p in enumerate(self.ground)}
        return sorted(sum(1 << pos[p] for p in u) for u in self.opens)

    def sorted_opens(self) -> list[frozenset]:
        """Opens in bitmask order."""
        return [_unmask(m, self.ground) for m in self.masks()]


def _unmask(m: int, points: Sequence[Hashable]) -> frozenset:
    return frozenset(p for k, p in enumerate(points) if m >> k & 1)


def _mask_family_is_topology(fam: set[int], full: int) -> tuple | None:
    """``None`` if ``fam`` is a topology on ``full``, else ``(law, masks...)``."""
    if 0 not in fam:
        return ("empty",)
    if full not in fam:
        return ("whole",)
    ordered = sorted(fam)
    for k, a in enumerate(ordered):
        for b in ordered[k + 1:]:
            if a | b not in fam:
                return ("union", a, b)
            if a & b not in fam:
                return ("intersection", a, b)
    return None


def check_topology(t: Topology) -> Verdict:
    """Contains ∅ and X, closed under unions and binary intersections.

    On a finite ground set closure under binary unions gives closure under
    every union of a subfamily (the empty union is ∅).
    """
    pos = {p: k for k, p in enumerate(t.ground)}
    if any(p not in pos for u in t.opens for p in u):
        return Verdict.failed("ground", *sorted({p for u in t.opens for p in u} - set(pos), key=repr))
    problem = _mask_family_is_topology(set(t.masks()), (1 << len(t.ground)) - 1)
    if problem is None:
        return Verdict.passed()
    law, *masks = problem
    return Verdict.failed(law, *(_unmask(m, t.ground) for m in masks))


def topology_from_interior(i: InteriorOp) -> Topology:
    """The fixed points of a Kuratowski operator."""
    points = _points_of(i)
    verdict = check_kuratowski(i)
    if not verdict:
        raise NotKuratowski(verdict.law, *verdict.witness)
    fixed = [k for k in range(len(i.carrier)) if i.table[k] == k]
    return Topology(points, [_unmask(k, points) for k in fixed])


def interior_from_topology(t: Topology) -> InteriorOp:
    """``i(A)`` is the union of all opens inside ``A``."""
    verdict = check_topology(t)
    if not verdict:
        raise NotATopology(verdict.law, *verdict.witness)
    opens = t.masks()
    table = []
    for a in range(1 << len(t.ground)):
        inside = 0
        for u in opens:
            if u & ~a == 0:
                inside |= u
        table.append(inside)
    return InteriorOp(powerset(t.ground), table)


def _check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_TOPOLOGY_CAP if cap is None else cap
    if n > cap:
        raise CapExceeded("ground size", n, cap)


def enumerate_topologies(n: int, cap: int | None = None,
                         points: Sequence[Hashable] | None = None) -> list[Topology]:
    """Every topology on an ``n``-point set, by brute force over families.

    Each family of subsets other than ∅ and X is tried; results come out in
    the order of the chosen families' bitmask (canonical, labelled counts).
    """
    _check_cap(n, cap)
    points = default_points(n) if points is None else tuple(points)
    full = (1 << n) - 1
    middle = list(range(1, full))
    found = []
    for choice in range(1 << len(middle)):
        fam = {0, full}
        fam.update(m for k, m in enumerate(middle) if choice >> k & 1)
        if _mask_family_is_topology(fam, full) is None:
            found.append(Topology(points, [_unmask(m, points) for m in fam]))
    return found


def enumerate_kuratowski_ops(n: int, cap: int | None = None,
                             points: Sequence[Hashable] | None = None) -> Iterator[InteriorOp]:
    """Every Kuratowski operator on the powerset of ``n`` points.

    Backtracks through subsets in bitmask order. ``i(A) ⊆ A`` means every
    value, and every intersection with an earlier subset, has already been
    assigned, so all four axioms are checked as soon as ``i(A)`` is chosen.
    """
    _check_cap(n, cap)
    points = default_points(n) if points is None else tuple(points)
    lat = powerset(points)
    full = (1 << n) - 1
    table = [0] * (full + 1)

    def submasks(a: int) -> Iterator[int]:
        s = a
        while True:
            yield s
            if s == 0:
                return
            s = (s - 1) & a

    def extend(a: int) -> Iterator[InteriorOp]:
        if a > full:
            yield InteriorOp(lat, list(table))
            return
        candidates = [full] if a == full else sorted(submasks(a))
        for v in candidates:
            if v != a and table[v] != v:
                continue
            if any(table[a & c] != v & table[c] for c in range(a)):
                continue
            table[a] = v
            yield from extend(a + 1)

    yield from extend(0)
