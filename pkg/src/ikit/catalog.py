"""Small named lattices and posets used throughout the tests and demos."""

from __future__ import annotations

from collections.abc import Hashable, Sequence
from functools import lru_cache

from .order import CompleteLattice, FinPoset, lattice, validate_poset


def chain(n: int, names: Sequence[Hashable] | None = None) -> CompleteLattice:
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    names = list(range(n)) if names is None else list(names)
    rank = {x: i for i, x in enumerate(names)}
    return lattice(names, lambda x, y: rank[x] <= rank[y])


def powerset(points: Sequence[Hashable]) -> CompleteLattice:
    """Subsets of ``points`` as frozensets, listed in bitmask order.

    Element ``k`` is the subset whose bit ``i`` is set iff ``points[i]`` is a
    member, so positions double as bitmasks.
    """
    return _powerset(tuple(points))


@lru_cache(maxsize=256)
def _powerset(points: tuple) -> CompleteLattice:
    elems = [frozenset(p for i, p in enumerate(points) if k >> i & 1)
             for k in range(1 << len(points))]
    return lattice(elems, lambda a, b: a <= b)


def powerset_points(lat: CompleteLattice) -> tuple | None:
    """The point list of a lattice built by :func:`powerset`, else ``None``."""
    n = len(lat).bit_length() - 1
    if len(lat) != 1 << n:
        return None
    singles = [lat.elements[1 << i] for i in range(n)]
    if not all(isinstance(s, frozenset) and len(s) == 1 for s in singles):
        return None
    points = tuple(next(iter(s)) for s in singles)
    for k, e in enumerate(lat.elements):
        if e != frozenset(p for i, p in enumerate(points) if k >> i & 1):
            return None
    return points


def diamond() -> CompleteLattice:
    """M3: bottom, three pairwise incomparable atoms, top."""
    elems = ["0", "a", "b", "c", "1"]
    return lattice(elems, lambda x, y: x == y or x == "0" or y == "1")


def pentagon() -> CompleteLattice:
    """N5: 0 < a < c < 1 and 0 < b < 1 with b incomparable to a and c."""
    up = {"0": {"0", "a", "b", "c", "1"}, "a": {"a", "c", "1"}, "b": {"b", "1"},
          "c": {"c", "1"}, "1": {"1"}}
    return lattice(list(up), lambda x, y: y in up[x])


def bowtie() -> FinPoset:
    """Two maximal elements each above both of two minimal ones; not a lattice."""
    elems = ["m1", "m2", "b1", "b2"]
    return validate_poset(elems, lambda x, y: x == y or (x[0] == "b" and y[0] == "m"))


def standard_catalog() -> dict[str, CompleteLattice]:
    """Chains of 2-4 elements, powersets of 1-3 points, M3 and N5."""
    cat = {f"chain{n}": chain(n) for n in (2, 3, 4)}
    for n, pts in ((1, "a"), (2, "ab"), (3, "abc")):
        cat[f"powerset{n}"] = powerset(list(pts))
    cat["M3"] = diamond()
    cat["N5"] = pentagon()
    return cat


def label(x: Hashable) -> str:
    """Human-readable name; subsets print as ``{a,b}``."""
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(label(p) for p in x)) + "}"
    if hasattr(x, "label"):
        return x.label()
    return str(x)
