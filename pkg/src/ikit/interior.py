"""Interior operators on finite complete lattices.

An interior operator is contractive, monotone and fixes the top element.
Idempotence is deliberately not required here; see :mod:`ikit.kuratowski`
for the idempotent, meet-preserving special case on powersets.

Morphisms act on lattices through a :class:`MorphismAction`, the triple of
existential image, inverse image and universal image. Continuity, initial
operators and open elements only ever use those three maps, so the same
code runs over subsets, sieves or anything else that supplies them.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import CarrierMismatch, PreconditionViolated, Verdict
from .order import CompleteLattice, MonotoneMap, compose, lattice


class InteriorOp:
    """A self-map of ``carrier`` given as an index table."""

    def __init__(self, carrier: CompleteLattice, table):
        self.carrier = carrier
        self.table = np.asarray(table, dtype=np.intp)
        if self.table.shape != (len(carrier),):
            raise ValueError("interior table must cover every element")
        self.table.setflags(write=False)

    @classmethod
    def from_mapping(cls, carrier: CompleteLattice, mapping: Mapping) -> "InteriorOp":
        get = mapping if callable(mapping) else mapping.__getitem__
        return cls(carrier, [carrier.index[get(x)] for x in carrier.elements])

    def __call__(self, x: Hashable) -> Hashable:
        return self.carrier.elements[self.table[self.carrier.index[x]]]

    def as_dict(self) -> dict:
        els = self.carrier.elements
        return {x: els[t] for x, t in zip(els, self.table)}

    def as_map(self) -> MonotoneMap:
        return MonotoneMap(self.carrier, self.carrier, self.table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InteriorOp):
            return NotImplemented
        return self.carrier.same_as(other.carrier) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"InteriorOp({self.as_dict()!r})"


def check_interior(i: InteriorOp) -> Verdict:
    """Contraction, then monotonicity, then top preservation."""
    L, t = i.carrier, i.table
    n = len(L)
    bad = np.flatnonzero(~L.leq_matrix[t, np.arange(n)])
    if bad.size:
        return Verdict.failed("contraction", L.elements[bad[0]])
    pairs = np.argwhere(L.leq_matrix & ~L.leq_matrix[np.ix_(t, t)])
    if pairs.size:
        a, b = pairs[0]
        return Verdict.failed("monotonicity", L.elements[a], L.elements[b])
    if t[L.top_index] != L.top_index:
        return Verdict.failed("upper_bound", L.top)
    return Verdict.passed()


def discrete_op(L: CompleteLattice) -> InteriorOp:
    return InteriorOp(L, np.arange(len(L)))


def trivial_op(L: CompleteLattice) -> InteriorOp:
    table = np.full(len(L), L.bottom_index)
    table[L.top_index] = L.top_index
    return InteriorOp(L, table)


def _shared_carrier(ops: Sequence[InteriorOp]) -> CompleteLattice:
    if not ops:
        raise ValueError("need a non-empty family of operators")
    L = ops[0].carrier
    for op in ops[1:]:
        if not op.carrier.same_as(L):
            raise CarrierMismatch(op)
    return L


def join_ops(family: Sequence[InteriorOp]) -> InteriorOp:
    """Pointwise join of a non-empty family."""
    L = _shared_carrier(family)
    table = reduce(lambda acc, op: L.join_table[acc, op.table], family[1:], family[0].table)
    return InteriorOp(L, table)


def meet_ops(family: Sequence[InteriorOp]) -> InteriorOp:
    L = _shared_carrier(family)
    table = reduce(lambda acc, op: L.meet_table[acc, op.table], family[1:], family[0].table)
    return InteriorOp(L, table)


def le_ops(i: InteriorOp, j: InteriorOp) -> bool:
    """Pointwise order: ``i(m) <= j(m)`` for every ``m``."""
    L = _shared_carrier([i, j])
    return bool(L.leq_matrix[i.table, j.table].all())


def enumerate_interior_ops(L: CompleteLattice) -> Iterator[InteriorOp]:
    """All interior operators on ``L`` by backtracking along a linear extension.

    Each value is restricted to elements below its argument and above the
    values already chosen for smaller arguments, so only valid tables are
    ever completed.
    """
    order = L.linear_extension
    leq = L.leq_matrix
    below = [[j for j in order[:pos] if leq[j, i]] for pos, i in enumerate(order)]
    table = np.zeros(len(L), dtype=np.intp)

    def extend(pos: int) -> Iterator[InteriorOp]:
        if pos == len(order):
            yield InteriorOp(L, table.copy())
            return
        m = order[pos]
        if m == L.top_index:
            allowed = np.zeros(len(L), dtype=bool)
            allowed[m] = True
        else:
            allowed = leq[:, m].copy()
        for j in below[pos]:
            allowed &= leq[table[j]]
        for v in np.flatnonzero(allowed):
            table[m] = v
            yield from extend(pos + 1)

    yield from extend(0)


def operator_lattice(ops: Sequence[InteriorOp]) -> CompleteLattice:
    """The given operators ordered pointwise, validated as a complete lattice."""
    return lattice(list(ops), le_ops)


@dataclass(frozen=True)
class MorphismAction:
    """How a morphism ``f: X -> Y`` acts on the lattices of X and Y.

    ``existential`` and ``universal`` go X -> Y, ``inverse`` goes Y -> X,
    with ``existential ⊣ inverse ⊣ universal``.
    """

    existential: MonotoneMap
    inverse: MonotoneMap
    universal: MonotoneMap

    @classmethod
    def from_triple(cls, triple) -> "MorphismAction":
        return cls(triple.existential, triple.inverse, triple.universal)

    @classmethod
    def identity(cls, L: CompleteLattice) -> "MorphismAction":
        ident = MonotoneMap.identity(L)
        return cls(ident, ident, ident)

    @property
    def source(self) -> CompleteLattice:
        return self.inverse.cod

    @property
    def target(self) -> CompleteLattice:
        return self.inverse.dom


def compose_actions(outer: MorphismAction, inner: MorphismAction) -> MorphismAction:
    """Action of ``f ∘ g`` from the actions of ``f`` (outer) and ``g`` (inner).

    Inverse images compose contravariantly: ``(f ∘ g)⁻¹ = g⁻¹ ∘ f⁻¹``.
    """
    return MorphismAction(
        compose(outer.existential, inner.existential),
        compose(inner.inverse, outer.inverse),
        compose(outer.universal, inner.universal),
    )


def _require(cond: bool, *witness) -> None:
    if not cond:
        raise CarrierMismatch(*witness)


def is_continuous(action: MorphismAction, iX: InteriorOp, iY: InteriorOp) -> Verdict:
    """``f⁻¹(iY(m)) <= iX(f⁻¹(m))`` for all ``m``; witness is the first failing ``m``."""
    inv = action.inverse
    _require(inv.dom.same_as(iY.carrier) and inv.cod.same_as(iX.carrier), "continuity")
    lhs = inv.table[iY.table]
    rhs = iX.table[inv.table]
    bad = np.flatnonzero(~iX.carrier.leq_matrix[lhs, rhs])
    if bad.size:
        return Verdict.failed("continuity", inv.dom.elements[bad[0]])
    return Verdict.passed()


def initial_interior(action: MorphismAction, iY: InteriorOp) -> InteriorOp:
    """The operator ``f⁻¹ ∘ iY ∘ f_*`` on the domain lattice.

    It is the least interior operator on the domain making ``f`` continuous.
    """
    _require(action.universal.cod.same_as(iY.carrier), "initial_interior")
    table = action.inverse.table[iY.table[action.universal.table]]
    return InteriorOp(action.universal.dom, table)


def check_initiality(action_zx: MorphismAction, action_xy: MorphismAction,
                     iZ: InteriorOp, iY: InteriorOp) -> Verdict:
    """For ``g: Z -> X`` and ``f: X -> Y`` with X carrying the initial operator:
    ``g`` continuous iff ``f ∘ g`` continuous.
    """
    _require(action_zx.target.same_as(action_xy.source), "composability")
    iX = initial_interior(action_xy, iY)
    via_x = is_continuous(action_zx, iZ, iX)
    direct = is_continuous(compose_actions(action_xy, action_zx), iZ, iY)
    details = {"g_continuous": bool(via_x), "fg_continuous": bool(direct)}
    if bool(via_x) != bool(direct):
        witness = (via_x if not via_x else direct).witness
        return Verdict.failed("initiality", *witness, **details)
    return Verdict.passed(**details)


def open_elements(i: InteriorOp) -> tuple:
    """Fixed points of ``i`` in canonical order."""
    fixed = np.flatnonzero(i.table == np.arange(len(i.carrier)))
    return tuple(i.carrier.elements[k] for k in fixed)


def check_open_stability(action: MorphismAction, iX: InteriorOp, iY: InteriorOp) -> Verdict:
    """Preimages of open elements are open, for a continuous action."""
    premise = is_continuous(action, iX, iY)
    if not premise:
        raise PreconditionViolated(*premise.witness, message="action is not continuous")
    inv = action.inverse
    opens_x = set(open_elements(iX))
    for n in open_elements(iY):
        if inv(n) not in opens_x:
            return Verdict.failed("open_stability", n, inv(n))
    return Verdict.passed()
