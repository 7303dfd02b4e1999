"""Adjoint pairs (Galois connections, monotone convention) between finite lattices.

``phi: P -> Q`` is left adjoint to ``psi: Q -> P`` when
``phi(m) <= n  <=>  m <= psi(n)`` for every ``m`` in P and ``n`` in Q.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainMismatch,
    JoinNotPreserved,
    MeetNotPreserved,
    PreconditionViolated,
    Verdict,
)
from .order import MonotoneMap, check_monotone, first_mask, fold_subsets, mask_members


@dataclass(frozen=True)
class AdjointPair:
    """``phi`` (left, P -> Q) and ``psi`` (right, Q -> P)."""

    phi: MonotoneMap
    psi: MonotoneMap

    @classmethod
    def verified(cls, phi: MonotoneMap, psi: MonotoneMap) -> "AdjointPair":
        verdict = is_adjoint_pair(phi, psi)
        if not verdict:
            raise PreconditionViolated(*verdict.witness, message="not an adjoint pair")
        return cls(phi, psi)


def _check_shapes(phi: MonotoneMap, psi: MonotoneMap) -> None:
    if not (phi.dom.same_as(psi.cod) and phi.cod.same_as(psi.dom)):
        raise DomainMismatch(phi, psi)


def is_adjoint_pair(phi: MonotoneMap, psi: MonotoneMap) -> Verdict:
    """Check the biconditional on all pairs; witness is the first failing ``(m, n)``."""
    _check_shapes(phi, psi)
    P, Q = phi.dom, phi.cod
    left = Q.leq_matrix[phi.table, :]
    right = P.leq_matrix[:, psi.table]
    bad = np.argwhere(left != right)
    if bad.size:
        i, j = bad[0]
        return Verdict.failed("adjunction", P.elements[i], Q.elements[j])
    return Verdict.passed()


def _subset_failures(m: MonotoneMap, *, meets: bool, cap: int | None) -> int | None:
    src, dst = m.dom, m.cod
    if meets:
        folded_src = src.subset_meets(cap)
        folded_img = fold_subsets(dst.meet_table, dst.top_index, m.table)
    else:
        folded_src = src.subset_joins(cap)
        folded_img = fold_subsets(dst.join_table, dst.bottom_index, m.table)
    bad = np.flatnonzero(m.table[folded_src] != folded_img)
    if not bad.size:
        return None
    if bad[0] == 0:
        return 0
    return first_mask(int(b) for b in bad)


def _subset_witness(m: MonotoneMap, mask: int, *, meets: bool) -> tuple:
    src, dst = m.dom, m.cod
    members = mask_members(mask)
    if meets:
        bound = src.meet_idx(members)
        image_bound = dst.meet_idx(m.table[i] for i in members)
    else:
        bound = src.join_idx(members)
        image_bound = dst.join_idx(m.table[i] for i in members)
    subset = tuple(src.elements[i] for i in members)
    return subset, dst.elements[m.table[bound]], dst.elements[image_bound]


def preserves_meets(m: MonotoneMap, cap: int | None = None) -> Verdict:
    """Whether ``m`` preserves the meet of every subset (the empty one included).

    Witness: ``(subset, m(meet subset), meet of images)`` for the smallest
    failing subset.
    """
    mask = _subset_failures(m, meets=True, cap=cap)
    if mask is None:
        return Verdict.passed()
    return Verdict.failed("meet_preservation", *_subset_witness(m, mask, meets=True))


def preserves_joins(m: MonotoneMap, cap: int | None = None) -> Verdict:
    mask = _subset_failures(m, meets=False, cap=cap)
    if mask is None:
        return Verdict.passed()
    return Verdict.failed("join_preservation", *_subset_witness(m, mask, meets=False))


def synthesize_left_adjoint(psi: MonotoneMap, cap: int | None = None) -> MonotoneMap:
    """Left adjoint of ``psi: Q -> P`` via ``phi(p) = meet {q | p <= psi(q)}``.

    Raises :class:`MeetNotPreserved` exactly when no left adjoint exists.
    """
    verdict = preserves_meets(psi, cap)
    if not verdict:
        raise MeetNotPreserved(*verdict.witness)
    Q, P = psi.dom, psi.cod
    above = P.leq_matrix[:, psi.table]
    table = [Q.meet_idx(np.flatnonzero(above[p])) for p in range(len(P))]
    return MonotoneMap(P, Q, table)


def synthesize_right_adjoint(phi: MonotoneMap, cap: int | None = None) -> MonotoneMap:
    """Right adjoint of ``phi: P -> Q`` via ``psi(n) = join {m | phi(m) <= n}``."""
    verdict = preserves_joins(phi, cap)
    if not verdict:
        raise JoinNotPreserved(*verdict.witness)
    P, Q = phi.dom, phi.cod
    below = Q.leq_matrix[phi.table, :]
    table = [P.join_idx(np.flatnonzero(below[:, n])) for n in range(len(Q))]
    return MonotoneMap(Q, P, table)


def check_preservation(pair: AdjointPair, cap: int | None = None) -> Verdict:
    """Consequences of adjointness for a verified pair.

    Checks, in order: ``phi`` preserves all joins, ``psi`` preserves all
    meets, ``phi psi phi = phi`` and ``psi phi psi = psi``.
    """
    phi, psi = pair.phi, pair.psi
    if not is_adjoint_pair(phi, psi):
        raise PreconditionViolated(message="check_preservation needs an adjoint pair")
    for check in (preserves_joins(phi, cap), preserves_meets(psi, cap)):
        if not check:
            return check
    tri = phi.table[psi.table[phi.table]]
    bad = np.flatnonzero(tri != phi.table)
    if bad.size:
        return Verdict.failed("phi_psi_phi", phi.dom.elements[bad[0]])
    tri = psi.table[phi.table[psi.table]]
    bad = np.flatnonzero(tri != psi.table)
    if bad.size:
        return Verdict.failed("psi_phi_psi", psi.dom.elements[bad[0]])
    return Verdict.passed()


def characterizations(phi: MonotoneMap, psi: MonotoneMap) -> dict[str, bool]:
    """The four equivalent descriptions of ``phi ⊣ psi``, evaluated separately.

    ``(i)`` the biconditional; ``(ii)`` phi monotone and given by the meet
    formula; ``(iii)`` psi monotone and given by the join formula; ``(iv)``
    both monotone with unit ``m <= psi phi m`` and counit ``phi psi n <= n``.
    """
    _check_shapes(phi, psi)
    P, Q = phi.dom, phi.cod
    above = P.leq_matrix[:, psi.table]
    below = Q.leq_matrix[phi.table, :]
    meet_formula = np.array([Q.meet_idx(np.flatnonzero(above[p])) for p in range(len(P))])
    join_formula = np.array([P.join_idx(np.flatnonzero(below[:, n])) for n in range(len(Q))])
    phi_mono, psi_mono = bool(check_monotone(phi)), bool(check_monotone(psi))
    unit = P.leq_matrix[np.arange(len(P)), psi.table[phi.table]].all()
    counit = Q.leq_matrix[phi.table[psi.table], np.arange(len(Q))].all()
    return {
        "i": bool(is_adjoint_pair(phi, psi)),
        "ii": phi_mono and bool(np.array_equal(meet_formula, phi.table)),
        "iii": psi_mono and bool(np.array_equal(join_formula, psi.table)),
        "iv": phi_mono and psi_mono and bool(unit) and bool(counit),
    }
