"""Brute-force reference implementations.

Nothing here calls into the library's algorithms: bounds come from the raw
order relation, adjoints from searching Eq-by-Eq, and axioms from plain
nested loops. Tests compare the library against these.
"""

from __future__ import annotations

from itertools import chain as _chain
from itertools import combinations, product


def all_subsets(items):
    items = list(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r)]


def glb(elements, leq, subset):
    """Greatest lower bound from the definition, or None."""
    lower = [x for x in elements if all(leq(x, s) for s in subset)]
    best = [x for x in lower if all(leq(y, x) for y in lower)]
    return best[0] if best else None


def lub(elements, leq, subset):
    upper = [x for x in elements if all(leq(s, x) for s in subset)]
    best = [x for x in upper if all(leq(x, y) for y in upper)]
    return best[0] if best else None


def is_complete_lattice(elements, leq):
    return all(glb(elements, leq, s) is not None and lub(elements, leq, s) is not None
               for s in all_subsets(elements))


def is_monotone(dom_els, dom_leq, cod_leq, f):
    return all(cod_leq(f[x], f[y]) for x in dom_els for y in dom_els if dom_leq(x, y))


def adjoint_by_search(P, Pleq, Q, Qleq, psi):
    """Left adjoint of ``psi: Q -> P`` by searching, per ``p``, for the ``q``
    with ``q <= n  <=>  p <= psi(n)`` for every ``n``. None if some ``p`` has
    no such ``q``."""
    phi = {}
    for p in P:
        hits = [q for q in Q if all(Qleq(q, n) == Pleq(p, psi[n]) for n in Q)]
        if not hits:
            return None
        phi[p] = hits[0]
    return phi


def right_adjoint_by_search(P, Pleq, Q, Qleq, phi):
    """Right adjoint of ``phi: P -> Q`` by the dual search."""
    psi = {}
    for n in Q:
        hits = [m for m in P if all(Pleq(p, m) == Qleq(phi[p], n) for p in P)]
        if not hits:
            return None
        psi[n] = hits[0]
    return psi


def adjoint_law_holds(P, Pleq, Q, Qleq, phi, psi):
    return all(Qleq(phi[m], n) == Pleq(m, psi[n]) for m in P for n in Q)


# sets ------------------------------------------------------------------------

def preimage(f, N):
    return frozenset(x for x in f if f[x] in N)


def image(f, M):
    return frozenset(f[x] for x in M)


def forall_image(f, cod, M):
    return frozenset(y for y in cod if all(x in M for x in f if f[x] == y))


def all_maps(dom, cod):
    dom, cod = list(dom), list(cod)
    return [dict(zip(dom, vals)) for vals in product(cod, repeat=len(dom))]


# interior operators -------------------------------------------------------------

def interior_tables(elements, leq, top):
    """Every table satisfying contraction, monotonicity and top, by filtering
    the full ``n ** n`` space of self-maps."""
    out = []
    for vals in product(elements, repeat=len(elements)):
        t = dict(zip(elements, vals))
        if t[top] != top:
            continue
        if not all(leq(t[m], m) for m in elements):
            continue
        if not all(leq(t[x], t[y]) for x in elements for y in elements if leq(x, y)):
            continue
        out.append(t)
    return out


def topologies(points):
    """Topologies by closing every candidate family under unions of
    subfamilies and finite intersections directly."""
    X = frozenset(points)
    middle = [s for s in all_subsets(points) if s and s != X]
    found = []
    for r in range(len(middle) + 1):
        for extra in combinations(middle, r):
            fam = {frozenset(), X, *extra}
            ok = all(frozenset(_chain.from_iterable(sub)) in fam for sub in all_subsets(fam))
            ok = ok and all(a & b in fam for a in fam for b in fam)
            if ok:
                found.append(frozenset(fam))
    return found


def kuratowski_tables(points):
    """Kuratowski operators by filtering all self-maps of the powerset."""
    subs = all_subsets(points)
    X = frozenset(points)
    out = []
    for vals in product(subs, repeat=len(subs)):
        t = dict(zip(subs, vals))
        if t[X] != X or any(not t[a] <= a for a in subs):
            continue
        if any(t[t[a]] != t[a] for a in subs):
            continue
        if any(t[a & b] != t[a] & t[b] for a in subs for b in subs):
            continue
        out.append(t)
    return out


# sieves ---------------------------------------------------------------------------

def sieves_by_filter(morphisms, dom, cod, comp, c):
    """Subsets of arrows into ``c`` closed under precomposition."""
    into = [f for f in morphisms if cod[f] == c]
    out = []
    for S in all_subsets(into):
        if all(comp[(f, g)] in S for f in S for g in morphisms if cod[g] == dom[f]):
            out.append(S)
    return out


def is_grothendieck(objects, morphisms, dom, cod, comp, J):
    """Maximality, stability and transitivity straight from the definitions;
    ``J`` maps each object to a set of frozensets of arrows."""
    def pull(h, S):
        return frozenset(g for g in morphisms if cod[g] == dom[h] and comp[(h, g)] in S)

    sieves = {c: sieves_by_filter(morphisms, dom, cod, comp, c) for c in objects}
    for c in objects:
        if frozenset(f for f in morphisms if cod[f] == c) not in J[c]:
            return False
    for h in morphisms:
        if any(pull(h, S) not in J[dom[h]] for S in J[cod[h]]):
            return False
    for c in objects:
        for S in J[c]:
            for R in sieves[c]:
                if all(pull(h, R) in J[dom[h]] for h in S) and R not in J[c]:
                    return False
    return True


# fuzzy ------------------------------------------------------------------------------

def fuzzy_axioms(L, leq, tensor, join, ground_size, I, i7="constant"):
    """Check (I1)-(I7) of a fuzzy interior ``I[(f, a)] -> g`` with loops.

    ``L`` is a list of carrier values, ``leq``/``tensor``/``join`` plain
    callables on them. Returns the name of the first failing axiom or None.
    """
    bot = [x for x in L if all(leq(x, y) for y in L)][0]
    topv = [x for x in L if all(leq(y, x) for y in L)][0]
    sets = list(product(L, repeat=ground_size))
    one = tuple([topv] * ground_size)

    def le(f, g):
        return all(leq(a, b) for a, b in zip(f, g))

    def ten(f, g):
        return tuple(tensor(a, b) for a, b in zip(f, g))

    if any(I[(one, a)] != one for a in L):
        return "I1"
    for f in sets:
        for g in sets:
            if not le(g, f):
                continue
            for a in L:
                for b in L:
                    if leq(a, b) and not le(I[(g, b)], I[(f, a)]):
                        return "I2"
    for f in sets:
        for g in sets:
            for a in L:
                for b in L:
                    if not le(ten(I[(f, a)], I[(g, b)]), I[(ten(f, g), tensor(a, b))]):
                        return "I3"
    if any(not le(I[(f, a)], f) for f in sets for a in L):
        return "I4"
    if any(not le(I[(f, a)], I[(I[(f, a)], a)]) for f in sets for a in L):
        return "I5"
    if any(I[(f, bot)] != f for f in sets):
        return "I6"
    for K in all_subsets(L):
        if not K:
            continue
        jk = bot
        for k in K:
            jk = join(jk, k)
        for f in sets:
            vals = {I[(f, k)] for k in K}
            if i7 == "constant" and len(vals) == 1 and I[(f, jk)] != next(iter(vals)):
                return "I7"
            if i7 == "fixed" and vals == {f} and I[(f, jk)] != f:
                return "I7"
    return None


def fuzzy_grade(L, leq, join, I, f):
    g = [x for x in L if all(leq(x, y) for y in L)][0]
    for a in L:
        if all(leq(x, y) for x, y in zip(f, I[(f, a)])):
            g = join(g, a)
    return g


def fuzzy_topology_axioms(L, leq, tensor, join, meet, ground_size, grade):
    """Top, tensor and union laws with every subfamily enumerated."""
    bot = [x for x in L if all(leq(x, y) for y in L)][0]
    topv = [x for x in L if all(leq(y, x) for y in L)][0]
    sets = list(product(L, repeat=ground_size))
    if grade[tuple([topv] * ground_size)] != topv:
        return "top"
    for f in sets:
        for g in sets:
            fg = tuple(tensor(a, b) for a, b in zip(f, g))
            if not leq(tensor(grade[f], grade[g]), grade[fg]):
                return "tensor"
    for fam in all_subsets(sets):
        u = tuple([bot] * ground_size)
        m = topv
        for f in fam:
            u = tuple(join(a, b) for a, b in zip(u, f))
            m = meet(m, grade[f])
        if not leq(m, grade[u]):
            return "union"
    return None
