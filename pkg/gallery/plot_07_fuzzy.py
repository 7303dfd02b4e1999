"""
Fuzzy interiors and graded topologies
=====================================

Over a GL-monoid L, a level-indexed interior operator I(f, a) on the fuzzy
sets L^X induces the grading T(f) = ⋁{a | f <= I(f, a)}.
"""

from ikit.fuzzy import (
    FuzzySpace,
    check_fuzzy_topology,
    check_gl_monoid,
    enumerate_fuzzy_interiors,
    fuzzy_topology_from_interior,
    lukasiewicz_monoid,
    min_monoid,
)

for name, m in (("min", min_monoid(3)), ("Lukasiewicz", lukasiewicz_monoid(3))):
    print(name, "is a GL-monoid:", bool(check_gl_monoid(m)))
    S = FuzzySpace(m, ["x"])
    ops = list(enumerate_fuzzy_interiors(S))
    print(" ", len(ops), "fuzzy interiors on one point")
    T = fuzzy_topology_from_interior(ops[0])
    print("  grades:", {f: T(f) for f in S.fuzzy_sets()})
    print("  all induce fuzzy topologies:",
          all(check_fuzzy_topology(fuzzy_topology_from_interior(op)) for op in ops))
