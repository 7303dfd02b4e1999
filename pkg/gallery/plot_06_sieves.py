"""
Sieves and Grothendieck topologies
==================================

Sieves on an object form a lattice, and pulling back along an arrow is the
inverse-image map. A family of interior operators on the sieve lattices
gives a candidate topology by reading off the fixed sieves.
"""

from ikit.sieves import (
    all_sieves,
    arrow_category,
    check_grothendieck,
    discrete_family,
    open_sieve_topology,
    pullback_sieve,
    trivial_family,
)

C = arrow_category()  # a --u--> b
for S in all_sieves(C, "b"):
    print("sieve on b:", sorted(S.arrows), " pulled back along u:", sorted(pullback_sieve(C, "u", S).arrows))

print("discrete family:", bool(check_grothendieck(open_sieve_topology(discrete_family(C)))))

# the empty sieve is always fixed, hence always covers, and transitivity then
# demands that every sieve covers; the trivial family does not deliver that
v = check_grothendieck(open_sieve_topology(trivial_family(C)))
print("trivial family:", v.law, v.witness)
