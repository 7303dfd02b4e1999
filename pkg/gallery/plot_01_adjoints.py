"""
Synthesizing Galois adjoints
============================

A monotone map between finite lattices has a left adjoint exactly when it
preserves every meet, the empty meet included.
"""

from ikit.adjunction import characterizations, is_adjoint_pair, synthesize_left_adjoint
from ikit.catalog import chain, powerset
from ikit.errors import MeetNotPreserved
from ikit.order import MonotoneMap

# preimage along the inclusion {a} -> {a, b} is the map N |-> N ∩ {a}
P1, P2 = powerset(["a"]), powerset(["a", "b"])
restrict = MonotoneMap.from_mapping(P2, P1, lambda N: N & {"a"})
image = synthesize_left_adjoint(restrict)
print("left adjoint:", image.as_dict())
print("adjoint pair:", bool(is_adjoint_pair(image, restrict)))
print("characterizations:", characterizations(image, restrict))

# a constant map at the bottom misses the empty meet (the top)
C2 = chain(2)
const = MonotoneMap.constant(C2, C2, 0)
try:
    synthesize_left_adjoint(const)
except MeetNotPreserved as exc:
    print("no left adjoint, witness:", exc.witness)
