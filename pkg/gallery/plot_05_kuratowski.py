"""
Kuratowski operators and finite topologies
==========================================

Interior operators on a powerset that are also idempotent and preserve
binary intersections are exactly the interiors of topologies.
"""

from ikit.catalog import label
from ikit.kuratowski import enumerate_kuratowski_ops, enumerate_topologies, interior_from_topology, topology_from_interior

for n in range(5):
    print(n, "points:", len(enumerate_topologies(n)), "topologies")

# the round trip on three points
ops = list(enumerate_kuratowski_ops(3))
print(all(interior_from_topology(topology_from_interior(op)) == op for op in ops))

t = enumerate_topologies(2)[1]
print("opens:", [label(U) for U in sorted(t.opens, key=len)])
print("interior:", {label(k): label(v) for k, v in interior_from_topology(t).as_dict().items()})
