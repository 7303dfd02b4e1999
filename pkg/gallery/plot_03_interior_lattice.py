"""
The lattice of interior operators
=================================

Interior operators on a finite lattice (contractive, monotone, fixing the
top) are closed under pointwise joins and meets, so they form a complete
lattice with the discrete operator on top.
"""

from ikit.catalog import diamond, label, powerset
from ikit.interior import discrete_op, enumerate_interior_ops, join_ops, operator_lattice, trivial_op

P = powerset(["a", "b"])
ops = list(enumerate_interior_ops(P))
for op in ops:
    print({label(k): label(v) for k, v in op.as_dict().items()})

lat = operator_lattice(ops)
print("top is discrete:", lat.top == discrete_op(P))
print("bottom is trivial:", lat.bottom == trivial_op(P))

# on M3 there are many more, and the join of any family is again one of them
M3 = diamond()
ops = list(enumerate_interior_ops(M3))
print(len(ops), "interior operators on M3")
print("join of all:", join_ops(ops).as_dict())
