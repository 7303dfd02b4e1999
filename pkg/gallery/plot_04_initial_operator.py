"""
Initial interior operators and open elements
============================================

Given f: X -> Y and an operator iY on the subsets of Y, the operator
f⁻¹ ∘ iY ∘ f_* is the least operator on X making f continuous. Preimages of
open sets along continuous maps stay open.
"""

from ikit.catalog import label
from ikit.interior import (
    InteriorOp,
    check_open_stability,
    enumerate_interior_ops,
    initial_interior,
    is_continuous,
    le_ops,
    open_elements,
)
from ikit.sets import FinFunction, action_of

f = FinFunction(["1", "2"], ["x", "y"], {"1": "x", "2": "x"})
a = action_of(f)
PY = a.target
iY = InteriorOp.from_mapping(PY, lambda N: N if N in (frozenset(), frozenset("x"), frozenset("xy")) else frozenset())

init = initial_interior(a, iY)
print("initial:", {label(k): label(v) for k, v in init.as_dict().items()})

continuous = [iX for iX in enumerate_interior_ops(a.source) if is_continuous(a, iX, iY)]
print(len(continuous), "continuous operators, all above the initial one:",
      all(le_ops(init, iX) for iX in continuous))

print("opens of iY:", [label(n) for n in open_elements(iY)])
print("opens of initial:", [label(m) for m in open_elements(init)])
print("open stability:", bool(check_open_stability(a, init, iY)))
