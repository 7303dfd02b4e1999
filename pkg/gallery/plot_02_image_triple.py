"""
Image, preimage and universal image
===================================

Every function between finite sets induces three maps on subsets, with
direct image ⊣ preimage ⊣ universal image.
"""

from ikit.catalog import label
from ikit.sets import FinFunction, check_mono_epi_laws, triple_of

f = FinFunction(["1", "2", "3"], ["x", "y", "z"], {"1": "x", "2": "x", "3": "y"})
t = triple_of(f)

for M in t.existential.dom.elements:
    print(f"{label(M):>9}  exists {label(t.existential(M)):>7}  forall {label(t.universal(M))}")

# f is neither injective nor surjective, so only the unconditional laws apply
v = check_mono_epi_laws(f)
print(bool(v), v.details)
