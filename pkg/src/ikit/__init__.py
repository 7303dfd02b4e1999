"""Interior operators on finite complete lattices.

Orders and lattices, Galois adjunctions, powerset image triples, interior
operators and their continuity, Kuratowski topologies, sieve interiors on
finite categories, and graded fuzzy interiors over GL-monoids.
"""

from .errors import IkitError, Verdict

__all__ = ["IkitError", "Verdict"]
__version__ = "0.1.0"
