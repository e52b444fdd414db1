"""smallcat: exhaustive computation with finite categories.

The package is organized around one substrate, :mod:`smallcat.fincat`
(categories with total composition tables), and builds set-valued diagrams,
Kan extensions, lifting-property tooling, involutive and semidirect-product
constructions, truncated (real) simplicial sets, arity-truncated cyclic
operads, and bounded chain-complex computations on top of it.
"""

from . import (  # noqa: F401
    catmodel,
    catspec,
    chaincx,
    cycops,
    fincat,
    invcat,
    nabla,
    semidirect,
    setval,
)

__version__ = "0.1.0"
