"""Exact verification of covariant families for semidirect-product Lie algebras.

The package builds Lie algebras g acting on modules V in exact rational
arithmetic, forms the semidirect products g x V* with their coadjoint
structure, constructs the catalog's polynomial covariant families F: V -> g,
and machine-checks every identity they are claimed to satisfy: kernel
membership, equivariance, span structure, degree audits, lifted invariance,
Poisson commutation and index bookkeeping.
"""

from . import catalog, covariants, lie, linalg, poly, sampling, semidirect, verify

__version__ = "0.1.0"

__all__ = [
    "catalog",
    "covariants",
    "lie",
    "linalg",
    "poly",
    "sampling",
    "semidirect",
    "verify",
    "__version__",
]
