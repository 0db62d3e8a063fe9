"""Exact toolkit for central extensions of nilpotent associative algebras.

Modules: exact (rationals, matrices, subspaces, polynomials), algebra,
cohomology, extension, catalog, orbitlab and cli.
"""

from .algebra import Algebra, fingerprint, is_iso_witness
from .catalog import catalog_algebra, parse_spec
from .cohomology import Cocycle, cohomology_basis, cohomology_dims
from .exact import Matrix, ParamPoly, Subspace
from .extension import central_extend, reconstruct

__all__ = [
    "Algebra", "Cocycle", "Matrix", "ParamPoly", "Subspace", "catalog_algebra", "central_extend",
    "cohomology_basis", "cohomology_dims", "fingerprint", "is_iso_witness", "parse_spec", "reconstruct",
]

__version__ = "0.1.0"
