"""Exact computations in the Hopf algebra of multigraphs.

Modules
-------
multigraph         multigraphs, induced subgraphs, contraction, canonical keys
matroid            flats, rank, acyclic orientations (graphic matroid)
hopf               graph sums, product, coproduct, antipode
characters         characters, convolution, inverses, polynomiality in k
tutte              memoized Tutte and rank-nullity polynomials
tutte_identities   Tutte-character identities evaluated on grids
qsym               monomial quasisymmetric functions, Psi and Pi
reciprocity        xi_c identities on complete graphs
verify             named verification suites used by the CLI
"""

from .hopf import GraphSum, antipode_flats, antipode_takeuchi
from .multigraph import Multigraph, parse_graph

__all__ = ["GraphSum", "Multigraph", "antipode_flats", "antipode_takeuchi", "parse_graph"]
__version__ = "0.1.0"
