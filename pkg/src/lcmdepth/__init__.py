"""Exact lcm-number, lcm-lattice, order-dimension, depth and Stanley-depth computations
for monomial ideals."""

__version__ = "0.1.0"

from .monomial import (  # noqa: E402
    MonomialIdeal,
    Quotient,
    Shape,
    colon_by_variable,
    eliminate_variable,
    indeg,
    lcm_number,
    minimalize,
    polarize,
    rank_over_rationals,
)
from .lattice import build_lcm_lattice, join_irreducibles, lattice_length  # noqa: E402
from .orderdim import FinitePoset, order_dimension  # noqa: E402
from .homology import betti_via_lcm_lattice, depth_and_pd, multigraded_betti  # noqa: E402
from .stanley import sdepth, sdepth_exact, verify_certificate  # noqa: E402
from .simplicial import (  # noqa: E402
    SimplicialComplex,
    complex_from_squarefree_ideal,
    is_vertex_decomposable,
    stanley_reisner_ideal,
)

__all__ = [
    "MonomialIdeal",
    "Quotient",
    "Shape",
    "colon_by_variable",
    "eliminate_variable",
    "indeg",
    "lcm_number",
    "minimalize",
    "polarize",
    "rank_over_rationals",
    "build_lcm_lattice",
    "join_irreducibles",
    "lattice_length",
    "FinitePoset",
    "order_dimension",
    "betti_via_lcm_lattice",
    "depth_and_pd",
    "multigraded_betti",
    "sdepth",
    "sdepth_exact",
    "verify_certificate",
    "SimplicialComplex",
    "complex_from_squarefree_ideal",
    "is_vertex_decomposable",
    "stanley_reisner_ideal",
]
