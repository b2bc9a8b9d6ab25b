"""Chern-Schwartz-MacPherson classes of Schubert cells in flag manifolds G/B.

Exact computation in the Schubert basis for every simple Lie type, through
the involutions ``T_k = d_k - s_k`` acting on homology.
"""

from .coeff import SparsePoly
from .csm import (
    codim1_check,
    csm_cell,
    csm_cell_equiv,
    csm_variety,
    leading_term_product,
    positive_root_product,
    pushforward_GP,
)
from .rootsys import RootSystem, build, pairing, rho, root_to_weight
from .schubop import (
    ClassVector,
    bgg_delta,
    chevalley_mul,
    t_op,
    t_op_equiv,
    t_word,
    weyl_sk,
)
from .verify import CsmReport, verify_identities, verify_positivity
from .weyl import (
    WeylElement,
    bruhat_leq,
    elements,
    from_permutation,
    from_word,
    inverse,
    longest_element,
    min_coset_rep,
    multiply,
    parse_element,
    parse_permutation,
    reduced_word,
    right_descent,
    simple,
    support,
    to_permutation,
)

__version__ = "0.1.0"
