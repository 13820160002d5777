"""Exact computation of the centre of the quantum group U_q(g).

The library builds, entirely in exact arithmetic, the combinatorial model of
the centre: the monoid M+ of dominant weights in the half root lattice and
its Hilbert basis, the binomial presentation of the monoid algebra, the
Harish-Chandra images of the central elements in the character ring, and the
explicit rank-1 Casimir elements obtained from the quasi R-matrix.
"""

from .errors import DomainError, ResourceLimitError
from .report import CheckItem, Report
from .root_system import (
    RootSystem,
    Weight,
    build_root_system,
    weight_to_json,
)
from .half_lattice_monoid import (
    TYPE_I,
    TYPE_II,
    HilbertBasis,
    classify_type,
    conjugate,
    ell,
    hilbert_basis,
    in_monoid,
    involution,
    min_multipliers,
    rel1,
    rel2,
    type_A_membership,
)
from .monoid_presentation import (
    BinomialRelation,
    MonoidAlgebraElement,
    Presentation,
    generation_check,
    phi,
    presentation,
    verify_relations,
)
from .character_ring import (
    CharacterTable,
    TorusInvariant,
    av_basis_element,
    expand_in_av,
    expand_in_simples,
    independence_check,
    set_cache_dir,
    unitriangularity_check,
    verify_centre_relations,
    weight_multiplicities,
    weyl_dim,
    xi_simple,
    xi_tensor,
)
from .qrational import QRat, q_factorial, q_int, q_power
from .uq_rank1 import (
    SimpleModule,
    UqElement,
    UqMatrix,
    casimir,
    check_K_intertwining,
    check_gamma_intertwines,
    express_in_powers,
    gamma,
    hc_project,
    is_central,
    K_operator,
    multiply,
    quasi_R,
    quasi_R_tilde_T,
    simple_module,
)

__version__ = "0.1.0"
