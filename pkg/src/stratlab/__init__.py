"""Exact computations for the EO and Newton stratifications of unitary M(a,b).

The flagship result is :func:`stratlab.strata.classify_32`, which rebuilds
the EO x Newton interaction table of M(3,2) from the combinatorics in
:mod:`stratlab.weyl`, :mod:`stratlab.polygons` and :mod:`stratlab.finalseq`,
and the module computations in :mod:`stratlab.modp` and
:mod:`stratlab.crystal`.
"""

from .crystal import (
    CrystalModule,
    isoclinic_check,
    newton_slopes,
    reduce_mod_p,
    table1_module,
    verify_axioms,
)
from .finalseq import FinalSequence, final_sequence_from_permutation, generic_first_slope, phi_tilde
from .io import load_module
from .modp import (
    EtaVector,
    ModPModule,
    canonical_filtration,
    eo_class_from_eta,
    final_sequence_of_module,
    minimal_module,
    semilinear_rank_stable,
    unitary_eta,
)
from .polygons import (
    NewtonPolygon,
    admissible_polygons,
    first_slope,
    lies_on_or_above,
    make_polygon,
    mu_ordinary,
    polygon_p_rank,
)
from .strata import InteractionTable, Status, classify_32, compatible_polygons, eo_p_rank_32, supersingular_witness
from .weyl import CosetRep, Permutation, coset_rep, enumerate_W, eo_dimension, forget_unitary_32, is_in_Wq, length

__version__ = "0.1.0"
