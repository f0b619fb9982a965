"""Exact-arithmetic workbench for Temperley-Lieb and blob diagram algebras.

The package builds the tensor-space matrices of planar diagrams over exact
coefficient rings and machine-verifies, at desk scale, the structural facts
behind their faithfulness: the multiplicative identity of the diagram map,
triangularity over the walk-pair order, linear independence of basis
images, and the mirror-mask certification of the explicit blob
representation.
"""

__version__ = "0.1.0"

from .rings import (
    BlobParams,
    CycloInt,
    CycloLaurent,
    LaurentInt,
    quantum_integer,
    rank_exact,
    rank_modular,
)
from .diagrams import (
    BlobPairing,
    CompositionResult,
    Pairing,
    blob_e,
    compose_blob,
    compose_tl,
    cut,
    enumerate_blob,
    enumerate_tl,
    exposed_lines,
    generator_u,
    identity,
    propagating_number,
    reflect,
)
from .words import (
    GenWord,
    blob_basis_words,
    eval_word,
    f_map,
    format_word,
    parse_word,
    verify_presentation,
)
from .walks import (
    Walk,
    WalkPair,
    enumerate_pairs,
    enumerate_walks,
    hasse_edges,
    leq,
    linear_extension,
    lower_at,
    pair_word,
    raise_at,
    tl_basis_word_table,
)
from .tensorrep import (
    Rho0Config,
    Rho0Rep,
    SparseRepMatrix,
    index_to_seq,
    local_u_matrix,
    mask,
    mask_eq,
    place_local,
    r_matrix,
    rho0,
    seq_to_index,
)
from .faithful import (
    DEFAULT_SEED,
    FaithfulnessCertificate,
    TriangularityReport,
    certify_mirror,
    certify_rho0,
    triangularity_report,
    verify_blob_representation,
    verify_mask_independence,
    verify_r_composition,
    verify_tl_faithful,
)

__all__ = [name for name in dir() if not name.startswith("_")]
