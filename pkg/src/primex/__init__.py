"""Solvable primitive permutation groups, their affine structure, module
cohomology, complements, and Galois types of 2-adic quartics."""

from .affine import (
    AffineMap,
    AffineStructure,
    agl_full,
    intermediate_group_tests,
    linear_representation,
    minimal_normal_translations,
    recover_affine,
)
from .blocks import Partition, block_system, is_essential, is_g_stable, is_primitive, minimal_block
from .classify import ClassificationEntry, permutation_isomorphic, solvable_primitive_groups
from .cohomology import CohomologyReport, coboundary_matrix, cohomology, vanishing_sweep
from .dyadic import QuarticReport, TwoAdicNumber, classify_quartic, cubic_root_in_q2, discriminant_quartic, eisenstein_scan, is_square_q2, resolvent_cubic
from .extensions import ExtensionPresentation, complement_classes, complements, is_split, semidirect
from .gf import FlMatrix, Subspace
from .modrep import (
    LinearRepresentation,
    clifford_restriction_semisimple,
    idempotent_split,
    invariant_subspaces,
    irreducible_solvable_subgroups,
    is_faithful,
    is_simple,
    module_from_conjugation,
)
from .perm import (
    Permutation,
    PermutationGroup,
    SubgroupList,
    build_chain,
    compose,
    derived_series,
    enumerate_subgroups,
    is_maximal,
    is_solvable,
    orbit,
    point_stabilizer,
)

__version__ = "0.1.0"
