"""Hyperplane splits of matroid base polytopes, computed exactly at desk scale.

Matroids are explicit base families on ``{1..n}``. The package builds them
(:mod:`.zoo`), studies their base graphs (:mod:`.base_graph`) and base polytopes
(:mod:`.polytope`), and constructs, searches for and verifies splits
(:mod:`.splits`). :mod:`.documents` and :mod:`.cli` handle JSON and the
command line.
"""

from __future__ import annotations

from .base_graph import BaseGraph, classify_common_neighborhood, empty_squares, is_binary
from .documents import export_dot, parse, serialize
from .errors import DeskScaleError, ExchangeAxiomViolation, MatroidError, ParseError, ValidationError
from .matroid import (
    Matroid,
    closure,
    connected_components,
    direct_sum,
    from_bases,
    is_circuit_hyperplane,
    rank_of,
    relax,
    restriction,
)
from .polytope import SplitHyperplane, dimension, facet_check, theorem1_hyperplane, vertices
from .splits import (
    Certificate,
    GoodPartition,
    SplitCandidate,
    VerificationReport,
    classify,
    construct_split,
    indecomposability_certificates,
    is_good_partition,
    lattice_path_splits,
    lift_split_direct_sum,
    project_split_direct_sum,
    search_splits,
    split_distinctness_key,
    uniform_split_family,
    verify_certificate,
    verify_split,
)
from .zoo import GraphSpec, LatticePathSpec, catalog, from_gf2_matrix, graphic, lattice_path, transversal, uniform

__version__ = "0.1.0"
