"""Exact facet theory for Steiner cut dominants on small graphs."""

from .core import (
    Graph,
    GuardExceeded,
    InvalidCutSet,
    InvalidGraph,
    Rational,
    SteinerCutError,
    SteinerGraph,
    WeightedSteinerGraph,
    load_graph,
)
from .cuts import enumerate_steiner_cuts, gamma, roots
from .facets import Inequality, facet_status, is_facet_inducing, verify_facet
from .laminar import is_laminar, laminar_root_basis
from .oracle import has_prism_or_pyramid_minor, oracle_facets
from .treecactus import classify_tree_cactus, enumerate_facets_le5

__version__ = "0.1.0"
