"""Sprout graphs: edge orientations induced by vertex index patterns.

The core objects are :class:`~sproutlab.graph.Graph`,
:class:`~sproutlab.sprout.IndexPattern` and the sprout graph built from the
two.  Exact min/max maturity-weight solvers live in :mod:`sproutlab.solvers`;
closed-form family expressions in :mod:`sproutlab.formulas` and their
cross-checks in :mod:`sproutlab.verify`; exhaustive conjecture searches in
:mod:`sproutlab.lab`.
"""

from .errors import (
    ConnectivityError,
    GraphFormatError,
    ParameterError,
    PatternError,
    SizeLimitError,
    SproutError,
)
from .graph import Graph, complement, disjoint_union, edge_joint, join, make_family
from .kernels import backend_name
from .solvers import (
    ExtremaResult,
    branch_and_bound_min,
    brute_force_extrema,
    complement_duality,
    mmaw_cycle_pattern,
    mmaw_identity_pattern,
    mmaw_path_pattern,
    mmaw_sequence,
)
from .sprout import (
    IndexPattern,
    SproutGraph,
    adult_vertices,
    initiator_vertices,
    maturity_weight,
    snapshot,
    sprout,
    timeline,
)

__version__ = "0.1.0"
