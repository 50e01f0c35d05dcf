"""Exact counting of labeled trees, three ways, plus a brute-force oracle."""

from .errors import DomainError, InvariantViolation
from .oracle import (
    LabeledTree,
    SplitProfile,
    count_trees_with_edge,
    edge_count_uniformity,
    enumerate_labeled_trees,
    is_tree,
    split_profile,
)
from .recurrence import (
    TreeCountTable,
    binomial,
    edge_rooted_count,
    tree_count_closed,
    tree_count_recursive,
    verify_edge_symmetry,
)
from .report import Failure, VerificationReport
from .series import (
    FormalSeries,
    lagrange_invert,
    residual_functional,
    residual_log,
    residual_ode,
    residual_square,
    series_add,
    series_diff,
    series_div_by_s,
    series_exp,
    series_log,
    series_mul,
    tree_egf,
)

__version__ = "0.1.0"
