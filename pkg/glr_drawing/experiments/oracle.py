import logging
from typing import Dict, Optional

from glr_drawing.core.exceptions import ExperimentError, OracleCounterexample, PathClaimViolation
from glr_drawing.layouts.engine import layout
from glr_drawing.models.dataclasses import LayoutKind, OracleReport, PathParams
from glr_drawing.models.tree import OrderedTree, serialize_tree
from glr_drawing.paths.selector import (
    brute_force_paths,
    default_params,
    path_invariant_check,
    select_path,
)
from glr_drawing.trees.generators import enumerate_trees
from glr_drawing.validation.report import expected_conditions, validate

_LOGGER = logging.getLogger(__name__)

MAX_ORACLE_N = 12


def _check_tree(tree: OrderedTree, params: PathParams) -> None:
    if not any(feasible for _, feasible in brute_force_paths(tree, params)):
        raise OracleCounterexample(serialize_tree(tree), "no root-to-leaf path is feasible")
    try:
        path = select_path(tree, params)
    except PathClaimViolation as error:
        raise OracleCounterexample(serialize_tree(tree), str(error)) from error
    if not path_invariant_check(tree, path, params):
        raise OracleCounterexample(serialize_tree(tree), f"selected path {path.nodes} infeasible")
    for kind in LayoutKind.every():
        report = validate(tree, layout(tree, kind, params), expected_conditions(kind))
        if not report.passed:
            failed = ",".join(condition.value for condition in report.failed)
            raise OracleCounterexample(serialize_tree(tree), f"{kind} failed {failed}")


def oracle_small_trees(max_n: int, params: Optional[PathParams] = None) -> OracleReport:
    """
    Check every ordered tree with at most max_n nodes: some path satisfies the invariant, the
    selected path does, and every engine's drawing passes its validation matrix.

    :param max_n: the largest tree size, at most 12.
    :param params: the path parameters, defaulting to the configured ones.
    :return: the number of trees checked per size.
    :raises: ExperimentError if max_n is out of range.
    :raises: OracleCounterexample at the first tree breaking any check.
    """
    if not 1 <= max_n <= MAX_ORACLE_N:
        raise ExperimentError(f"max_n must be between 1 and {MAX_ORACLE_N}, got {max_n}.")
    params = params or default_params()
    counts: Dict[int, int] = {}
    for n in range(1, max_n + 1):
        counts[n] = 0
        for tree in enumerate_trees(n):
            _check_tree(tree, params)
            counts[n] += 1
        _LOGGER.info("Trees checked.", extra=dict(n=n, trees=counts[n]))
    return OracleReport(max_n=max_n, counts=counts)
