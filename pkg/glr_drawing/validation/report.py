import logging
from typing import Callable, Dict, FrozenSet, Iterable, List

from glr_drawing.core.exceptions import UnknownConditionError
from glr_drawing.models.dataclasses import ConditionResult, LayoutKind, ValidationReport
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.enums import Condition, LayoutAlgorithm
from glr_drawing.models.tree import OrderedTree
from glr_drawing.validation.checks import (
    check_match,
    check_order_preserving,
    check_p1,
    check_p2,
    check_p3,
    check_p4,
    check_p5,
    check_p6,
    check_p7,
    check_p8,
    check_planar,
    check_upward,
)

_LOGGER = logging.getLogger(__name__)

Check = Callable[[OrderedTree, GridDrawing], ConditionResult]

_CHECKS: Dict[Condition, Check] = {
    Condition.PLANAR: check_planar,
    Condition.ORDER: check_order_preserving,
    Condition.UPWARD: lambda tree, drawing: check_upward(tree, drawing, strict=False),
    Condition.P1: check_p1,
    Condition.P2: check_p2,
    Condition.P3: check_p3,
    Condition.P4: check_p4,
    Condition.P5: check_p5,
    Condition.P6: check_p6,
    Condition.P7: check_p7,
    Condition.P8: check_p8,
}

ALL_CONDITIONS = tuple(Condition)

_PS = tuple(Condition(f"p{index}") for index in range(1, 9))

_EXPECTED: Dict[LayoutAlgorithm, FrozenSet[Condition]] = {
    LayoutAlgorithm.QUADRATIC: frozenset(ALL_CONDITIONS),
    LayoutAlgorithm.ONE_BEND: frozenset(
        (Condition.PLANAR, Condition.ORDER, Condition.UPWARD, *_PS[:5], Condition.P7)
    ),
    LayoutAlgorithm.NONUPWARD: frozenset(
        (Condition.PLANAR, Condition.ORDER, *_PS[:4], Condition.P6, Condition.P8)
    ),
    LayoutAlgorithm.UPWARD: frozenset(
        (Condition.PLANAR, Condition.ORDER, Condition.UPWARD, *_PS[:7])
    ),
}


def parse_conditions(text: str) -> List[Condition]:
    """
    Parse a comma separated list of condition names, keeping their order and dropping repeats.

    :param text: the list, e.g., "planar,order,p3".
    :return: the conditions.
    :raises: UnknownConditionError if a name is unknown.
    """
    conditions: List[Condition] = []
    for name in filter(None, (part.strip().lower() for part in text.split(","))):
        try:
            condition = Condition(name)
        except ValueError as error:
            raise UnknownConditionError(
                f"Unknown condition {name} "
                f"(allowed: {', '.join(c.value for c in ALL_CONDITIONS)})."
            ) from error
        if condition not in conditions:
            conditions.append(condition)
    return conditions


def validate(
    tree: OrderedTree, drawing: GridDrawing, conditions: Iterable[Condition] = ALL_CONDITIONS
) -> ValidationReport:
    """
    Check the given conditions on a drawing of the tree, each one independently of the others.

    :param tree: the tree.
    :param drawing: the drawing.
    :param conditions: the conditions to check.
    :return: the report, with one result per condition.
    :raises: DrawingError if the drawing does not draw the tree.
    :raises: UnknownConditionError if a condition has no check.
    """
    check_match(tree, drawing)
    results: Dict[Condition, ConditionResult] = {}
    for condition in conditions:
        if condition not in _CHECKS:
            raise UnknownConditionError(f"Unknown condition {condition}.")
        if condition not in results:
            results[condition] = _CHECKS[condition](tree, drawing)
    report = ValidationReport(results=results)
    _LOGGER.debug(
        "Drawing validated.",
        extra=dict(n=tree.n, failed=[condition.value for condition in report.failed]),
    )
    return report


def expected_conditions(kind: LayoutKind) -> FrozenSet[Condition]:
    """
    :param kind: the engine and drawing type.
    :return: the conditions every drawing of the engine satisfies.
    """
    return _EXPECTED[kind.algo]


STRUCTURAL_CONDITIONS = tuple(Condition(f"p{index}") for index in range(3, 9))


def check_conditions(
    tree: OrderedTree, drawing: GridDrawing, which: Iterable[Condition] = STRUCTURAL_CONDITIONS
) -> ValidationReport:
    """
    Check the structural conditions p3 to p8 of a drawing.

    :param tree: the tree.
    :param drawing: the drawing, with its path certificate.
    :param which: the conditions to check, among p3 to p8.
    :return: the report.
    :raises: UnknownConditionError if a condition is not structural.
    """
    conditions = list(which)
    for condition in conditions:
        if condition not in STRUCTURAL_CONDITIONS:
            raise UnknownConditionError(f"{condition.value} is not a structural condition.")
    return validate(tree, drawing, conditions)
