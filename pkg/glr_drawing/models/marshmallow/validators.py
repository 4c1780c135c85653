from typing import Any, List

from marshmallow import ValidationError
from marshmallow.validate import Validator

from glr_drawing.core.exceptions import TreeParseError
from glr_drawing.models.tree import parse_tree


class TreeTextValidator(Validator):
    """
    A validator for trees in the nested parentheses format.
    """

    def __call__(self, value: str) -> str:
        try:
            parse_tree(value)
        except TreeParseError as error:
            raise ValidationError(str(error)) from error
        return value


class GridPointValidator(Validator):
    """
    A validator for grid points, i.e., pairs of integers.
    """

    def __call__(self, value: List[Any]) -> List[Any]:
        if len(value) != 2:
            raise ValidationError(f"A grid point has two coordinates, got {len(value)}.")
        return value
