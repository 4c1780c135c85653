from enum import Enum
from typing import Any, Type

from marshmallow import ValidationError
from marshmallow.fields import Field, Integer, List, String
from marshmallow.validate import Range

from glr_drawing.models.marshmallow.validators import GridPointValidator, TreeTextValidator


class EnumField(Field):
    """
    Validate enumerations.
    """

    def __init__(self, enum: Type[Enum]) -> None:
        """
        :param enum: the Enum class to validate against.
        """
        self._enum: Type[Enum] = enum
        super().__init__(required=True)

    def _serialize(self, value: Any, attr: str, obj: Any, **kwargs: Any) -> Any:
        return value.value

    def _deserialize(self, value: str, attr: Any, data: Any, **kwargs: Any) -> Any:
        try:
            return self._enum(value)
        except ValueError as error:
            raise ValidationError(f"{value} is not in {[e.value for e in self._enum]}") from error


class StrictInteger(Integer):
    """
    Validate an integer, refusing booleans and numeric strings.
    """

    def _validated(self, value: Any) -> Any:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.make_error("invalid", input=value)
        return super()._validated(value)


class NodeId(StrictInteger):
    """
    Validate a node id.
    """

    def __init__(self, **kwargs: Any) -> None:
        super().__init__(required=True, validate=Range(min=0), **kwargs)


class GridPoint(List):
    """
    Validate a grid point, given as [x, y].
    """

    def __init__(self) -> None:
        super().__init__(StrictInteger(), validate=GridPointValidator())

    def _deserialize(self, value: Any, attr: Any, data: Any, **kwargs: Any) -> Any:
        return tuple(super()._deserialize(value, attr, data, **kwargs))


class TreeText(String):
    """
    Validate a tree in the nested parentheses format.
    """

    def __init__(self, **kwargs: Any) -> None:
        super().__init__(validate=TreeTextValidator(), **kwargs)
