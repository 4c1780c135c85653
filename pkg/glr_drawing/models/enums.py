from __future__ import annotations

import logging
from enum import Enum
from typing import Type, TypeVar

from glr_drawing.core.exceptions import GlrException

T = TypeVar("T")


class EnvarEnum(Enum):
    """
    Superclass for enumerations parsed from environment variables or command line flags.
    """

    @classmethod
    def from_env_var(cls: Type[T], value: str) -> T:
        """
        Parse the value and provide an informative error message on failure.

        :param value: the raw value.
        :return: the corresponding Enum entry.
        """
        try:
            return cls(value)  # type: ignore
        except ValueError as error:
            allowed = ", ".join(e.value for e in cls)  # type: ignore
            raise GlrException(f"Invalid value: {value} (allowed: {allowed})") from error


class LogLevel(EnvarEnum):
    """
    Enumeration of the possible log levels.
    """

    CRITICAL = "critical"
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"
    DEBUG = "debug"

    @classmethod
    def from_env_var(cls, value: str) -> LogLevel:
        """
        Parse the environment variable value and provide an informative error message on failure.

        :param value: the environment variable value.
        :return: the corresponding LogLevel entry.
        :raises: GlrException if the given log level is deprecated in the logging library.
        """
        level = super().from_env_var(value)

        if level.name not in logging._nameToLevel:  # pylint: disable=protected-access
            raise GlrException(f"Deprecated log level: {value}. Code update needed.")

        return level


class TreeKind(EnvarEnum):
    """
    Enumeration of the tree families the generator can produce.
    """

    RANDOM = "random"
    COMPLETE = "complete"
    PATH = "path"
    STAR = "star"
    LOWERBOUND = "lowerbound"
    HEAVYMIDDLE = "heavymiddle"


class LayoutAlgorithm(EnvarEnum):
    """
    Enumeration of the layout engines.
    """

    QUADRATIC = "quadratic"
    ONE_BEND = "onebend"
    NONUPWARD = "nonupward"
    UPWARD = "upward"


class LayoutVariant(EnvarEnum):
    """
    Enumeration of the drawing types, i.e., where the root sits in the bounding box.
    """

    DEFAULT = "default"
    TYPE_I = "I"
    II_LEFT = "IIl"
    II_RIGHT = "IIr"
    III_LEFT = "IIIl"
    III_RIGHT = "IIIr"

    @property
    def mirrored(self) -> LayoutVariant:
        """
        :return: the variant obtained by swapping left and right.
        """
        return _MIRRORED.get(self, self)


_MIRRORED = {
    LayoutVariant.II_LEFT: LayoutVariant.II_RIGHT,
    LayoutVariant.II_RIGHT: LayoutVariant.II_LEFT,
    LayoutVariant.III_LEFT: LayoutVariant.III_RIGHT,
    LayoutVariant.III_RIGHT: LayoutVariant.III_LEFT,
}


class Condition(EnvarEnum):
    """
    Enumeration of the drawing conditions the validator can check.
    """

    PLANAR = "planar"
    ORDER = "order"
    UPWARD = "upward"
    P1 = "p1"
    P2 = "p2"
    P3 = "p3"
    P4 = "p4"
    P5 = "p5"
    P6 = "p6"
    P7 = "p7"
    P8 = "p8"


class Metric(EnvarEnum):
    """
    Enumeration of the drawing metrics an exponent can be fitted on.
    """

    WIDTH = "width"
    HEIGHT = "height"
    AREA = "area"
