import logging
import sys
from typing import Optional, Set

from pythonjsonlogger import jsonlogger

from glr_drawing.models.enums import LogLevel


class StructuredJsonFormatter(jsonlogger.JsonFormatter):
    """
    Logging Json formatter emitting one object per record, with the structured `extra` fields.
    """

    _LOGGING_ATTRS = {
        "%(asctime)s",
        "%(name)s",
        "%(funcName)s",
        "%(lineno)d",
        "%(process)d",
        "%(levelname)s",
        "%(message)s",
    }

    def __init__(
        self, json_indent: Optional[int], logging_attrs: Optional[Set[str]] = None
    ) -> None:
        """
        :param json_indent: the log json indentation.
        :param logging_attrs: the attributes to log, in addition to the default ones.
        """
        super().__init__(
            fmt=" ".join(sorted(self._LOGGING_ATTRS.union(logging_attrs or set()))),
            json_indent=json_indent if json_indent else None,
        )


def initialize_logging(log_level: LogLevel, log_json_indent: int) -> None:
    """
    Initialize logging and set proper default levels and formatters.
    Records go to stderr, since stdout carries the command line payloads.

    :param log_level: the log level to set.
    :param log_json_indent: the log json indentation.
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level.name)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level.name)
    handler.setFormatter(StructuredJsonFormatter(json_indent=log_json_indent))
    root_logger.addHandler(handler)


def silence(quiet: bool) -> None:
    """
    Raise the root logger level to WARNING, if requested.

    :param quiet: whether informational records should be dropped.
    """
    if quiet:
        root_logger = logging.getLogger()
        root_logger.setLevel(logging.WARNING)
        for handler in root_logger.handlers:
            handler.setLevel(logging.WARNING)
