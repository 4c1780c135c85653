import logging
from collections import defaultdict
from typing import Dict, Iterable

import numpy as np

from glr_drawing.core.exceptions import ExperimentError
from glr_drawing.models.dataclasses import BenchRow, FitResult
from glr_drawing.models.enums import Metric

_LOGGER = logging.getLogger(__name__)

MIN_SIZES = 4


def fit_exponent(rows: Iterable[BenchRow], metric: Metric) -> FitResult:
    """
    Fit log(metric) = slope * log(n) + intercept by least squares, taking for every size the
    largest value over its trials.

    :param rows: the benchmark rows.
    :param metric: the metric to fit.
    :return: the fitted line; a constant metric gives slope 0 and the degenerate flag.
    :raises: ExperimentError if there are less than four distinct sizes.
    """
    worst: Dict[int, int] = defaultdict(int)
    for row in rows:
        worst[row.n] = max(worst[row.n], getattr(row, metric.value))
    if len(worst) < MIN_SIZES:
        raise ExperimentError(f"Fitting needs at least {MIN_SIZES} sizes, got {len(worst)}.")

    sizes = sorted(worst)
    log_n = np.log(np.array(sizes, dtype=float))
    log_value = np.log(np.array([worst[n] for n in sizes], dtype=float))
    if np.all(log_value == log_value[0]):
        return FitResult(slope=0.0, intercept=float(log_value[0]), r_squared=1.0, degenerate=True)

    slope, intercept = np.polyfit(log_n, log_value, 1)
    residuals = log_value - (slope * log_n + intercept)
    total = np.sum((log_value - log_value.mean()) ** 2)
    r_squared = 1.0 - float(np.sum(residuals ** 2) / total)
    _LOGGER.debug(
        "Exponent fitted.", extra=dict(metric=metric.value, slope=float(slope), sizes=len(sizes))
    )
    return FitResult(slope=float(slope), intercept=float(intercept), r_squared=r_squared)
