"""
Benchmark harness: draws every (size, trial) cell of a tree family, validates the drawing
against the engine's validation matrix and records its metrics.
"""
import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import IO, Iterable, List, Optional, Tuple

from glr_drawing.core import config
from glr_drawing.core.exceptions import BenchValidationError, ExperimentError
from glr_drawing.layouts.engine import layout
from glr_drawing.layouts.metrics import measure
from glr_drawing.models.dataclasses import (
    BenchRow,
    BenchRun,
    LayoutKind,
    PathParams,
    TreeFamilySpec,
)
from glr_drawing.models.enums import TreeKind
from glr_drawing.monitoring.core import LAYOUT_SECONDS, VALIDATION_FAILURES
from glr_drawing.paths.selector import default_params
from glr_drawing.trees.generators import generate
from glr_drawing.validation.report import expected_conditions, validate

_LOGGER = logging.getLogger(__name__)

CSV_COLUMNS = ("n", "seed", "width", "height", "area", "bends", "ms")

_SEED_STRIDE = 1_000_003
_SEED_MODULUS = 2 ** 64

# Outcome of a cell: the row, the failed condition names and the layout time in seconds.
_Cell = Tuple[BenchRow, List[str], float]


def parse_sizes(text: str) -> Tuple[int, ...]:
    """
    Parse a size range: "start:stop:xFACTOR" (geometric), "start:stop:STEP" (arithmetic),
    "start:stop" (step 1) or a comma separated list.

    :param text: the size range.
    :return: the distinct sizes, increasing.
    :raises: ExperimentError if the range is malformed or empty.
    """
    try:
        if ":" not in text:
            sizes = {int(part) for part in text.split(",") if part.strip()}
        else:
            start_text, stop_text, *rest = text.split(":")
            if len(rest) > 1:
                raise ValueError(text)
            start, stop = int(start_text), int(stop_text)
            step = rest[0] if rest else "1"
            sizes = set()
            if step.startswith("x"):
                factor = float(step[1:])
                if factor <= 1:
                    raise ValueError(step)
                value = float(start)
                while round(value) <= stop:
                    sizes.add(round(value))
                    value *= factor
            else:
                sizes = set(range(start, stop + 1, int(step)))
    except ValueError as error:
        raise ExperimentError(f"Invalid sizes {text!r}.") from error
    if not sizes or min(sizes) < 1:
        raise ExperimentError(f"Sizes {text!r} must be a non empty range of positive integers.")
    return tuple(sorted(sizes))


def cell_seed(base_seed: int, n: int, trial: int) -> int:
    """
    :return: the seed of the tree drawn for the given size and trial.
    """
    return (base_seed + _SEED_STRIDE * n + trial) % _SEED_MODULUS


def sized_family(family: TreeFamilySpec, size: int, seed: int) -> TreeFamilySpec:
    """
    Instantiate the family template at a size: the number of nodes for most kinds, the height
    for complete trees and the closest k for the lower bound family.

    :param family: the template.
    :param size: the size.
    :param seed: the seed of the cell.
    :return: the concrete family spec.
    """
    if family.kind == TreeKind.COMPLETE:
        return replace(family, height=size, seed=seed)
    if family.kind == TreeKind.LOWERBOUND:
        return replace(family, k=max(1, round((size + 1) / 6)), seed=seed)
    return replace(family, n=size, seed=seed)


def _run_cell(
    family: TreeFamilySpec,
    size: int,
    trial: int,
    kind: LayoutKind,
    params: PathParams,
    timing: bool,
) -> _Cell:
    seed = cell_seed(family.seed, size, trial)
    tree = generate(sized_family(family, size, seed))
    started = time.perf_counter()
    drawing = layout(tree, kind, params)
    elapsed = time.perf_counter() - started
    report = validate(tree, drawing, sorted(expected_conditions(kind), key=lambda c: c.value))
    metrics = measure(drawing)
    row = BenchRow(
        n=tree.n,
        seed=seed,
        width=metrics.width,
        height=metrics.height,
        area=metrics.area,
        bends=metrics.bends,
        ms=round(elapsed * 1000, 3) if timing else 0,
    )
    return row, [condition.value for condition in report.failed], elapsed


def _record(kind: LayoutKind, cell: _Cell) -> BenchRow:
    row, failed, elapsed = cell
    LAYOUT_SECONDS.labels(kind.algo.value, kind.variant.value).observe(elapsed)
    for condition in failed:
        VALIDATION_FAILURES.labels(kind.algo.value, kind.variant.value, condition).inc()
    if failed:
        raise BenchValidationError(n=row.n, seed=row.seed, failed=",".join(failed))
    return row


def run_bench(
    run: BenchRun,
    params: Optional[PathParams] = None,
    timing: bool = True,
    workers: Optional[int] = None,
) -> BenchRun:
    """
    Draw and validate every (size, trial) cell of the run.
    Cells are independent; with more than one worker they run in separate processes and the rows
    are merged back in (size, trial) order.

    :param run: the run, whose rows are ignored.
    :param params: the path parameters, defaulting to the configured ones.
    :param timing: whether to record the layout time, 0 otherwise.
    :param workers: the number of processes, defaulting to the configured one.
    :return: the run with one row per cell.
    :raises: ExperimentError if the run is empty.
    :raises: BenchValidationError at the first drawing failing its validation matrix.
    """
    if not run.sizes or run.trials < 1:
        raise ExperimentError("A benchmark needs at least one size and one trial.")
    params = params or default_params()
    workers = config.BENCH_WORKERS if workers is None else workers
    cells = [(size, trial) for size in run.sizes for trial in range(run.trials)]
    _LOGGER.info(
        "Benchmark started.",
        extra=dict(kind=str(run.kind), family=run.family.kind.value, cells=len(cells)),
    )

    rows: List[BenchRow] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(_run_cell, run.family, size, trial, run.kind, params, timing)
                for size, trial in cells
            ]
            for future in futures:
                rows.append(_record(run.kind, future.result()))
    else:
        for size, trial in cells:
            rows.append(
                _record(run.kind, _run_cell(run.family, size, trial, run.kind, params, timing))
            )

    _LOGGER.info("Benchmark done.", extra=dict(kind=str(run.kind), rows=len(rows)))
    return replace(run, rows=tuple(rows))


def write_csv(rows: Iterable[BenchRow], stream: IO[str]) -> None:
    """
    Write the rows as CSV with a header line.

    :param rows: the rows.
    :param stream: the text stream to write to.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([getattr(row, column) for column in CSV_COLUMNS])
