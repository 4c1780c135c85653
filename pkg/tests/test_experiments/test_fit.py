import math

from pytest import approx, raises

from glr_drawing.core.exceptions import ExperimentError
from glr_drawing.experiments.bench import run_bench
from glr_drawing.experiments.fit import fit_exponent
from glr_drawing.models.dataclasses import BenchRow, BenchRun, LayoutKind, TreeFamilySpec
from glr_drawing.models.enums import LayoutAlgorithm, Metric, TreeKind


def _row(n: int, width: int, height: int) -> BenchRow:
    return BenchRow(n=n, seed=0, width=width, height=height, area=width * height, bends=0, ms=0)


def test_fit_power_law() -> None:
    rows = [_row(n, 2, 3 * n * n) for n in (4, 8, 16, 32, 64)]
    fit = fit_exponent(rows, Metric.HEIGHT)
    assert fit.slope == approx(2.0)
    assert fit.intercept == approx(math.log(3))
    assert fit.r_squared == approx(1.0)
    assert not fit.degenerate
    assert fit_exponent(rows, Metric.AREA).slope == approx(2.0)


def test_fit_takes_worst_trial() -> None:
    rows = [_row(n, 1, n) for n in (10, 20, 40, 80)]
    rows.extend(_row(n, 1, 1) for n in (10, 20, 40, 80))
    assert fit_exponent(rows, Metric.HEIGHT).slope == approx(1.0)


def test_fit_constant_metric() -> None:
    rows = [_row(n, 2, n) for n in (10, 20, 40, 80)]
    fit = fit_exponent(rows, Metric.WIDTH)
    assert fit.degenerate
    assert fit.slope == 0.0
    assert fit.intercept == approx(math.log(2))


def test_fit_too_few_sizes() -> None:
    rows = [_row(n, 1, n) for n in (10, 20, 40, 40)]
    with raises(ExperimentError):
        fit_exponent(rows, Metric.HEIGHT)


def test_fit_benchmark_of_paths() -> None:
    run = BenchRun(
        family=TreeFamilySpec(TreeKind.PATH),
        sizes=(16, 32, 64, 128, 256),
        trials=1,
        kind=LayoutKind.of(LayoutAlgorithm.QUADRATIC),
    )
    rows = run_bench(run, timing=False, workers=1).rows
    assert fit_exponent(rows, Metric.HEIGHT).slope == approx(1.0)
    assert fit_exponent(rows, Metric.WIDTH).degenerate
