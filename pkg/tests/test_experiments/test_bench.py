import io

from pytest import mark, raises

from glr_drawing.core.exceptions import BenchValidationError, ExperimentError
from glr_drawing.experiments import bench
from glr_drawing.experiments.bench import (
    CSV_COLUMNS,
    cell_seed,
    parse_sizes,
    run_bench,
    sized_family,
    write_csv,
)
from glr_drawing.models.dataclasses import BenchRun, LayoutKind, TreeFamilySpec
from glr_drawing.models.enums import Condition, LayoutAlgorithm, LayoutVariant, TreeKind
from glr_drawing.monitoring.core import exposition


@mark.parametrize(
    "text, expected",
    (
        ("10:40:x2", (10, 20, 40)),
        ("10:100:x1.5", (10, 15, 22, 34, 51, 76)),
        ("1:5", (1, 2, 3, 4, 5)),
        ("2:10:4", (2, 6, 10)),
        ("3,1,3", (1, 3)),
    ),
)
def test_parse_sizes(text: str, expected: tuple) -> None:
    assert parse_sizes(text) == expected


@mark.parametrize("text", ("a:b", "5:1", "1:10:x1", "0:3", "1:2:3:4", "", "1,-2"))
def test_parse_sizes_invalid(text: str) -> None:
    with raises(ExperimentError):
        parse_sizes(text)


def test_cell_seed() -> None:
    assert cell_seed(0, 1, 0) == 1_000_003
    assert cell_seed(5, 2, 3) == 2_000_014
    assert cell_seed(2 ** 64 - 1, 0, 1) == 0


def test_sized_family() -> None:
    assert sized_family(TreeFamilySpec(TreeKind.COMPLETE, arity=2), 4, 9).height == 4
    assert sized_family(TreeFamilySpec(TreeKind.LOWERBOUND), 17, 9).k == 3
    assert sized_family(TreeFamilySpec(TreeKind.LOWERBOUND), 2, 9).k == 1
    family = sized_family(TreeFamilySpec(TreeKind.RANDOM, max_arity=3), 50, 9)
    assert (family.n, family.seed, family.max_arity) == (50, 9, 3)


def _run(kind: LayoutKind, family: TreeFamilySpec, sizes: tuple, trials: int = 2) -> BenchRun:
    return BenchRun(family=family, sizes=sizes, trials=trials, kind=kind)


def test_run_bench() -> None:
    run = _run(
        LayoutKind.of(LayoutAlgorithm.QUADRATIC),
        TreeFamilySpec(TreeKind.PATH, seed=4),
        (3, 5),
    )
    rows = run_bench(run, timing=False, workers=1).rows
    assert [(row.n, row.seed) for row in rows] == [
        (3, cell_seed(4, 3, 0)),
        (3, cell_seed(4, 3, 1)),
        (5, cell_seed(4, 5, 0)),
        (5, cell_seed(4, 5, 1)),
    ]
    assert all(row.ms == 0 for row in rows)
    assert [(row.width, row.height, row.area, row.bends) for row in rows[2:]] == [(1, 5, 5, 0)] * 2


def test_run_bench_csv_is_deterministic() -> None:
    run = _run(
        LayoutKind.of(LayoutAlgorithm.UPWARD, LayoutVariant.III_LEFT),
        TreeFamilySpec(TreeKind.RANDOM, max_arity=4, seed=7),
        parse_sizes("8:64:x2"),
        trials=3,
    )
    outputs = []
    for _ in range(2):
        stream = io.StringIO()
        write_csv(run_bench(run, timing=False, workers=1).rows, stream)
        outputs.append(stream.getvalue())
    assert outputs[0] == outputs[1]
    lines = outputs[0].splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 4 * 3
    assert lines[1].startswith("8,")


def test_run_bench_records_metrics() -> None:
    run = _run(LayoutKind.of(LayoutAlgorithm.ONE_BEND), TreeFamilySpec(TreeKind.STAR), (4,), 1)
    rows = run_bench(run, workers=1).rows
    assert rows[0].bends == 1
    assert rows[0].ms >= 0
    assert b'glr_layout_seconds_count{algo="onebend",variant="default"}' in exposition()


def test_run_bench_validation_failure(monkeypatch) -> None:
    monkeypatch.setattr(bench, "expected_conditions", lambda kind: frozenset((Condition.P6,)))
    run = _run(LayoutKind.of(LayoutAlgorithm.ONE_BEND), TreeFamilySpec(TreeKind.STAR), (2, 4), 1)
    with raises(BenchValidationError) as error:
        run_bench(run, timing=False, workers=1)
    assert error.value.n == 4
    assert error.value.seed == cell_seed(0, 4, 0)
    assert "failed=p6" in str(error.value)
    assert (
        b'glr_validation_failures_total{algo="onebend",condition="p6",variant="default"}'
        in exposition()
    )


def test_run_bench_empty() -> None:
    run = _run(LayoutKind.of(LayoutAlgorithm.QUADRATIC), TreeFamilySpec(TreeKind.PATH), (3,), 0)
    with raises(ExperimentError):
        run_bench(run)


@mark.slow
def test_run_bench_workers() -> None:
    run = _run(
        LayoutKind.of(LayoutAlgorithm.NONUPWARD, LayoutVariant.II_RIGHT),
        TreeFamilySpec(TreeKind.HEAVYMIDDLE, arity=4, seed=3),
        (20, 40, 80),
        trials=2,
    )
    assert run_bench(run, timing=False, workers=2).rows == run_bench(
        run, timing=False, workers=1
    ).rows
