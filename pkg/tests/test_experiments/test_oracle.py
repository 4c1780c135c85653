from pytest import mark, raises

from glr_drawing.core.exceptions import ExperimentError, OracleCounterexample
from glr_drawing.experiments import oracle
from glr_drawing.experiments.oracle import MAX_ORACLE_N, oracle_small_trees
from glr_drawing.models.enums import Condition


def test_single_tree() -> None:
    report = oracle_small_trees(1)
    assert report.counts == {1: 1}
    assert report.total == 1


def test_catalan_counts() -> None:
    report = oracle_small_trees(6)
    assert report.counts == {1: 1, 2: 1, 3: 2, 4: 5, 5: 14, 6: 42}
    assert report.total == 65


@mark.parametrize("max_n", (0, MAX_ORACLE_N + 1))
def test_out_of_range(max_n: int) -> None:
    with raises(ExperimentError):
        oracle_small_trees(max_n)


def test_counterexample(monkeypatch) -> None:
    monkeypatch.setattr(oracle, "expected_conditions", lambda kind: frozenset((Condition.P6,)))
    with raises(OracleCounterexample) as error:
        oracle_small_trees(5)
    assert error.value.tree_text.startswith("(")
    assert "onebend/default failed p6" in str(error.value)


@mark.slow
def test_up_to_nine() -> None:
    assert oracle_small_trees(9).counts[9] == 1430
