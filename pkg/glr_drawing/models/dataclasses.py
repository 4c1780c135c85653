from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from glr_drawing.core.exceptions import LayoutKindError, PathParamsError
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.enums import Condition, LayoutAlgorithm, LayoutVariant, TreeKind
from glr_drawing.models.tree import OrderedTree


@dataclass(frozen=True)
class PathParams:
    """
    Exponent and slack of the path selection invariant.
    """

    p: float = 0.48
    delta: float = 0.0004

    def __post_init__(self) -> None:
        if not 0 < self.p < 1:
            raise PathParamsError(f"p must lie in (0, 1), got {self.p}.")
        if not 0 < self.delta < 1:
            raise PathParamsError(f"delta must lie in (0, 1), got {self.delta}.")


@dataclass
class PathState:
    """
    Mutable state of the path extension loop.
    The maxima exclude the subtrees hanging at the current endpoint.
    """

    path: List[int]
    alpha: int = 0
    beta: int = 0

    def dump(self) -> Dict[str, Any]:
        return dict(path=list(self.path), alpha=self.alpha, beta=self.beta)


@dataclass(frozen=True)
class RootPath:
    """
    Root-to-leaf path with the largest left and right subtrees hanging off it.
    """

    nodes: Tuple[int, ...]
    max_left: int
    max_right: int
    slack: float


@dataclass(frozen=True)
class Metrics:
    """
    Size of the bounding box of a drawing, nodes and bends included, and its bend count.
    """

    width: int
    height: int
    bends: int

    @property
    def area(self) -> int:
        return self.width * self.height


_VARIANTS = {
    LayoutAlgorithm.QUADRATIC: (LayoutVariant.DEFAULT,),
    LayoutAlgorithm.ONE_BEND: (LayoutVariant.DEFAULT,),
    LayoutAlgorithm.NONUPWARD: (
        LayoutVariant.TYPE_I,
        LayoutVariant.II_LEFT,
        LayoutVariant.II_RIGHT,
    ),
    LayoutAlgorithm.UPWARD: (
        LayoutVariant.TYPE_I,
        LayoutVariant.III_LEFT,
        LayoutVariant.III_RIGHT,
    ),
}


@dataclass(frozen=True)
class LayoutKind:
    """
    A layout engine together with the type of drawing requested from it.
    """

    algo: LayoutAlgorithm
    variant: LayoutVariant

    def __post_init__(self) -> None:
        if self.variant not in _VARIANTS[self.algo]:
            allowed = ", ".join(variant.value for variant in _VARIANTS[self.algo])
            raise LayoutKindError(
                f"Variant {self.variant.value} is not available for {self.algo.value} "
                f"(allowed: {allowed})."
            )

    @classmethod
    def of(cls, algo: LayoutAlgorithm, variant: Optional[LayoutVariant] = None) -> LayoutKind:
        """
        :param algo: the layout engine.
        :param variant: the drawing type, if None the first one available for the engine.
        :return: the layout kind.
        """
        return cls(algo=algo, variant=variant or _VARIANTS[algo][0])

    @classmethod
    def every(cls) -> List[LayoutKind]:
        """
        :return: every engine with every drawing type it provides.
        """
        return [cls(algo, variant) for algo, variants in _VARIANTS.items() for variant in variants]

    def __str__(self) -> str:
        return f"{self.algo.value}/{self.variant.value}"


@dataclass(frozen=True)
class TreeFamilySpec:  # pylint: disable=too-many-instance-attributes
    """
    Parameters of a tree family. Which fields are used depends on the kind.
    """

    kind: TreeKind
    n: Optional[int] = None
    arity: Optional[int] = None
    height: Optional[int] = None
    k: Optional[int] = None
    max_arity: Optional[int] = None
    seed: int = 0


@dataclass(frozen=True)
class ConditionResult:
    """
    Outcome of a single condition check; a failure always carries its witness.
    """

    passed: bool
    witness: Optional[Dict[str, Any]] = None


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of every requested condition check.
    """

    results: Dict[Condition, ConditionResult]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results.values())

    @property
    def failed(self) -> List[Condition]:
        return [condition for condition, result in self.results.items() if not result.passed]


@dataclass(frozen=True)
class BenchRow:
    n: int
    seed: int
    width: int
    height: int
    area: int
    bends: int
    ms: float


@dataclass(frozen=True)
class BenchRun:
    """
    A benchmark over a tree family: the template's size is overridden by each entry of sizes.
    """

    family: TreeFamilySpec
    sizes: Tuple[int, ...]
    trials: int
    kind: LayoutKind
    rows: Tuple[BenchRow, ...] = field(default=())


@dataclass(frozen=True)
class FitResult:
    """
    Least-squares line through (log n, log metric).
    """

    slope: float
    intercept: float
    r_squared: float
    degenerate: bool = False


@dataclass(frozen=True)
class OracleReport:
    """
    Outcome of the exhaustive check over all the ordered trees up to a size.
    """

    max_n: int
    counts: Dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class DrawingDocument:
    """
    A drawing as exchanged in JSON, optionally carrying the tree it draws.
    """

    drawing: GridDrawing
    tree: Optional[OrderedTree] = None
