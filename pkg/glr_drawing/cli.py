"""
Command line entry point: gen, path, layout, validate, bench, oracle and stretch subcommands.
"-" stands for stdin or stdout wherever a file is expected.
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Type

from marshmallow import ValidationError

from glr_drawing.core import config
from glr_drawing.core.exceptions import (
    BenchValidationError,
    GlrException,
    PathClaimViolation,
    UsageError,
    ValidationFailed,
)
from glr_drawing.experiments.bench import parse_sizes, run_bench, write_csv
from glr_drawing.experiments.fit import fit_exponent
from glr_drawing.experiments.oracle import MAX_ORACLE_N, oracle_small_trees
from glr_drawing.helpers.logging import silence
from glr_drawing.helpers.serialization import drawing_from_json, drawing_to_json
from glr_drawing.layouts.engine import layout
from glr_drawing.layouts.stretch import stretch_to_straightline
from glr_drawing.layouts.svg import to_svg
from glr_drawing.models.dataclasses import (
    BenchRun,
    DrawingDocument,
    LayoutKind,
    PathParams,
    TreeFamilySpec,
)
from glr_drawing.models.enums import EnvarEnum, LayoutAlgorithm, LayoutVariant, Metric, TreeKind
from glr_drawing.models.marshmallow.schemas import TreeFamilySpecSchema
from glr_drawing.models.tree import OrderedTree, parse_tree, serialize_tree
from glr_drawing.monitoring.core import exposition
from glr_drawing.paths.selector import select_path
from glr_drawing.trees.generators import generate
from glr_drawing.validation.report import ALL_CONDITIONS, parse_conditions, validate

_LOGGER = logging.getLogger(__name__)

STDIO = "-"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_FAILURES = (ValidationFailed, BenchValidationError, PathClaimViolation)


def _enum_type(enum: Type[EnvarEnum]) -> Callable[[str], Any]:
    def parse(value: str) -> Any:
        try:
            return enum.from_env_var(value)
        except GlrException as error:
            raise argparse.ArgumentTypeError(str(error)) from error

    return parse


def _read(path: str) -> str:
    if path == STDIO:
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as stream:
            return stream.read()
    except OSError as error:
        raise UsageError(f"Cannot read {path}: {error.strerror}.") from error


def _write(path: str, text: str) -> None:
    if path == STDIO:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as stream:
            stream.write(text)
    except OSError as error:
        raise UsageError(f"Cannot write {path}: {error.strerror}.") from error


def _dumps(document: Any) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"


def _seed(args: argparse.Namespace) -> int:
    return config.GLR_SEED if args.seed is None else args.seed


def _params(args: argparse.Namespace) -> PathParams:
    return PathParams(
        p=config.PATH_P if args.p is None else args.p,
        delta=config.PATH_DELTA if args.delta is None else args.delta,
    )


def _kind(args: argparse.Namespace) -> LayoutKind:
    return LayoutKind.of(args.algo, args.variant)


def _family(args: argparse.Namespace, kind: TreeKind) -> TreeFamilySpec:
    raw: Dict[str, Any] = dict(kind=kind.value, seed=_seed(args))
    for name in ("n", "arity", "height", "k", "max_arity"):
        value = getattr(args, name, None)
        if value is not None:
            raw[name] = value
    try:
        return TreeFamilySpecSchema().load(raw)
    except ValidationError as error:
        raise UsageError(json.dumps(error.messages, sort_keys=True)) from error


def _document(args: argparse.Namespace) -> DrawingDocument:
    document = drawing_from_json(_read(args.input))
    tree_path: Optional[str] = getattr(args, "tree", None)
    if tree_path is not None:
        return DrawingDocument(drawing=document.drawing, tree=parse_tree(_read(tree_path)))
    return document


def _tree_of(document: DrawingDocument) -> OrderedTree:
    if document.tree is None:
        raise UsageError("The drawing embeds no tree: pass --tree.")
    return document.tree


def _gen(args: argparse.Namespace) -> int:
    tree = generate(_family(args, args.kind))
    _write(args.out, serialize_tree(tree) + "\n")
    return EXIT_OK


def _path(args: argparse.Namespace) -> int:
    tree = parse_tree(_read(args.input))
    path = select_path(tree, _params(args))
    if args.json:
        _write(
            STDIO,
            _dumps(
                dict(
                    nodes=list(path.nodes),
                    max_left=path.max_left,
                    max_right=path.max_right,
                    slack=path.slack,
                )
            ),
        )
    else:
        _write(
            STDIO,
            f"path: {' '.join(map(str, path.nodes))}\n"
            f"max_left: {path.max_left}\nmax_right: {path.max_right}\nslack: {path.slack!r}\n",
        )
    return EXIT_OK


def _layout(args: argparse.Namespace) -> int:
    tree = parse_tree(_read(args.input))
    drawing = layout(tree, _kind(args), _params(args))
    _write(args.out, drawing_to_json(drawing, tree if args.embed_tree else None) + "\n")
    if args.svg:
        _write(args.svg, to_svg(drawing) + "\n")
    return EXIT_OK


def _validate(args: argparse.Namespace) -> int:
    document = _document(args)
    conditions = parse_conditions(args.conditions) if args.conditions else list(ALL_CONDITIONS)
    report = validate(_tree_of(document), document.drawing, conditions)
    if args.json:
        _write(
            STDIO,
            _dumps(
                dict(
                    passed=report.passed,
                    results={
                        condition.value: dict(passed=result.passed, witness=result.witness)
                        for condition, result in report.results.items()
                    },
                )
            ),
        )
    else:
        lines = [
            f"{condition.value}: pass"
            if result.passed
            else f"{condition.value}: FAIL {json.dumps(result.witness, sort_keys=True)}"
            for condition, result in report.results.items()
        ]
        _write(STDIO, "\n".join(lines) + "\n")
    if not report.passed:
        failed = ",".join(condition.value for condition in report.failed)
        raise ValidationFailed(f"Failed: {failed}.")
    return EXIT_OK


def _bench(args: argparse.Namespace) -> int:
    metrics: List[Metric] = args.fit or []
    if metrics and args.csv == STDIO:
        raise UsageError("--fit prints to stdout: write the rows elsewhere with --csv.")
    run = run_bench(
        BenchRun(
            family=_family(args, args.family),
            sizes=parse_sizes(args.sizes),
            trials=args.trials,
            kind=_kind(args),
        ),
        params=_params(args),
        timing=not args.no_timing,
        workers=args.workers,
    )
    if args.csv == STDIO:
        write_csv(run.rows, sys.stdout)
    else:
        try:
            with open(args.csv, "w", encoding="utf-8", newline="") as stream:
                write_csv(run.rows, stream)
        except OSError as error:
            raise UsageError(f"Cannot write {args.csv}: {error.strerror}.") from error
    for metric in metrics:
        fit = fit_exponent(run.rows, metric)
        _write(
            STDIO,
            f"{metric.value}: slope={fit.slope:.4f} intercept={fit.intercept:.4f} "
            f"r2={fit.r_squared:.4f}{' degenerate' if fit.degenerate else ''}\n",
        )
    if args.metrics_out:
        _write(args.metrics_out, exposition().decode("utf-8"))
    return EXIT_OK


def _oracle(args: argparse.Namespace) -> int:
    report = oracle_small_trees(args.max_n, _params(args))
    if args.json:
        _write(
            STDIO,
            _dumps(
                dict(max_n=report.max_n, counts=report.counts, total=report.total, passed=True)
            ),
        )
    else:
        lines = [f"n={n} trees={count}" for n, count in sorted(report.counts.items())]
        _write(STDIO, "\n".join([*lines, f"total={report.total}"]) + "\n")
    return EXIT_OK


def _stretch(args: argparse.Namespace) -> int:
    document = _document(args)
    drawing = stretch_to_straightline(document.drawing)
    _write(args.out, drawing_to_json(drawing, document.tree) + "\n")
    return EXIT_OK


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"Invalid integer '{value}'.") from error
    if number < 1:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {number}.")
    return number


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="Seed of every random choice (env: GLR_SEED).")
    common.add_argument("--p", type=float, help="Exponent of the path invariant.")
    common.add_argument("--delta", type=float, help="Slack of the path invariant.")
    common.add_argument("--quiet", action="store_true", help="Only log warnings and errors.")
    common.add_argument("--json", action="store_true", help="Machine readable output.")
    return common


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=_positive, help="Number of nodes.")
    parser.add_argument("--arity", type=_positive, help="Arity (complete, heavymiddle).")
    parser.add_argument("--height", type=int, help="Height in edges (complete).")
    parser.add_argument("--k", type=_positive, help="Size parameter (lowerbound).")
    parser.add_argument("--max-arity", type=_positive, help="Maximum arity (random).")


def _add_kind_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--algo",
        type=_enum_type(LayoutAlgorithm),
        required=True,
        help=f"Layout engine ({', '.join(a.value for a in LayoutAlgorithm)}).",
    )
    parser.add_argument(
        "--variant",
        type=_enum_type(LayoutVariant),
        help=f"Drawing type ({', '.join(v.value for v in LayoutVariant)}).",
    )


def build_parser() -> argparse.ArgumentParser:
    """
    :return: the command line parser.
    """
    parser = argparse.ArgumentParser(
        prog="glr", description="Draw ordered trees on the grid with small width."
    )
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", parents=[common], help="Generate a tree.")
    gen.add_argument("--kind", type=_enum_type(TreeKind), required=True, help="Tree family.")
    _add_family_arguments(gen)
    gen.add_argument("--out", default=STDIO, help="Tree file.")
    gen.set_defaults(handler=_gen)

    path = subparsers.add_parser("path", parents=[common], help="Select the root path.")
    path.add_argument("--in", dest="input", default=STDIO, help="Tree file.")
    path.set_defaults(handler=_path)

    draw = subparsers.add_parser("layout", parents=[common], help="Draw a tree.")
    _add_kind_arguments(draw)
    draw.add_argument("--in", dest="input", default=STDIO, help="Tree file.")
    draw.add_argument("--out", default=STDIO, help="Drawing JSON file.")
    draw.add_argument("--svg", help="Also write the drawing as SVG.")
    draw.add_argument("--embed-tree", action="store_true", help="Store the tree in the JSON.")
    draw.set_defaults(handler=_layout)

    check = subparsers.add_parser("validate", parents=[common], help="Validate a drawing.")
    check.add_argument("--in", dest="input", default=STDIO, help="Drawing JSON file.")
    check.add_argument("--tree", help="Tree file, unless embedded in the drawing.")
    check.add_argument(
        "--conditions",
        help=f"Comma separated conditions ({','.join(c.value for c in ALL_CONDITIONS)}).",
    )
    check.set_defaults(handler=_validate)

    bench = subparsers.add_parser("bench", parents=[common], help="Benchmark an engine.")
    bench.add_argument("--family", type=_enum_type(TreeKind), required=True, help="Tree family.")
    _add_family_arguments(bench)
    bench.add_argument("--sizes", required=True, help="Sizes, e.g., 10:5000:x1.5.")
    bench.add_argument("--trials", type=_positive, default=5, help="Trees per size.")
    _add_kind_arguments(bench)
    bench.add_argument("--csv", default=STDIO, help="Rows CSV file.")
    bench.add_argument("--no-timing", action="store_true", help="Write 0 as layout time.")
    bench.add_argument("--metrics-out", help="Write the Prometheus metrics to this file.")
    bench.add_argument("--workers", type=_positive, help="Number of worker processes.")
    bench.add_argument(
        "--fit",
        type=_enum_type(Metric),
        action="append",
        help="Fit the exponent of a metric (width, height, area); repeatable.",
    )
    bench.set_defaults(handler=_bench)

    oracle = subparsers.add_parser("oracle", parents=[common], help="Check all small trees.")
    oracle.add_argument(
        "--max-n", type=_positive, default=8, help=f"Largest size, at most {MAX_ORACLE_N}."
    )
    oracle.set_defaults(handler=_oracle)

    stretch = subparsers.add_parser(
        "stretch", parents=[common], help="Straighten a one bend drawing."
    )
    stretch.add_argument("--in", dest="input", default=STDIO, help="Drawing JSON file.")
    stretch.add_argument("--tree", help="Tree file to embed in the output.")
    stretch.add_argument("--out", default=STDIO, help="Drawing JSON file.")
    stretch.set_defaults(handler=_stretch)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run a subcommand.

    :param argv: the arguments, defaulting to the process ones.
    :return: 0 on success, 1 on a failed check, 2 on a usage or input error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_USAGE
    silence(args.quiet)
    try:
        return args.handler(args)
    except _FAILURES as error:
        _LOGGER.warning("Check failed.", extra=dict(command=args.command, code=error.error_code))
        print(f"glr: {error}", file=sys.stderr)
        return EXIT_FAILURE
    except UsageError as error:
        parser.print_usage(sys.stderr)
        print(f"glr: {error}", file=sys.stderr)
        return EXIT_USAGE
    except GlrException as error:
        _LOGGER.warning("Command failed.", extra=dict(command=args.command, code=error.error_code))
        print(f"glr: {error}", file=sys.stderr)
        return EXIT_USAGE
