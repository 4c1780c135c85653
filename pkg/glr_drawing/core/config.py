from decouple import config

from glr_drawing.helpers.logging import initialize_logging
from glr_drawing.models.enums import LogLevel

LOG_LEVEL: LogLevel = config("LOGLEVEL", cast=LogLevel.from_env_var, default=LogLevel.INFO)
LOG_JSON_INDENT: int = config("LOG_JSON_INDENT", cast=int, default=0)
initialize_logging(LOG_LEVEL, LOG_JSON_INDENT)

# Fallback for the --seed flag of the command line.
GLR_SEED: int = config("GLR_SEED", cast=int, default=0)

PATH_P: float = config("PATH_P", cast=float, default=0.48)
PATH_DELTA: float = config("PATH_DELTA", cast=float, default=0.0004)
FLOAT_RELATIVE_EPSILON: float = config("FLOAT_RELATIVE_EPSILON", cast=float, default=1e-12)

LAYOUT_RECURSION_LIMIT: int = config("LAYOUT_RECURSION_LIMIT", cast=int, default=100_000)
# Stack of the layout worker thread, in MiB; large enough for LAYOUT_RECURSION_LIMIT frames.
LAYOUT_STACK_MIB: int = config("LAYOUT_STACK_MIB", cast=int, default=512)
STRETCH_MAX_EXTRA_ROWS: int = config("STRETCH_MAX_EXTRA_ROWS", cast=int, default=10_000_000)

BENCH_WORKERS: int = config("BENCH_WORKERS", cast=int, default=1)

SVG_SCALE: int = config("SVG_SCALE", cast=int, default=20)
