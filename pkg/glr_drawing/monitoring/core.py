from enum import Enum

from prometheus_client import Counter, Histogram, generate_latest
from prometheus_client.registry import CollectorRegistry

NAMESPACE = "glr"

REGISTRY = CollectorRegistry()


class Subsystem(Enum):
    """
    Enumeration of possible monitoring subsystems.
    """

    LAYOUT = "layout"
    VALIDATION = "validation"


LAYOUT_SECONDS = Histogram(
    namespace=NAMESPACE,
    subsystem=Subsystem.LAYOUT.value,
    name="seconds",
    documentation="Time spent drawing a tree.",
    labelnames=("algo", "variant"),
    buckets=(0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 60.0),
    registry=REGISTRY,
)

VALIDATION_FAILURES = Counter(
    namespace=NAMESPACE,
    subsystem=Subsystem.VALIDATION.value,
    name="failures",
    documentation="Number of failed conditions on drawings expected to satisfy them.",
    labelnames=("algo", "variant", "condition"),
    registry=REGISTRY,
)


def exposition() -> bytes:
    """
    :return: the current value of every metric, in the Prometheus text format.
    """
    return generate_latest(REGISTRY)
