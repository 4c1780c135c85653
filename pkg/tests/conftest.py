# noinspection PyUnresolvedReferences
from tests.fixtures.trees import *  # noqa isort:skip
