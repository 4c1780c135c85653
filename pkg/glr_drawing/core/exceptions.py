from typing import Any, Dict, Optional


class GlrException(Exception):
    """
    Base exception for any exception thrown within this project.
    """

    error_message = "An unknown error occurred."
    error_code = 1000

    def __init__(self, detail: Optional[str] = None) -> None:
        """
        :param detail: the specific detail of this occurrence, appended to the error message.
        """
        self.detail = detail
        super().__init__(f"{self.error_message} {detail}" if detail else self.error_message)


# 1000-1099: tree model


class TreeParseError(GlrException):
    """
    Raised when a tree text does not match the nested parentheses grammar.
    """

    error_message = "Invalid tree text."
    error_code = 1001

    def __init__(self, detail: str, offset: int) -> None:
        """
        :param detail: what went wrong.
        :param offset: the byte offset where the problem was detected.
        """
        self.offset = offset
        super().__init__(f"{detail} (offset {offset}).")


class TreeFamilyError(GlrException):
    """
    Raised when the parameters of a tree family are inconsistent with its kind.
    """

    error_message = "Invalid tree family parameters."
    error_code = 1002


class TreeStructureError(GlrException):
    """
    Raised when an arena of nodes does not describe a single rooted tree.
    """

    error_message = "Invalid tree structure."
    error_code = 1003


# 1100-1199: path selection


class PathParamsError(GlrException):
    """
    Raised when the exponent or the slack of the path invariant are out of range.
    """

    error_message = "Invalid path parameters."
    error_code = 1100


class FeasibilityIndexError(GlrException):
    """
    Raised when the feasibility of a child index outside of the node arity is requested.
    """

    error_message = "Child index out of range."
    error_code = 1101


class InvalidPathError(GlrException):
    """
    Raised when a node sequence is not a root-to-leaf path of the given tree.
    """

    error_message = "Not a root-to-leaf path."
    error_code = 1102


class PathClaimViolation(GlrException):
    """
    Raised when no child subtree is feasible while extending the path.
    This is provably unreachable for the default parameters, so hitting it means either a bug or
    parameters outside of the proven range.
    """

    error_message = "Claim violated: no feasible subtree."
    error_code = 1103

    def __init__(self, state: Dict[str, Any]) -> None:
        """
        :param state: the full dump of the path state at the failing step.
        """
        self.state = state
        super().__init__(str(state))


# 1200-1299: layout


class LayoutInvariantError(GlrException):
    """
    Raised when a layout engine breaks one of its own construction invariants.
    """

    error_message = "Layout invariant broken."
    error_code = 1200


class LayoutKindError(GlrException):
    """
    Raised when an algorithm is combined with a variant it does not support.
    """

    error_message = "Invalid layout kind."
    error_code = 1201


class StretchError(GlrException):
    """
    Raised when a drawing cannot be stretched into a straight-line one.
    """

    error_message = "Drawing cannot be stretched."
    error_code = 1202


class LayoutDepthError(GlrException):
    """
    Raised when a tree is too deep for the configured recursion limit.
    """

    error_message = "Tree too deep to draw."
    error_code = 1203


# 1300-1399: validation


class DrawingError(GlrException):
    """
    Raised when a drawing does not match its tree, or is geometrically malformed.
    """

    error_message = "Invalid drawing."
    error_code = 1300


class CertificateError(GlrException):
    """
    Raised when the spine certificate of a drawing does not cover every subtree root.
    """

    error_message = "Incomplete spine certificate."
    error_code = 1301


class UnknownConditionError(GlrException):
    """
    Raised when an unknown drawing condition is requested.
    """

    error_message = "Unknown condition."
    error_code = 1302


class ValidationFailed(GlrException):
    """
    Raised when a drawing fails at least one of the requested conditions.
    """

    error_message = "Drawing validation failed."
    error_code = 1303


# 1400-1499: experiments


class ExperimentError(GlrException):
    """
    Raised when an experiment is configured inconsistently.
    """

    error_message = "Invalid experiment."
    error_code = 1400


class BenchValidationError(GlrException):
    """
    Raised when a benchmark drawing fails its engine's validation matrix.
    """

    error_message = "Benchmark drawing failed validation."
    error_code = 1401

    def __init__(self, n: int, seed: int, failed: str) -> None:
        """
        :param n: the size of the offending tree.
        :param seed: the seed that generated the offending tree.
        :param failed: the failed conditions, comma separated.
        """
        self.n = n
        self.seed = seed
        super().__init__(f"n={n} seed={seed} failed={failed}")


class OracleCounterexample(GlrException):
    """
    Raised when the exhaustive oracle finds a tree breaking any checked property.
    """

    error_message = "Oracle counterexample found."
    error_code = 1402

    def __init__(self, tree_text: str, reason: str) -> None:
        """
        :param tree_text: the serialized offending tree.
        :param reason: which property failed.
        """
        self.tree_text = tree_text
        super().__init__(f"{reason}: {tree_text}")


# 1500-1599: cli


class UsageError(GlrException):
    """
    Raised when command line flags are combined inconsistently.
    """

    error_message = "Invalid usage."
    error_code = 1500
