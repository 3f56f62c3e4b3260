"""Exception hierarchy used across the library.

``ValidationError`` subclasses signal domain-rule violations (CLI exit code 2),
``InputFormatError`` signals malformed input files (CLI exit code 1).
"""


class SilboundError(Exception):
    """Base class for all library errors."""


class ValidationError(SilboundError):
    """An input violates a documented domain rule."""


class InputFormatError(SilboundError):
    """An input file could not be parsed."""


class NonFiniteInput(ValidationError):
    def __init__(self, row, col):
        self.row, self.col = row, col
        super().__init__(f"point ({row},{col}) is not finite")


class NonFiniteEntry(ValidationError):
    def __init__(self, i, j, value):
        self.i, self.j = i, j
        super().__init__(f"matrix entry ({i},{j}) = {value!r} is not finite")


class NotSquare(ValidationError):
    def __init__(self, shape):
        self.shape = shape
        super().__init__(f"expected a square 2-D matrix, got shape {shape}")


class NegativeEntry(ValidationError):
    def __init__(self, i, j, value):
        self.i, self.j = i, j
        super().__init__(f"entry ({i},{j}) = {value} violates nonnegativity")


class NonzeroDiagonal(ValidationError):
    def __init__(self, i, value):
        self.i = i
        super().__init__(f"diagonal entry ({i},{i}) = {value} violates the zero-diagonal rule")


class Asymmetric(ValidationError):
    def __init__(self, i, j, a, b):
        self.i, self.j = i, j
        super().__init__(f"entries ({i},{j}) = {a} and ({j},{i}) = {b} violate symmetry")


class AllZeroRow(ValidationError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"row {i} is entirely zero (point has no positive dissimilarity)")


class ZeroVector(ValidationError):
    def __init__(self, row, metric):
        self.row, self.metric = row, metric
        super().__init__(f"point {row} is degenerate for the {metric} metric")


class NonBinaryInput(ValidationError):
    def __init__(self, row, col, value):
        self.row, self.col = row, col
        super().__init__(f"jaccard requires binary data; point ({row},{col}) = {value}")


class TooFewPoints(ValidationError):
    def __init__(self, n, minimum):
        self.n, self.minimum = n, minimum
        super().__init__(f"need at least {minimum} points, got {n}")


class LabelOutOfRange(ValidationError):
    def __init__(self, index, label, k):
        self.index, self.label, self.k = index, label, k
        super().__init__(f"label {label} at position {index} is outside 1..{k}")


class EmptyCluster(ValidationError):
    def __init__(self, cluster):
        self.cluster = cluster
        super().__init__(f"cluster {cluster} is empty")


class SizeMismatch(ValidationError):
    def __init__(self, expected, got):
        self.expected, self.got = expected, got
        super().__init__(f"clustering covers {got} points, matrix has {expected}")


class LambdaOutOfRange(ValidationError):
    def __init__(self, lam, n):
        self.lam, self.n = lam, n
        super().__init__(f"window size {lam} is outside 1..{n - 1}")


class KappaOutOfRange(ValidationError):
    def __init__(self, kappa, n):
        self.kappa, self.n = kappa, n
        super().__init__(f"minimum cluster size {kappa} is outside 1..{n // 2}")


class TooLarge(ValidationError):
    def __init__(self, n, cap):
        self.n, self.cap = n, cap
        super().__init__(f"exhaustive enumeration is capped at n <= {cap}, got n = {n}")


class KTooLarge(ValidationError):
    def __init__(self, k, n):
        self.k, self.n = k, n
        super().__init__(f"cannot form {k} clusters from {n} points")


class KOutOfRange(ValidationError):
    def __init__(self, k, lo, hi):
        self.k = k
        super().__init__(f"cluster count {k} is outside {lo}..{hi}")


class NonPositiveUB(ValidationError):
    def __init__(self, ub):
        self.ub = ub
        super().__init__(f"relative error is undefined for upper bound {ub} <= 0")


class AlgorithmFailure(SilboundError):
    """A clustering algorithm failed while evaluating a candidate K."""

    def __init__(self, k, cause):
        self.k, self.cause = k, cause
        super().__init__(f"algorithm failed at K={k}: {cause}")
