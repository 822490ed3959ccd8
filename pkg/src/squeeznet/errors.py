"""Exception and warning types shared across the package."""


class SqueezenetError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(SqueezenetError, ValueError):
    """Operands have incompatible or invalid dimensions."""


class DomainError(SqueezenetError, ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class SingularMatrixError(SqueezenetError):
    """A matrix that must be inverted is singular or numerically so.

    Carries the matrix dimensions and a condition-number estimate.
    """

    def __init__(self, rows: int, cols: int, cond_estimate: float):
        self.rows = rows
        self.cols = cols
        self.cond_estimate = cond_estimate
        super().__init__(
            f"singular {rows}x{cols} matrix (condition estimate {cond_estimate:.3e})"
        )


class AlgebraicLoopError(SqueezenetError):
    """The feedback loop equation 1 - nu*s0 = 0 (or its matrix analogue)
    has no solution; the instantaneous loop is ill posed."""


class UnsupportedTopologyError(SqueezenetError):
    """The requested network reduction is outside the supported class
    (e.g. the loop port scatters into other ports)."""


class PoleError(SqueezenetError):
    """Transfer-function evaluation was requested at (or numerically at) a
    pole.  Carries the evaluation point and the nearest drift eigenvalue."""

    def __init__(self, s: complex, nearest_eigenvalue: complex):
        self.s = s
        self.nearest_eigenvalue = nearest_eigenvalue
        super().__init__(
            f"transfer function evaluated at s={s}, too close to the pole at "
            f"{nearest_eigenvalue}"
        )


class UnstableSystemError(SqueezenetError):
    """An operation that requires Hurwitz stability was applied to a system
    whose spectral abscissa is not negative."""


class ThresholdDivergenceError(SqueezenetError):
    """A closed-form quantity diverges at the requested parameters
    (squeezing threshold reached)."""


class NearThresholdWarning(UserWarning):
    """Parameters are within 1e-9 of the squeezing threshold; returned
    values are physically divergent near omega = 0."""
