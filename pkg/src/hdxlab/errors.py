"""Exception types shared across the package."""


class HdxError(Exception):
    """Base class for all package errors."""


class InputError(HdxError, ValueError):
    """Malformed input: bad ids, negative weights, out-of-range parameters."""


class IsolatedVertexError(InputError):
    """A vertex has zero out-weight, so the walk is undefined there."""


class ComplexSpectrumError(HdxError):
    """Eigenvalues with non-negligible imaginary part where real ones were expected."""


class ReversibilityError(HdxError):
    """A symmetric eigensolve was requested for a non-reversible chain."""


class ReducibilityError(HdxError):
    """The chain is reducible and has no unique stationary distribution."""


class BalanceError(HdxError):
    """Face weights do not satisfy the balance condition."""


class GenerationError(HdxError):
    """Random generation exhausted its retry budget."""


class NonMixingError(HdxError):
    """The chain has no positive spectral gap, so no mixing bound exists."""
