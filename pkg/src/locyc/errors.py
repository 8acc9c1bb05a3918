"""Exception hierarchy shared by every locyc module.

Two families matter to callers: InputError (and subclasses) means the
caller handed us something malformed, while HypothesisFailure means the
input was well-formed but the mathematical hypothesis an operation relies
on does not hold for it.  The CLI maps them to exit codes 2 and 1.
"""


class LocycError(Exception):
    """Base class for all package errors."""


class InputError(LocycError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class SizeLimitError(InputError):
    """An exhaustive operation was asked to run above its hard size cap."""


class ScalingError(InputError):
    """A rational parameter cannot be scaled to integers within the cap."""


class UnsupportedOrderError(InputError):
    """Requested a finite-plane order outside the supported (prime) set."""


class HypothesisFailure(LocycError):
    """The input violates the hypothesis the operation needs (exit code 1)."""


class ExpansionViolated(HypothesisFailure):
    """No large component: carries a witness set with empty neighborhood."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = list(witness)


class DensityHypothesisError(HypothesisFailure):
    """The dense-core / local-density hypothesis fails for this input."""


class StrategyFault(LocycError):
    """A game strategy returned an illegal move."""

    def __init__(self, actor, round_no, message):
        super().__init__(f"illegal move by {actor} in round {round_no}: {message}")
        self.actor = actor
        self.round_no = round_no
