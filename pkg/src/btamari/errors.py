"""Exception types shared across the package."""

from __future__ import annotations


class NotAPermutationError(ValueError):
    """Raised when a right part does not describe a sign-symmetric permutation."""


class CompositionError(ValueError):
    """Raised on malformed compositions or out-of-range region queries."""


class CapExceededError(RuntimeError):
    """An enumeration would produce more elements than the configured cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} elements, cap is {cap}")
        self.required = required
        self.cap = cap


class NotAPartialOrderError(ValueError):
    """The supplied comparison is not a partial order; carries a witness."""

    def __init__(self, reason: str, witness: tuple):
        super().__init__(f"{reason}, witness {witness}")
        self.reason = reason
        self.witness = witness


class NotALatticeError(ValueError):
    """A poset misses a bound; carries the offending pair."""

    def __init__(self, pair: tuple[int, int], reason: str):
        super().__init__(f"{reason} for element pair {pair}")
        self.pair = pair
        self.reason = reason


class NotACongruenceError(ValueError):
    """A partition fails one of the lattice congruence conditions."""
