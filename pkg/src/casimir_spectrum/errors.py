"""Exception types shared across the package."""

from __future__ import annotations


class InvalidCartanType(ValueError):
    """Unknown series letter, or rank outside the valid range for a series."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured size budget."""


class NotModuleCharacter(ValueError):
    """A weight map cannot be the character of a finite-dimensional module."""


class MismatchedRootSystems(ValueError):
    """Characters over different root systems were combined."""


class StrategyDisagreement(RuntimeError):
    """Independent spectrum strategies returned different answers.

    This never happens for a correct implementation; it signals a bug, not a
    property of the input.
    """
