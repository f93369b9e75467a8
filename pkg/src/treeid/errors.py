"""Exception hierarchy shared by every treeid module."""

from __future__ import annotations


class TreeIdError(Exception):
    """Base class for all treeid errors."""


class ParseError(TreeIdError, ValueError):
    """Malformed edge-list or graph6 input."""


class InvalidGraph(TreeIdError, ValueError):
    """Self-loop, duplicate edge, or vertex id out of range."""


class Disconnected(TreeIdError, ValueError):
    pass


class NotATree(TreeIdError, ValueError):
    pass


class NotIdentifiable(TreeIdError, ValueError):
    """The graph has closed twins, so no identifying code exists."""


class DomainError(TreeIdError, ValueError):
    """An integer argument lies outside the documented domain."""


class DegreeDomain(DomainError):
    pass


class ParameterDomain(DomainError):
    pass


class ExcludedInstance(TreeIdError, ValueError):
    """The input is an explicitly excluded instance (P4 for the domination bound)."""


class InvalidInputCertificate(TreeIdError, ValueError):
    pass


class InternalBoundViolation(TreeIdError, RuntimeError):
    """A search under a provably sufficient budget failed: an implementation bug."""


class BudgetExceeded(TreeIdError, RuntimeError):
    """The solver ran out of nodes before proving optimality.

    ``result`` carries the partial :class:`~treeid.solvers.SolveResult` and
    ``key`` optionally names the offending instance (a canonical form).
    """

    def __init__(self, message: str, result=None, key: str | None = None):
        super().__init__(message)
        self.result = result
        self.key = key
