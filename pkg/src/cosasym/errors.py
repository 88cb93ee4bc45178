"""Exception hierarchy shared by all cosasym modules."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (e.g. gamma at 0, -1, ...)."""


class SingularityError(DomainError):
    """A cotangent pole was hit or crossed (|x| >= 2*pi)."""


class BudgetError(RuntimeError):
    """The requested truncation budget cannot be met within the hard caps."""
