"""Exception classes shared across the package.

The CLI maps these onto distinct exit codes, so raising the right class
matters: configuration problems, data validation problems, and numeric
failures are reported differently to callers and scripts.
"""


class KayaStockError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(KayaStockError):
    """Bad or missing configuration: unresolvable paths, unknown plan names,
    malformed config or scenario files, wrong invocation order."""


class DataValidationError(KayaStockError):
    """Input data violates a declared contract: malformed cells, gaps,
    duplicate sectors, unmapped sectors, inconsistent spans."""


class NumericError(KayaStockError):
    """A numeric procedure failed: infeasible scenario parameters or a
    calibration that cannot proceed."""


class InfeasibleScenarioError(NumericError):
    """Scenario parameters imply a savings rate at or above one, leaving
    non-positive consumption."""
