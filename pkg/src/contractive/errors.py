"""Exception hierarchy for the contractive package."""


class ContractiveError(Exception):
    """Base class for all domain errors raised by this package."""


class NonPositiveParameter(ContractiveError):
    """A parameter that must be strictly positive was zero or negative."""


class DegenerateNorm(ContractiveError):
    """Destructive interference left the state with a vanishing norm."""


class NonPositiveTime(ContractiveError):
    """A relative-variance evaluation was requested at a non-positive time."""


class ZeroXi(ContractiveError):
    """The absolute-variance optimal time is undefined at zero correlation."""


class InvalidBeta(ContractiveError):
    """The measurement-family scale parameter must exceed one."""


class ZeroOutcome(ContractiveError):
    """No family member exists for a zero position outcome."""


class GridTooSmall(ContractiveError):
    """The sampled wave function does not decay before the grid boundary."""


class NoFiniteEvaluation(ContractiveError):
    """The objective was non-finite at every seed point of the search."""


class ConfigError(ContractiveError):
    """A run configuration file or command line was invalid."""
