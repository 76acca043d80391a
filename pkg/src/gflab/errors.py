"""Error taxonomy shared across the library.

Every raised condition maps to one of these classes so callers (and the CLI
exit-code contract) can tell configuration mistakes apart from numerical
failures.
"""


class GflabError(Exception):
    """Base class for all library errors."""


class ConfigError(GflabError):
    """Invalid construction parameters or incompatible objects."""


class ValidityError(GflabError):
    """Claim parameters outside the claim's validity domain."""


class PoleError(GflabError):
    """Gamma evaluated at (or within tolerance of) a non-positive integer."""


class DomainError(GflabError):
    """Function argument outside its mathematical domain."""


class QuadratureError(GflabError):
    """Adaptive quadrature failed to meet its error target."""


class IllConditionedError(GflabError):
    """Least-squares system condition estimate exceeds the safe bound."""
