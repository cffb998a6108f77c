"""Exception types.  Every message is prefixed with the module that raised it."""


class HeckeError(Exception):
    """Base class for domain errors raised by affine_hecke."""

    def __init__(self, module, message):
        self.module = module
        self.message = message
        super().__init__(f"{module}: {message}")


class ConfigError(HeckeError):
    """A configuration violates one or more invariants.

    ``violations`` lists every failed check, not just the first.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("config", "; ".join(self.violations))


class DefinitenessError(HeckeError):
    pass


class SemigroupError(HeckeError):
    pass


class InvarianceError(HeckeError):
    pass


class UnsupportedDatumError(HeckeError):
    pass


class GradingError(HeckeError):
    pass
